"""The forgetful map from Hodge polynomials to Poincaré polynomials.

``f`` sends ``x, y -> t`` and ``z -> z^2``, so ``b_k = sum_{p+q=k} h^{p,q}``.
Its kernel is the principal ideal generated by
``G = 4 CP^2 - 3 L^2 + E^2 - 2 E L = (x^2 - 2xy + y^2) z^2``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InputError
from .hodge import HodgePolynomial, betti_specialize, hodge_basis, hodge_G, hodge_rank, ideal_submodule, kernel_submodule
from .intlinalg import Submodule, kernel
from .poincare import PoincarePolynomial, poincare_rank

G = hodge_G()


def forget_f(H: HodgePolynomial) -> PoincarePolynomial:
    return betti_specialize(H)


def _f_direct(H: HodgePolynomial) -> PoincarePolynomial:
    n = H.dimension
    betti = [0] * (2 * n + 1)
    for p, row in enumerate(H.table):
        for q, v in enumerate(row):
            betti[p + q] += v
    return PoincarePolynomial(2 * n, betti)


@lru_cache(maxsize=None)
def f_matrix(n: int) -> tuple:
    """Matrix of ``f`` from fundamental coordinates of degree ``n`` to ``e_k`` coordinates of degree ``2n``."""
    cols = [_f_direct(B).coordinates() for B in hodge_basis(n)]
    return tuple(tuple(c[i] for c in cols) for i in range(poincare_rank(2 * n)))


def f_image(n: int) -> Submodule:
    """Image of ``f`` in degree ``2n`` as a sublattice of ``e_k`` coordinates."""
    cols = [_f_direct(B).coordinates() for B in hodge_basis(n)]
    return Submodule(poincare_rank(2 * n), cols)


def kernel_f_linear(n: int) -> Submodule:
    """``ker(f)`` on the degree-``n`` piece, by linear algebra on :func:`f_matrix`."""
    return kernel([list(r) for r in f_matrix(n)], ncols=hodge_rank(n))


def kernel_f(n: int, variant: str = "full") -> Submodule:
    """``(G)`` in degree ``n`` (``full``) or ``ker(f) ∩ ker(signature)`` (``intersect_signature``)."""
    if n < 0:
        raise InputError("dimension must be non-negative")
    if variant == "full":
        return ideal_submodule("G_ideal", n)
    if variant == "intersect_signature":
        return kernel_f_linear(n).intersect(kernel_submodule("signature", n))
    raise InputError(f"unknown kernel variant {variant!r}")

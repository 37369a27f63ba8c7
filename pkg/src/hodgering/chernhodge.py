"""The rational Chern-Hodge ring.

In degree ``n`` this is the subspace of pairs ``(H, c)`` (a rational Hodge
polynomial and a rational complex bordism class) with ``chi(H) = Td(c)``.
Vectors live in the ambient space ``QQ^{N} + QQ^{p(n)}``: the fundamental
Hodge coordinates followed by the projective-monomial bordism coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .bordism import (
    BordismClassQ,
    chern_functional_weights,
    partition_count,
    partitions,
    pontryagin_matrix,
    todd_genus,
    todd_matrix,
)
from .comparison import f_matrix
from .errors import InputError, InternalInvariantError
from .exactring import QQ, Polynomial
from .hodge import (
    HodgePolynomial,
    b_matrix,
    chi_genus,
    chi_matrix,
    decompose_ELS,
    elliptic_curve,
    fundamental_cells,
    hodge_rank,
    point,
    projective_line,
    projective_space,
)
from .intlinalg import Submodule, kernel, primitive


def ch_rank(n: int) -> int:
    return ((n + 2) // 2) * ((n + 1) // 2) + partition_count(n)


def ambient_rank(n: int) -> int:
    return hodge_rank(n) + partition_count(n)


class ChernHodgeElementQ:
    __slots__ = ("dimension", "hodge", "bordism")

    def __init__(self, hodge: HodgePolynomial, bordism: BordismClassQ, check: bool = True):
        if hodge.dimension != bordism.dimension:
            raise InputError("Hodge and bordism parts have different dimensions")
        if check and chi_genus(hodge) != todd_genus(bordism):
            raise InputError("not in the Chern-Hodge ring: chi of the Hodge part differs from Td of the bordism part")
        self.dimension = hodge.dimension
        self.hodge = hodge
        self.bordism = bordism

    @classmethod
    def from_vector(cls, n: int, v: Sequence, check: bool = True) -> "ChernHodgeElementQ":
        N = hodge_rank(n)
        if len(v) != ambient_rank(n):
            raise InputError(f"expected {ambient_rank(n)} coordinates, got {len(v)}")
        return cls(HodgePolynomial.from_coordinates(n, list(v[:N])), BordismClassQ(n, list(v[N:])), check)

    @classmethod
    def one(cls) -> "ChernHodgeElementQ":
        return cls(point(), BordismClassQ.monomial(()))

    def vector(self) -> list:
        return [Fraction(x) for x in self.hodge.coordinates()] + list(self.bordism.coordinates)

    def is_zero(self) -> bool:
        return self.hodge.is_zero() and self.bordism.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ChernHodgeElementQ):
            return NotImplemented
        return self.hodge == other.hodge and self.bordism == other.bordism

    def __hash__(self):
        return hash((self.hodge, self.bordism))

    def __add__(self, other):
        return ChernHodgeElementQ(self.hodge + other.hodge, self.bordism + other.bordism, check=False)

    def __neg__(self):
        return ChernHodgeElementQ(-self.hodge, -self.bordism, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ChernHodgeElementQ(self.hodge * other, self.bordism * other, check=False)
        if not isinstance(other, ChernHodgeElementQ):
            return NotImplemented
        return ChernHodgeElementQ(self.hodge * other.hodge, self.bordism * other.bordism, check=False)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        out = ChernHodgeElementQ.one()
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self):
        return f"ChernHodgeElementQ({self.hodge}, {self.bordism!r})"

    def to_json(self) -> dict:
        return {"hodge": self.hodge.to_json(), "bordism": self.bordism.to_json()}


# ---------------------------------------------------------------------------
# the diagonal subspace and its ideals


@lru_cache(maxsize=None)
def diagonal_rows(n: int) -> tuple:
    """Rows of ``(H, c) -> chi(H) - Td(c)`` on the ambient space."""
    C = chi_matrix(n)
    T = todd_matrix(n)
    return tuple(tuple(C[i]) + tuple(-x for x in T[i]) for i in range(len(C)))


@lru_cache(maxsize=None)
def ch_subspace(n: int) -> Submodule:
    return kernel([list(r) for r in diagonal_rows(n)], ncols=ambient_rank(n), domain=QQ)


def ch_basis_q(n: int) -> list:
    """A QQ-basis of the degree-``n`` piece (primitive integral vectors where possible)."""
    out = [ChernHodgeElementQ.from_vector(n, primitive(v), check=False) for v in ch_subspace(n).basis]
    if len(out) != ch_rank(n):
        raise InternalInvariantError(f"Chern-Hodge rank {len(out)} differs from {ch_rank(n)} in degree {n}")
    return out


def _pad_hodge(rows, n: int) -> list:
    p = partition_count(n)
    return [list(r) + [0] * p for r in rows]


def _pad_bordism(rows, n: int) -> list:
    N = hodge_rank(n)
    return [[0] * N + list(r) for r in rows]


@lru_cache(maxsize=None)
def ch_ideal_q(which: str, n: int) -> Submodule:
    """Birational ideal, ``ker F`` or ``ker F~`` in degree ``n`` as a QQ-subspace of the ambient space.

    ``F~`` records the oriented bordism class; its kernel is taken through the
    Pontryagin numbers, which determine that class rationally.
    """
    rows = [list(r) for r in diagonal_rows(n)]
    if which == "birational":
        rows += _pad_hodge(b_matrix(n), n)
    elif which == "ker_F":
        rows += _pad_hodge(f_matrix(n), n)
    elif which == "ker_Ftilde":
        rows += _pad_hodge(f_matrix(n), n)
        rows += _pad_bordism(pontryagin_matrix(n), n)
    else:
        raise InputError(f"unknown ideal {which!r}")
    return kernel(rows, ncols=ambient_rank(n), domain=QQ)


# ---------------------------------------------------------------------------
# functionals


class MixedForm:
    """A linear form on the ambient space built from Hodge and Chern coefficients."""

    __slots__ = ("dimension", "weights")

    def __init__(self, dimension: int, weights: Sequence):
        self.dimension = dimension
        self.weights = tuple(Fraction(w) for w in weights)

    def __call__(self, x) -> Fraction:
        v = x.vector() if isinstance(x, ChernHodgeElementQ) else x
        return sum((w * a for w, a in zip(self.weights, v)), Fraction(0))

    def is_zero_on(self, space: Submodule) -> bool:
        return all(self(b) == 0 for b in space.basis)

    def is_zero_on_ch(self) -> bool:
        return self.is_zero_on(ch_subspace(self.dimension))


def functional_on_ch(hodge_coeffs: Mapping, chern_coeffs: Mapping, n: int) -> MixedForm:
    """``(H, c) -> sum a_pq h^{p,q}(H) + sum b_mu c_mu(c)``.

    Hodge coefficients are indexed by fundamental cells, Chern coefficients by
    partitions of ``n``.
    """
    cells = {c: i for i, c in enumerate(fundamental_cells(n))}
    w = [Fraction(0)] * ambient_rank(n)
    for cell, a in hodge_coeffs.items():
        cell = tuple(cell)
        if cell not in cells:
            raise InputError(f"cell {cell} is not in the fundamental domain of dimension {n}")
        w[cells[cell]] += Fraction(a)
    N = hodge_rank(n)
    for j, x in enumerate(chern_functional_weights(n, chern_coeffs)):
        w[N + j] += x
    return MixedForm(n, w)


def chi_minus_todd_form(n: int, p: int) -> MixedForm:
    """The form ``chi_p - Td_p``, which vanishes identically on the Chern-Hodge ring."""
    if not 0 <= p <= n // 2:
        raise InputError(f"p must lie in 0..{n // 2}")
    return MixedForm(n, diagonal_rows(n)[p])


# ---------------------------------------------------------------------------
# presentation check


def generator_elements() -> dict:
    """``E``, ``L = CP^1`` and ``S = CP^2`` as Chern-Hodge elements."""
    return {
        "E": ChernHodgeElementQ(elliptic_curve(), BordismClassQ.zero(1)),
        "L": ChernHodgeElementQ(projective_line(), BordismClassQ.monomial((1,))),
        "S": ChernHodgeElementQ(projective_space(2), BordismClassQ.monomial((2,))),
    }


def projective_element(i: int) -> ChernHodgeElementQ:
    return ChernHodgeElementQ(projective_space(i), BordismClassQ.monomial((i,)) if i else BordismClassQ.monomial(()))


def evaluate_els(q: Polynomial, n: int) -> ChernHodgeElementQ:
    gens = generator_elements()
    total = ChernHodgeElementQ(HodgePolynomial.zero(n), BordismClassQ.zero(n), check=False)
    names = q.ring.names
    for exps, c in q.dense_terms().items():
        term = ChernHodgeElementQ.one()
        for name, e in zip(names, exps):
            term = term * gens[name] ** e
        total = total + term * c
    return total


def presentation_defect(i: int) -> ChernHodgeElementQ:
    """``CP^i - P_i(E, CP^1, CP^2)`` where ``P_i`` decomposes the Hodge polynomial of ``CP^i``."""
    P_i = decompose_ELS(projective_space(i))
    return projective_element(i) - evaluate_els(P_i, i)


def presentation_check(i: int) -> dict:
    D = presentation_defect(i)
    product = generator_elements()["E"] * D
    in_ch = ch_subspace(i).contains(D.vector())
    return {
        "degree": i,
        "defect_nonzero": not D.is_zero(),
        "defect_hodge_zero": D.hodge.is_zero(),
        "defect_in_ch": in_ch,
        "product_zero": product.is_zero(),
    }

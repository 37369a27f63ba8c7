"""The oriented Poincaré ring and its Kähler subring.

Elements of degree ``n`` are Betti vectors ``b_0..b_n`` with ``b_i = b_{n-i}``
and ``b_{n/2}`` even when ``n = 2 mod 4``; the augmented polynomial is
``sum b_i t^i z^n``.  As a ring it is generated by ``W, X, Y, Z`` (degrees
1..4) subject to ``WX = 2Y``, ``X^2 = 4Z``, ``XY = 2WZ``, ``Y^2 = W^2 Z``.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import InputError, InternalInvariantError, ValidationError
from .exactring import QQ, ZZ, PolyRing, Polynomial
from .intlinalg import SmithSolver, Submodule
from .serialize import decode_number, encode_number

POINCARE_RING = PolyRing("t z", (0, 1))
WXYZ_RING = PolyRing("W X Y Z", (1, 2, 3, 4))
KAHLER_RING = PolyRing("L E CP2", (1, 1, 2))


class PoincarePolynomial:
    __slots__ = ("dimension", "betti")

    def __init__(self, dimension: int, betti: Sequence):
        self.dimension = dimension
        self.betti = tuple(betti)

    @classmethod
    def validated(cls, n: int, betti: Sequence) -> "PoincarePolynomial":
        if n < 0:
            raise InputError("dimension must be non-negative")
        if len(betti) != n + 1:
            raise ValidationError(f"a dimension-{n} Betti vector has {n + 1} entries, got {len(betti)}")
        for i in range(n + 1):
            if betti[i] != betti[n - i]:
                raise ValidationError(f"b_{i}={betti[i]} but b_{n - i}={betti[n - i]}")
        if n % 4 == 2 and betti[n // 2] % 2:
            raise ValidationError(f"b_{n // 2}={betti[n // 2]} must be even in dimension {n}")
        return cls(n, betti)

    @classmethod
    def zero(cls, n: int) -> "PoincarePolynomial":
        return cls(n, [0] * (n + 1))

    @classmethod
    def from_polynomial(cls, poly: Polynomial) -> "PoincarePolynomial":
        if poly.ring.names != POINCARE_RING.names:
            raise InputError("expected a polynomial in t, z")
        n = poly.weighted_degree()
        if n is None:
            raise InputError("the zero polynomial has no well-defined dimension")
        betti = [0] * (n + 1)
        for (k, _), c in poly.dense_terms().items():
            if k > n:
                raise ValidationError(f"term t^{k} exceeds dimension {n}")
            betti[k] = c
        return cls.validated(n, betti)

    @classmethod
    def from_coordinates(cls, n: int, coords: Sequence) -> "PoincarePolynomial":
        """Inverse of :meth:`coordinates` (coefficients in the ``e_k`` basis)."""
        if len(coords) != poincare_rank(n):
            raise InputError(f"expected {poincare_rank(n)} coordinates, got {len(coords)}")
        out = PoincarePolynomial.zero(n)
        for c, e in zip(coords, e_basis(n)):
            out = out + e * c
        return out

    def coordinates(self) -> list:
        n, b = self.dimension, self.betti
        coords = [b[k] for k in range((n + 1) // 2)]
        if n % 2 == 0:
            coords.append(b[n // 2] if n % 4 == 0 else b[n // 2] // 2)
        return coords

    def euler(self):
        return sum((-1) ** i * v for i, v in enumerate(self.betti))

    def to_polynomial(self) -> Polynomial:
        n = self.dimension
        return Polynomial(POINCARE_RING, {((0, k), (1, n)): v for k, v in enumerate(self.betti) if v})

    def is_zero(self) -> bool:
        return not any(self.betti)

    def __eq__(self, other):
        if not isinstance(other, PoincarePolynomial):
            return NotImplemented
        return self.dimension == other.dimension and self.betti == other.betti

    def __hash__(self):
        return hash((self.dimension, self.betti))

    def __add__(self, other):
        if not isinstance(other, PoincarePolynomial) or other.dimension != self.dimension:
            raise InputError("Poincaré polynomials of different dimensions")
        return PoincarePolynomial(self.dimension, [a + b for a, b in zip(self.betti, other.betti)])

    def __neg__(self):
        return PoincarePolynomial(self.dimension, [-a for a in self.betti])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return PoincarePolynomial(self.dimension, [a * other for a in self.betti])
        if not isinstance(other, PoincarePolynomial):
            return NotImplemented
        n = self.dimension + other.dimension
        out = [0] * (n + 1)
        for i, a in enumerate(self.betti):
            if a:
                for j, b in enumerate(other.betti):
                    out[i + j] += a * b
        return PoincarePolynomial(n, out)

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __repr__(self):
        return f"PoincarePolynomial({self})"

    def __str__(self):
        return str(self.to_polynomial()) if not self.is_zero() else "0"

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "betti": [encode_number(b) for b in self.betti]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "PoincarePolynomial":
        try:
            n = int(obj["dimension"])
            raw = obj["betti"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed Poincaré polynomial JSON: {exc}") from None
        return validate_poincare(raw, n)


def validate_poincare(raw: Sequence, n: int) -> PoincarePolynomial:
    return PoincarePolynomial.validated(n, [decode_number(v, allow_fraction=False) for v in raw])


def poincare_rank(n: int) -> int:
    return (n + 2) // 2


@lru_cache(maxsize=None)
def _e_basis(n: int) -> tuple:
    out = []
    for k in range((n + 1) // 2):
        b = [0] * (n + 1)
        b[k] += 1
        b[n - k] += 1
        out.append(PoincarePolynomial(n, b))
    if n % 2 == 0:
        b = [0] * (n + 1)
        b[n // 2] = 1 if n % 4 == 0 else 2
        out.append(PoincarePolynomial(n, b))
    return tuple(out)


def e_basis(n: int) -> list:
    """``e_k = (t^k + t^{n-k}) z^n`` for ``k < n/2`` plus the middle element."""
    if n < 0:
        raise InputError("dimension must be non-negative")
    return list(_e_basis(n))


def point() -> PoincarePolynomial:
    return PoincarePolynomial(0, (1,))


# ---------------------------------------------------------------------------
# generators W, X, Y, Z and the rewriting system

GENERATOR_IMAGES = {
    "W": PoincarePolynomial(1, (1, 1)),
    "X": PoincarePolynomial(2, (0, 2, 0)),
    "Y": PoincarePolynomial(3, (0, 1, 1, 0)),
    "Z": PoincarePolynomial(4, (0, 0, 1, 0, 0)),
}

# (required exponents, coefficient, produced exponents), exponents in W, X, Y, Z order
_RULES = (
    ((1, 1, 0, 0), 2, (0, 0, 1, 0)),  # WX -> 2Y
    ((0, 2, 0, 0), 4, (0, 0, 0, 1)),  # X^2 -> 4Z
    ((0, 1, 1, 0), 2, (1, 0, 0, 1)),  # XY -> 2WZ
    ((0, 0, 2, 0), 1, (2, 0, 0, 1)),  # Y^2 -> W^2 Z
)


def is_normal_monomial(exps: Sequence[int]) -> bool:
    w, x, y, _ = exps
    if x == 0:
        return y <= 1
    return x == 1 and w == 0 and y == 0


@lru_cache(maxsize=None)
def normal_monomials(n: int) -> tuple:
    """Degree-``n`` monomials ``W^i Z^l``, ``X Z^l``, ``W^i Y Z^l`` in descending lex order."""
    out = []
    for l in range(n // 4 + 1):
        rest = n - 4 * l
        out.append((rest, 0, 0, l))
        if rest == 2:
            out.append((0, 1, 0, l))
        if rest >= 3:
            out.append((rest - 3, 0, 1, l))
    return tuple(sorted(out, reverse=True))


def _applicable(exps) -> list:
    return [r for r in _RULES if all(e >= need for e, need in zip(exps, r[0]))]


class WXYZNormalForm:
    """Integer coefficients over the normal monomials of one degree."""

    __slots__ = ("dimension", "coefficients")

    def __init__(self, dimension: int, coefficients: Mapping[tuple, int]):
        for m, c in coefficients.items():
            if not is_normal_monomial(m):
                raise InternalInvariantError(f"{m} is not a normal monomial")
        self.dimension = dimension
        self.coefficients = {tuple(m): c for m, c in coefficients.items() if c}

    def polynomial(self) -> Polynomial:
        return Polynomial(
            WXYZ_RING, {tuple((i, e) for i, e in enumerate(m) if e): c for m, c in self.coefficients.items()}
        )

    def coordinates(self) -> list:
        return [self.coefficients.get(m, 0) for m in normal_monomials(self.dimension)]

    def expand(self) -> PoincarePolynomial:
        return expand_WXYZ(self.polynomial(), self.dimension)

    def __eq__(self, other):
        if not isinstance(other, WXYZNormalForm):
            return NotImplemented
        return self.dimension == other.dimension and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.dimension, tuple(sorted(self.coefficients.items()))))

    def __repr__(self):
        return f"WXYZNormalForm({self})"

    def __str__(self):
        return str(self.polynomial())


def normal_form_I(q: Polynomial, strategy: str = "first", rng: random.Random | None = None) -> WXYZNormalForm:
    """Rewrite ``q`` onto the normal monomials with the four relations.

    ``strategy="first"`` always rewrites the largest non-normal monomial with
    the first applicable rule; ``strategy="random"`` picks both at random
    (used to test confluence).
    """
    if q.ring.names != WXYZ_RING.names:
        raise InputError("expected a polynomial in W, X, Y, Z")
    if q.ring.domain != ZZ:
        raise InputError("normal forms are computed over the integers")
    n = q.weighted_degree()
    if n is None:
        return WXYZNormalForm(0, {})
    if strategy == "random" and rng is None:
        rng = random.Random(0)
    elif strategy not in ("first", "random"):
        raise InputError(f"unknown rewrite strategy {strategy!r}")
    terms = dict(q.dense_terms())
    while True:
        pending = sorted(m for m, c in terms.items() if c and not is_normal_monomial(m))
        if not pending:
            break
        if strategy == "first":
            m = pending[-1]
            rule = _applicable(m)[0]
        else:
            m = rng.choice(pending)
            rule = rng.choice(_applicable(m))
        need, factor, produce = rule
        c = terms.pop(m)
        target = tuple(e - a + b for e, a, b in zip(m, need, produce))
        terms[target] = terms.get(target, 0) + factor * c
        if not terms[target]:
            del terms[target]
    return WXYZNormalForm(n, terms)


def expand_WXYZ(q: Polynomial, n: int | None = None) -> PoincarePolynomial:
    """Substitute the Poincaré polynomials of ``W, X, Y, Z`` into ``q``."""
    degree = q.weighted_degree()
    if degree is None:
        if n is None:
            raise InputError("the degree of the zero polynomial must be given")
        return PoincarePolynomial.zero(n)
    image = q.substitute({k: v.to_polynomial() for k, v in GENERATOR_IMAGES.items()}, ring=POINCARE_RING)
    if image.is_zero():
        return PoincarePolynomial.zero(degree)
    return PoincarePolynomial.from_polynomial(image)


def _monomial_image(exps: Sequence[int]) -> PoincarePolynomial:
    out = point()
    for name, e in zip("WXYZ", exps):
        for _ in range(e):
            out = out * GENERATOR_IMAGES[name]
    return out


@lru_cache(maxsize=None)
def _wxyz_solver(n: int) -> SmithSolver:
    cols = [_monomial_image(m).coordinates() for m in normal_monomials(n)]
    M = [[c[i] for c in cols] for i in range(poincare_rank(n))]
    return SmithSolver(M, len(cols))


def decompose_WXYZ(P: PoincarePolynomial) -> WXYZNormalForm:
    """The unique normal-form polynomial whose image is ``P``."""
    monos = normal_monomials(P.dimension)
    x = _wxyz_solver(P.dimension).solve(P.coordinates(), ZZ)
    if x is None:
        raise InternalInvariantError(f"no preimage for {P!r}")
    return WXYZNormalForm(P.dimension, dict(zip(monos, x)))


# ---------------------------------------------------------------------------
# the Kähler subring: image of the forgetful map

KAHLER_IMAGES = {
    "L": PoincarePolynomial(2, (1, 0, 1)),
    "E": PoincarePolynomial(2, (1, 2, 1)),
    "CP2": PoincarePolynomial(4, (1, 0, 1, 0, 1)),
}


def is_kahler(P: PoincarePolynomial) -> bool:
    """Even dimension and every odd-index Betti number even."""
    if P.dimension % 2:
        return False
    return all(b % 2 == 0 for b in P.betti[1::2])


def parity_lattice(n: int) -> Submodule:
    """The members of degree ``n`` as a sublattice of the ``e_k`` coordinates."""
    r = poincare_rank(n)
    if n % 2:
        return Submodule.zero(r)
    gens = []
    for i in range(r):
        v = [0] * r
        # coordinate i is b_i for i < n/2; the middle coordinate has no extra constraint
        v[i] = 2 if (i < n // 2 and i % 2 == 1) else 1
        gens.append(v)
    return Submodule(r, gens)


@lru_cache(maxsize=None)
def kahler_monomials(d: int) -> tuple:
    """``L^a E^e CP2^c`` with ``e <= 1`` and ``a + e + 2c = d``: a basis of the image in real degree ``2d``."""
    out = [(d - e - 2 * c, e, c) for e in (0, 1) for c in range((d - e) // 2 + 1) if d - e - 2 * c >= 0]
    return tuple(sorted(out, reverse=True))


def _kahler_image(exps) -> PoincarePolynomial:
    out = point()
    for name, e in zip(("L", "E", "CP2"), exps):
        for _ in range(e):
            out = out * KAHLER_IMAGES[name]
    return out


@lru_cache(maxsize=None)
def _kahler_solver(d: int) -> SmithSolver:
    cols = [_kahler_image(m).coordinates() for m in kahler_monomials(d)]
    M = [[c[i] for c in cols] for i in range(poincare_rank(2 * d))]
    return SmithSolver(M, len(cols))


def decompose_LECP2(P: PoincarePolynomial) -> Polynomial:
    """Canonical preimage in ``L, E, CP2`` with ``E``-degree at most one."""
    if not is_kahler(P):
        raise InputError(
            "not in the Kähler image: the dimension must be even and every odd-index Betti number even"
        )
    d = P.dimension // 2
    x = _kahler_solver(d).solve(P.coordinates(), ZZ)
    if x is None:
        raise InternalInvariantError(f"parity-admissible {P!r} has no integral preimage")
    return Polynomial(
        KAHLER_RING,
        {tuple((i, e) for i, e in enumerate(m) if e): c for m, c in zip(kahler_monomials(d), x) if c},
    )


def expand_LECP2(q: Polynomial, n: int | None = None) -> PoincarePolynomial:
    degree = q.weighted_degree()
    if degree is None:
        if n is None:
            raise InputError("the degree of the zero polynomial must be given")
        return PoincarePolynomial.zero(n)
    image = q.substitute({k: v.to_polynomial() for k, v in KAHLER_IMAGES.items()}, ring=POINCARE_RING)
    if image.is_zero():
        return PoincarePolynomial.zero(2 * degree)
    return PoincarePolynomial.from_polynomial(image)


def kahler_image(P: PoincarePolynomial, query: str = "membership"):
    if query == "membership":
        return is_kahler(P)
    if query == "decompose_LECP2":
        return decompose_LECP2(P)
    raise InputError(f"unknown query {query!r}")

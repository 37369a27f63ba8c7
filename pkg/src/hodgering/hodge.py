"""The Hodge ring: formal Hodge polynomials of compact Kähler manifolds.

An element of degree ``n`` is a table ``h[p][q]`` (``0 <= p, q <= n``) with
``h[q][p] == h[p][q] == h[n-p][n-q]``, identified with the augmented
polynomial ``sum h[p][q] x^p y^q z^n``.  The cells ``q <= p, p + q <= n``
(the fundamental domain) parametrize the degree-``n`` piece freely, and the
canonical ZZ-basis of that piece is indexed by them: the basis element for
``(p, q)`` is the sum of ``x^a y^b z^n`` over the symmetry orbit of
``(p, q)``.  Coordinates in this basis are therefore just the Hodge numbers
on the fundamental domain.

Generators: ``A = (1+xy)z``, ``B = (x+y)z``, ``C = xy z^2`` and
``E = (1+x)(1+y)z`` (elliptic curve), ``L = A`` (projective line), ``S``
any degree-2 element of signature +-1 (``CP^2`` by default).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import InputError, InternalInvariantError, ValidationError
from .exactring import QQ, ZZ, PolyRing, Polynomial
from .intlinalg import SmithSolver, Submodule, hermite_normal_form, kernel
from .serialize import decode_number, encode_number

HODGE_RING = PolyRing("x y z", (0, 0, 1))
HIR_RING = PolyRing("y z", (0, 1))
SIGNATURE_RING = PolyRing("z", (1,))
ABC_RING = PolyRing("A B C", (1, 1, 2))
ELS_RING = PolyRing("E L S", (1, 1, 2))


def _normalize(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v.numerator)
    if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
        raise InputError(f"Hodge numbers must be exact numbers, got {v!r}")
    return v


# ---------------------------------------------------------------------------
# cells


@lru_cache(maxsize=None)
def fundamental_cells(n: int) -> tuple:
    """Cells ``(p, q)`` with ``q <= p`` and ``p + q <= n`` in lexicographic order."""
    if n < 0:
        raise InputError("dimension must be non-negative")
    return tuple((p, q) for p in range(n + 1) for q in range(p + 1) if p + q <= n)


@lru_cache(maxsize=None)
def _cell_index(n: int) -> dict:
    return {c: i for i, c in enumerate(fundamental_cells(n))}


def orbit(p: int, q: int, n: int) -> frozenset:
    return frozenset({(p, q), (q, p), (n - p, n - q), (n - q, n - p)})


def canonical_cell(p: int, q: int, n: int) -> tuple:
    """The fundamental-domain representative of ``(p, q)`` under the Kähler symmetries."""
    if not (0 <= p <= n and 0 <= q <= n):
        raise InputError(f"cell ({p}, {q}) outside 0..{n}")
    if q > p:
        p, q = q, p
    if p + q > n:
        p, q = n - q, n - p
    return p, q


def hodge_rank(n: int) -> int:
    return ((n + 2) // 2) * ((n + 3) // 2)


# ---------------------------------------------------------------------------
# Hodge polynomials


class HodgePolynomial:
    """An element of the degree-``n`` piece of the Hodge ring."""

    __slots__ = ("dimension", "table")

    def __init__(self, dimension: int, table: Sequence[Sequence]):
        # no validation here; use the classmethods or validate_hodge
        self.dimension = dimension
        self.table = tuple(tuple(_normalize(v) for v in row) for row in table)

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_table(cls, n: int, rows: Sequence[Sequence]) -> "HodgePolynomial":
        if len(rows) != n + 1 or any(len(r) != n + 1 for r in rows):
            raise ValidationError(f"a dimension-{n} Hodge table must be {n + 1}x{n + 1}")
        H = cls(n, rows)
        H._check_symmetry()
        return H

    @classmethod
    def from_entries(cls, n: int, entries: Mapping[tuple, object], domain: str = "full") -> "HodgePolynomial":
        if n < 0:
            raise InputError("dimension must be non-negative")
        if domain == "fundamental":
            values: dict = {}
            source: dict = {}
            for (p, q), v in entries.items():
                cell = canonical_cell(p, q, n)
                v = _normalize(v)
                if cell in values and values[cell] != v:
                    a, b = source[cell]
                    raise ValidationError(
                        f"h^{{{a},{b}}}={values[cell]} and h^{{{p},{q}}}={v} lie in the same symmetry orbit"
                    )
                values[cell] = v
                source[cell] = (p, q)
            return cls.from_fundamental(n, values)
        if domain != "full":
            raise InputError(f"unknown table domain {domain!r}")
        rows = [[0] * (n + 1) for _ in range(n + 1)]
        for (p, q), v in entries.items():
            if not (0 <= p <= n and 0 <= q <= n):
                raise ValidationError(f"cell ({p}, {q}) outside 0..{n}")
            rows[p][q] = v
        return cls.from_table(n, rows)

    @classmethod
    def from_fundamental(cls, n: int, values: Mapping[tuple, object]) -> "HodgePolynomial":
        index = _cell_index(n)
        coords = [0] * len(index)
        for cell, v in values.items():
            if tuple(cell) not in index:
                raise InputError(f"cell {tuple(cell)} is not in the fundamental domain of dimension {n}")
            coords[index[tuple(cell)]] = v
        return cls.from_coordinates(n, coords)

    @classmethod
    def from_coordinates(cls, n: int, coords: Sequence) -> "HodgePolynomial":
        cells = fundamental_cells(n)
        if len(coords) != len(cells):
            raise InputError(f"expected {len(cells)} coordinates in dimension {n}, got {len(coords)}")
        rows = [[0] * (n + 1) for _ in range(n + 1)]
        for (p, q), v in zip(cells, coords):
            for a, b in orbit(p, q, n):
                rows[a][b] = v
        return cls(n, rows)

    @classmethod
    def from_polynomial(cls, poly: Polynomial) -> "HodgePolynomial":
        if poly.ring.names != HODGE_RING.names:
            raise InputError("expected a polynomial in x, y, z")
        if poly.is_zero():
            raise InputError("the zero polynomial has no well-defined dimension; use zero(n)")
        n = poly.weighted_degree()
        rows = [[0] * (n + 1) for _ in range(n + 1)]
        for (p, q, _), c in poly.dense_terms().items():
            if p > n or q > n:
                raise ValidationError(f"term x^{p}*y^{q} exceeds dimension {n}")
            rows[p][q] = c
        return cls.from_table(n, rows)

    @classmethod
    def zero(cls, n: int) -> "HodgePolynomial":
        return cls(n, [[0] * (n + 1) for _ in range(n + 1)])

    def _check_symmetry(self):
        n, h = self.dimension, self.table
        for p in range(n + 1):
            for q in range(n + 1):
                if h[p][q] != h[q][p]:
                    raise ValidationError(f"h^{{{p},{q}}}={h[p][q]} but h^{{{q},{p}}}={h[q][p]}")
                if h[p][q] != h[n - p][n - q]:
                    raise ValidationError(
                        f"h^{{{p},{q}}}={h[p][q]} but h^{{{n - p},{n - q}}}={h[n - p][n - q]}"
                    )

    # -- accessors -------------------------------------------------------

    def __getitem__(self, cell):
        p, q = cell
        return self.table[p][q]

    def coordinates(self) -> list:
        return [self.table[p][q] for p, q in fundamental_cells(self.dimension)]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.table)

    @property
    def is_integral(self) -> bool:
        return all(isinstance(v, int) for r in self.table for v in r)

    def __eq__(self, other):
        if not isinstance(other, HodgePolynomial):
            return NotImplemented
        return self.dimension == other.dimension and self.table == other.table

    def __hash__(self):
        return hash((self.dimension, self.table))

    def __repr__(self):
        return f"HodgePolynomial({self.to_polynomial()})" if not self.is_zero() else f"HodgePolynomial(0, n={self.dimension})"

    def __str__(self):
        return str(self.to_polynomial()) if not self.is_zero() else "0"

    # -- arithmetic ------------------------------------------------------

    def _same_dim(self, other):
        if not isinstance(other, HodgePolynomial):
            raise InputError(f"cannot combine a Hodge polynomial with {other!r}")
        if other.dimension != self.dimension:
            raise InputError(f"dimension mismatch: {self.dimension} vs {other.dimension}")

    def __add__(self, other):
        self._same_dim(other)
        return HodgePolynomial(
            self.dimension,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.table, other.table)],
        )

    def __neg__(self):
        return HodgePolynomial(self.dimension, [[-a for a in r] for r in self.table])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return HodgePolynomial(self.dimension, [[a * other for a in r] for r in self.table])
        if not isinstance(other, HodgePolynomial):
            return NotImplemented
        n = self.dimension + other.dimension
        rows = [[0] * (n + 1) for _ in range(n + 1)]
        for p1, r1 in enumerate(self.table):
            for q1, a in enumerate(r1):
                if not a:
                    continue
                for p2, r2 in enumerate(other.table):
                    for q2, b in enumerate(r2):
                        if b:
                            rows[p1 + p2][q1 + q2] += a * b
        return HodgePolynomial(n, rows)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        result = point()
        for _ in range(e):
            result = result * self
        return result

    # -- conversions -----------------------------------------------------

    def to_polynomial(self) -> Polynomial:
        ring = HODGE_RING if self.is_integral else HODGE_RING.with_domain(QQ)
        n = self.dimension
        return Polynomial(
            ring,
            {((0, p), (1, q), (2, n)): v for p, r in enumerate(self.table) for q, v in enumerate(r) if v},
        )

    def signature(self) -> int:
        """The signature, ``sum (-1)^p h^{p,q}``."""
        return sum((-1) ** p * v for p, r in enumerate(self.table) for v in r)

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "hodge": [[p, q, encode_number(self.table[p][q])] for p, q in fundamental_cells(self.dimension)],
            "domain": "fundamental",
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "HodgePolynomial":
        try:
            n = int(obj["dimension"])
            raw = obj["hodge"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed Hodge polynomial JSON: {exc}") from None
        return validate_hodge(raw, n, obj.get("domain", "full"))


def _parse_entries(raw) -> dict:
    if isinstance(raw, Mapping):
        items = raw.items()
    else:
        items = []
        for entry in raw:
            if len(entry) != 3:
                raise InputError(f"Hodge entries are [p, q, value] triples, got {entry!r}")
            items.append(((entry[0], entry[1]), entry[2]))
    out = {}
    for (p, q), v in items:
        try:
            key = (int(p), int(q))
        except (TypeError, ValueError):
            raise InputError(f"bad cell index ({p!r}, {q!r})") from None
        if key in out:
            raise InputError(f"cell {key} given twice")
        out[key] = decode_number(v) if not isinstance(v, (int, Fraction)) else v
    return out


def validate_hodge(raw, n: int, domain: str = "full", layout: str = "entries") -> HodgePolynomial:
    """Build a Hodge polynomial from raw input.

    With ``layout="entries"`` (the default) ``raw`` is a mapping
    ``(p, q) -> value`` or a list of ``[p, q, value]`` triples; with
    ``layout="table"`` it is a nested ``(n+1) x (n+1)`` list.  With
    ``domain="full"`` missing cells are zero and the symmetries are verified;
    with ``domain="fundamental"`` every given cell is reflected across its orbit.
    """
    if layout == "table":
        if domain != "full":
            raise InputError("a nested table always describes the full diamond")
        return HodgePolynomial.from_table(n, [[decode_number(v) for v in r] for r in raw])
    if layout != "entries":
        raise InputError(f"unknown layout {layout!r}")
    return HodgePolynomial.from_entries(n, _parse_entries(raw), domain)


# ---------------------------------------------------------------------------
# named elements


def point() -> HodgePolynomial:
    return HodgePolynomial(0, [[1]])


def hodge_A() -> HodgePolynomial:
    return HodgePolynomial(1, [[1, 0], [0, 1]])


def hodge_B() -> HodgePolynomial:
    return HodgePolynomial(1, [[0, 1], [1, 0]])


def hodge_C() -> HodgePolynomial:
    return HodgePolynomial(2, [[0, 0, 0], [0, 1, 0], [0, 0, 0]])


def elliptic_curve() -> HodgePolynomial:
    return HodgePolynomial(1, [[1, 1], [1, 1]])


def projective_line() -> HodgePolynomial:
    return hodge_A()


def projective_space(k: int) -> HodgePolynomial:
    """``CP^k``: ``h^{p,p} = 1`` for ``0 <= p <= k``."""
    return HodgePolynomial(k, [[int(p == q) for q in range(k + 1)] for p in range(k + 1)])


def projective_product(partition: Iterable[int]) -> HodgePolynomial:
    """Hodge polynomial of ``CP^{l_1} x ... x CP^{l_k}``."""
    result = point()
    for part in partition:
        result = result * projective_space(part)
    return result


def hodge_G() -> HodgePolynomial:
    """``4 CP^2 - 3 L^2 + E^2 - 2 E L``, stored expanded as ``(x^2 - 2xy + y^2) z^2``."""
    return HodgePolynomial(2, [[0, 0, 1], [0, -2, 0], [1, 0, 0]])


def hodge_basis(n: int) -> list:
    """Canonical ZZ-basis of the degree-``n`` piece, one element per fundamental cell."""
    cells = fundamental_cells(n)
    out = []
    for i in range(len(cells)):
        coords = [0] * len(cells)
        coords[i] = 1
        out.append(HodgePolynomial.from_coordinates(n, coords))
    return out


# ---------------------------------------------------------------------------
# Hirzebruch polynomials


class HirPolynomial:
    """``(chi_0 + chi_1 y + ... + chi_n y^n) z^n`` with ``chi_p = (-1)^n chi_{n-p}``."""

    __slots__ = ("dimension", "coefficients")

    def __init__(self, dimension: int, coefficients: Sequence):
        n = dimension
        coefficients = tuple(_normalize(c) for c in coefficients)
        if len(coefficients) != n + 1:
            raise ValidationError(f"a dimension-{n} Hirzebruch polynomial has {n + 1} coefficients")
        for p in range(n + 1):
            if coefficients[p] != (-1) ** n * coefficients[n - p]:
                raise ValidationError(
                    f"chi_{p}={coefficients[p]} but (-1)^{n} chi_{n - p}={(-1) ** n * coefficients[n - p]}"
                )
        self.dimension = n
        self.coefficients = coefficients

    @classmethod
    def from_coordinates(cls, n: int, coords: Sequence) -> "HirPolynomial":
        if len(coords) != n // 2 + 1:
            raise InputError(f"expected {n // 2 + 1} coordinates, got {len(coords)}")
        chi = [0] * (n + 1)
        for p, v in enumerate(coords):
            chi[p] = v
            chi[n - p] = (-1) ** n * v
        return cls(n, chi)

    @classmethod
    def from_polynomial(cls, poly: Polynomial) -> "HirPolynomial":
        if poly.ring.names != HIR_RING.names:
            raise InputError("expected a polynomial in y, z")
        raise_if = poly.is_zero()
        if raise_if:
            raise InputError("the zero polynomial has no well-defined dimension")
        n = poly.weighted_degree()
        chi = [0] * (n + 1)
        for (q, _), c in poly.dense_terms().items():
            chi[q] = c
        return cls(n, chi)

    def coordinates(self) -> list:
        return list(self.coefficients[: self.dimension // 2 + 1])

    def to_polynomial(self) -> Polynomial:
        integral = all(isinstance(c, int) for c in self.coefficients)
        ring = HIR_RING if integral else HIR_RING.with_domain(QQ)
        n = self.dimension
        return Polynomial(ring, {((0, q), (1, n)): c for q, c in enumerate(self.coefficients) if c})

    def at_y(self, y) -> object:
        return sum(c * y**q for q, c in enumerate(self.coefficients))

    def __eq__(self, other):
        if not isinstance(other, HirPolynomial):
            return NotImplemented
        return self.dimension == other.dimension and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.dimension, self.coefficients))

    def __add__(self, other):
        if not isinstance(other, HirPolynomial) or other.dimension != self.dimension:
            raise InputError("Hirzebruch polynomials of different dimensions")
        return HirPolynomial(self.dimension, [a + b for a, b in zip(self.coefficients, other.coefficients)])

    def __neg__(self):
        return HirPolynomial(self.dimension, [-a for a in self.coefficients])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return HirPolynomial(self.dimension, [a * other for a in self.coefficients])
        if not isinstance(other, HirPolynomial):
            return NotImplemented
        n = self.dimension + other.dimension
        out = [0] * (n + 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return HirPolynomial(n, out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"HirPolynomial({self})"

    def __str__(self):
        p = self.to_polynomial()
        return str(p) if p else "0"


def hir_rank(n: int) -> int:
    return (n + 2) // 2


# ---------------------------------------------------------------------------
# genus maps (by substitution)


def chi_genus(H: HodgePolynomial) -> HirPolynomial:
    """The Hirzebruch genus: set ``x = -1``."""
    if H.is_zero():
        return HirPolynomial(H.dimension, [0] * (H.dimension + 1))
    ring = HIR_RING if H.is_integral else HIR_RING.with_domain(QQ)
    y, z = ring.gens()
    image = H.to_polynomial().substitute({"x": -1, "y": y, "z": z}, ring=ring)
    if image.is_zero():
        return HirPolynomial(H.dimension, [0] * (H.dimension + 1))
    chi = HirPolynomial.from_polynomial(image)
    if chi.dimension != H.dimension:
        raise InternalInvariantError("genus changed the dimension")
    return chi


def signature_genus(H: HodgePolynomial) -> Polynomial:
    """The signature as an element of ``ZZ[z]``: set ``x = -1, y = 1``."""
    ring = SIGNATURE_RING if H.is_integral else SIGNATURE_RING.with_domain(QQ)
    (z,) = ring.gens()
    return H.to_polynomial().substitute({"x": -1, "y": 1, "z": z}, ring=ring)


def birational_b(H: HodgePolynomial) -> Polynomial:
    """``(h^{0,0} + h^{0,1} y + ... + h^{0,n} y^n) z^n``: set ``x = 0``."""
    ring = HIR_RING if H.is_integral else HIR_RING.with_domain(QQ)
    y, z = ring.gens()
    return H.to_polynomial().substitute({"x": 0, "y": y, "z": z}, ring=ring)


def betti_specialize(H: HodgePolynomial):
    """Set ``x = y = t`` and ``z -> z^2``; returns a Poincaré polynomial of dimension ``2n``."""
    from .poincare import POINCARE_RING, PoincarePolynomial

    ring = POINCARE_RING if H.is_integral else POINCARE_RING.with_domain(QQ)
    t, z = ring.gens()
    image = H.to_polynomial().substitute({"x": t, "y": t, "z": z * z}, ring=ring)
    betti = [0] * (2 * H.dimension + 1)
    for (k, _), c in image.dense_terms().items():
        betti[k] = c
    return PoincarePolynomial.validated(2 * H.dimension, betti)


def genus_maps(H: HodgePolynomial, which: str):
    """Dispatch to ``chi``, ``signature``, ``b`` or ``betti_specialize``."""
    table = {
        "chi": chi_genus,
        "signature": signature_genus,
        "b": birational_b,
        "betti_specialize": betti_specialize,
    }
    if which not in table:
        raise InputError(f"unknown genus map {which!r}")
    return table[which](H)


# ---------------------------------------------------------------------------
# the same maps as integer matrices on fundamental coordinates


def _map_matrix(n: int, fn, out_dim: int) -> list:
    cols = [fn(B) for B in hodge_basis(n)]
    return [[cols[j][i] for j in range(len(cols))] for i in range(out_dim)]


def _chi_coords(H: HodgePolynomial) -> list:
    n = H.dimension
    # chi_p = coefficient of y^p in H(-1, y)
    return [sum((-1) ** a * H.table[a][p] for a in range(n + 1)) for p in range(n // 2 + 1)]


def _b_coords(H: HodgePolynomial) -> list:
    return [H.table[0][q] for q in range(H.dimension + 1)]


@lru_cache(maxsize=None)
def chi_matrix(n: int) -> tuple:
    return tuple(map(tuple, _map_matrix(n, _chi_coords, n // 2 + 1)))


@lru_cache(maxsize=None)
def b_matrix(n: int) -> tuple:
    return tuple(map(tuple, _map_matrix(n, _b_coords, n + 1)))


@lru_cache(maxsize=None)
def signature_row(n: int) -> tuple:
    return tuple(B.signature() for B in hodge_basis(n))


# ---------------------------------------------------------------------------
# decompositions


def abc_monomials(n: int) -> list:
    """Exponents ``(a, b, c)`` with ``a + b + 2c = n`` in canonical (descending lex) order."""
    out = [(a, n - 2 * c - a, c) for c in range(n // 2 + 1) for a in range(n - 2 * c + 1)]
    return sorted(out, reverse=True)


def _expand_monomial(gens: Sequence[HodgePolynomial], exps: Sequence[int]) -> HodgePolynomial:
    result = point()
    for g, e in zip(gens, exps):
        for _ in range(e):
            result = result * g
    return result


@lru_cache(maxsize=None)
def _abc_solver(n: int) -> SmithSolver:
    gens = (hodge_A(), hodge_B(), hodge_C())
    cols = [_expand_monomial(gens, m).coordinates() for m in abc_monomials(n)]
    M = [[c[i] for c in cols] for i in range(hodge_rank(n))]
    return SmithSolver(M, len(cols))


def _decompose(H: HodgePolynomial, solver: SmithSolver, monomials, ring: PolyRing) -> Polynomial:
    domain = ZZ if H.is_integral else QQ
    x = solver.solve(H.coordinates(), domain)
    if x is None:
        raise InternalInvariantError(f"no integral preimage for {H!r}")
    if domain == QQ:
        ring = ring.with_domain(QQ)
    terms = {}
    for exps, c in zip(monomials, x):
        if c:
            terms[tuple((i, e) for i, e in enumerate(exps) if e)] = c
    return Polynomial(ring, terms)


def decompose_ABC(H: HodgePolynomial) -> Polynomial:
    """The unique polynomial ``Q`` in ``A, B, C`` with ``H(Q) = H``."""
    return _decompose(H, _abc_solver(H.dimension), abc_monomials(H.dimension), ABC_RING)


def expand_ABC(Q: Polynomial, n: int | None = None) -> HodgePolynomial:
    """Substitute the Hodge polynomials of ``A, B, C`` into ``Q``.

    ``n`` is only needed when ``Q`` is zero.
    """
    images = {"A": hodge_A(), "B": hodge_B(), "C": hodge_C()}
    return _expand(Q, images, n)


def _expand(Q: Polynomial, images: Mapping[str, HodgePolynomial], n: int | None = None) -> HodgePolynomial:
    ring = HODGE_RING if Q.ring.domain == ZZ else HODGE_RING.with_domain(QQ)
    assignment = {k: Polynomial(ring, v.to_polynomial().terms) for k, v in images.items()}
    if Q.is_zero():
        if n is None:
            raise InputError("cannot expand the zero polynomial without a degree")
        return HodgePolynomial.zero(n)
    n = Q.weighted_degree()
    if n is None:
        raise InputError("cannot expand a non-homogeneous polynomial")
    image = Q.substitute(assignment, ring=ring)
    if image.is_zero():
        return HodgePolynomial.zero(n)
    return HodgePolynomial.from_polynomial(image)


def default_surface() -> HodgePolynomial:
    return projective_space(2)


def _check_surface(S: HodgePolynomial):
    if S.dimension != 2:
        raise InputError(f"S must have dimension 2, got {S.dimension}")
    if S.signature() not in (1, -1):
        raise InputError(f"S must have signature +-1, got {S.signature()}")


@lru_cache(maxsize=None)
def _els_solver(n: int, surface: HodgePolynomial) -> SmithSolver:
    gens = (elliptic_curve(), projective_line(), surface)
    cols = [_expand_monomial(gens, m).coordinates() for m in abc_monomials(n)]
    M = [[c[i] for c in cols] for i in range(hodge_rank(n))]
    return SmithSolver(M, len(cols))


def decompose_ELS(H: HodgePolynomial, S: HodgePolynomial | None = None) -> Polynomial:
    """The unique polynomial in ``E, L, S`` expanding to ``H``."""
    S = default_surface() if S is None else S
    _check_surface(S)
    return _decompose(H, _els_solver(H.dimension, S), abc_monomials(H.dimension), ELS_RING)


def expand_ELS(Q: Polynomial, S: HodgePolynomial | None = None, n: int | None = None) -> HodgePolynomial:
    S = default_surface() if S is None else S
    _check_surface(S)
    return _expand(Q, {"E": elliptic_curve(), "L": projective_line(), "S": S}, n)


# ---------------------------------------------------------------------------
# ideals and kernels


_IDEAL_GENERATORS = {
    "C_ideal": hodge_C,
    "E_ideal": elliptic_curve,
    "G_ideal": hodge_G,
}


def ideal_submodule(which: str, n: int) -> Submodule:
    """Degree-``n`` piece of the principal ideal ``(C)``, ``(E)`` or ``(G)``."""
    if which not in _IDEAL_GENERATORS:
        raise InputError(f"unknown ideal {which!r}")
    g = _IDEAL_GENERATORS[which]()
    d = n - g.dimension
    if d < 0:
        return Submodule.zero(hodge_rank(n))
    return Submodule(hodge_rank(n), [(g * B).coordinates() for B in hodge_basis(d)])


def ideal_basis(which: str, n: int) -> list:
    return [HodgePolynomial.from_coordinates(n, v) for v in ideal_submodule(which, n).basis]


def kernel_submodule(which: str, n: int) -> Submodule:
    """``ker(b)`` or ``ker(chi)`` on the degree-``n`` piece."""
    if which == "b":
        M = b_matrix(n)
    elif which == "chi":
        M = chi_matrix(n)
    elif which == "signature":
        M = (signature_row(n),)
    else:
        raise InputError(f"unknown map {which!r}")
    return kernel([list(r) for r in M], ncols=hodge_rank(n))


def curve_monomial_submodule(n: int) -> Submodule:
    """ZZ-span of the monomials ``E^a L^b S^c`` with ``a + b >= 1`` (``S = CP^2``)."""
    gens = (elliptic_curve(), projective_line(), default_surface())
    vecs = [_expand_monomial(gens, m).coordinates() for m in abc_monomials(n) if m[0] + m[1] >= 1]
    return Submodule(hodge_rank(n), vecs)

"""Rational complex bordism in projective-space monomial coordinates.

A class of dimension ``n`` is a rational vector indexed by the partitions of
``n``; the partition ``(l_1, ..., l_k)`` stands for ``CP^{l_1} x ... x CP^{l_k}``.
Chern and Pontryagin numbers of these monomials come from expanding the total
classes ``prod (1 + h_i)^{l_i + 1}`` and ``prod (1 + h_i^2)^{l_i + 1}`` truncated
at ``h_i^{l_i + 1}`` and reading off the coefficient of ``prod h_i^{l_i}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from .errors import InputError, InternalInvariantError
from .exactring import QQ
from .hodge import HirPolynomial, chi_genus, projective_product
from .intlinalg import solve_linear
from .serialize import decode_number, encode_number


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """Partitions of ``n`` as decreasing tuples, in reverse-lexicographic order."""
    if n < 0:
        raise InputError("cannot partition a negative number")

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def partition_count(n: int) -> int:
    return len(partitions(n))


def _as_partition(lam: Sequence[int]) -> tuple:
    lam = tuple(sorted((int(x) for x in lam), reverse=True))
    if any(x <= 0 for x in lam):
        raise InputError(f"partition parts must be positive: {lam}")
    return lam


def merge(a: Sequence[int], b: Sequence[int]) -> tuple:
    return tuple(sorted(tuple(a) + tuple(b), reverse=True))


# ---------------------------------------------------------------------------
# truncated total classes


def _truncated_product(a: dict, b: dict, bounds: tuple) -> dict:
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            if all(e <= m for e, m in zip(k, bounds)):
                out[k] = out.get(k, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def _graded_pieces(lam: tuple, step: int) -> dict:
    """Degree pieces of ``prod (1 + h_i^step)^{l_i + 1}``, keyed by total ``h``-degree / step."""
    k = len(lam)
    total = {(0,) * k: 1}
    for i, l in enumerate(lam):
        factor = {}
        for j in range(l + 2):
            if step * j <= l:
                key = [0] * k
                key[i] = step * j
                factor[tuple(key)] = comb(l + 1, j)
        total = _truncated_product(total, factor, lam)
    pieces: dict = {}
    for key, v in total.items():
        d = sum(key) // step
        pieces.setdefault(d, {})[key] = v
    return pieces


def _char_number(pieces: dict, mu: tuple, lam: tuple) -> int:
    k = len(lam)
    prod = {(0,) * k: 1}
    for part in mu:
        piece = pieces.get(part)
        if not piece:
            return 0
        prod = _truncated_product(prod, piece, lam)
    return prod.get(lam, 0)


@dataclass(frozen=True)
class CharNumberVector:
    """Chern numbers (keyed by partitions of ``n``) or Pontryagin numbers (partitions of ``n/2``)."""

    dimension: int
    kind: str
    values: tuple  # ((partition, value), ...) in canonical partition order

    def __getitem__(self, mu):
        return dict(self.values)[_as_partition(mu)]

    def as_dict(self) -> dict:
        return dict(self.values)

    def vector(self) -> list:
        return [v for _, v in self.values]

    def to_json(self) -> list:
        return [{"partition": list(mu), "value": encode_number(v)} for mu, v in self.values]


@lru_cache(maxsize=None)
def _chern_numbers(lam: tuple) -> tuple:
    n = sum(lam)
    pieces = _graded_pieces(lam, 1)
    return tuple((mu, _char_number(pieces, mu, lam)) for mu in partitions(n))


@lru_cache(maxsize=None)
def _pontryagin_numbers(lam: tuple) -> tuple:
    n = sum(lam)
    if n % 2:
        return ()
    pieces = _graded_pieces(lam, 2)
    return tuple((mu, _char_number(pieces, mu, lam)) for mu in partitions(n // 2))


def chern_numbers(lam: Sequence[int]) -> CharNumberVector:
    """All Chern numbers ``c_mu`` of the monomial ``CP^lam``."""
    lam = _as_partition(lam)
    return CharNumberVector(sum(lam), "chern", _chern_numbers(lam))


def pontryagin_numbers(lam: Sequence[int]) -> CharNumberVector:
    """All Pontryagin numbers ``p_mu`` of ``CP^lam`` (empty unless the complex dimension is even)."""
    lam = _as_partition(lam)
    return CharNumberVector(sum(lam), "pontryagin", _pontryagin_numbers(lam))


@lru_cache(maxsize=None)
def chern_matrix(n: int) -> tuple:
    """``K[mu][lam] = c_mu[CP^lam]``; rows and columns both run over partitions of ``n``."""
    cols = [_chern_numbers(lam) for lam in partitions(n)]
    return tuple(tuple(col[i][1] for col in cols) for i in range(len(cols)))


@lru_cache(maxsize=None)
def pontryagin_matrix(n: int) -> tuple:
    """Rows: partitions of ``n/2``; columns: partitions of ``n``."""
    if n % 2:
        return ()
    cols = [_pontryagin_numbers(lam) for lam in partitions(n)]
    return tuple(tuple(col[i][1] for col in cols) for i in range(partition_count(n // 2)))


# ---------------------------------------------------------------------------
# classes


def _q(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class BordismClassQ:
    __slots__ = ("dimension", "coordinates")

    def __init__(self, dimension: int, coordinates: Sequence):
        if len(coordinates) != partition_count(dimension):
            raise InputError(f"a dimension-{dimension} class has {partition_count(dimension)} coordinates")
        self.dimension = dimension
        self.coordinates = tuple(_q(c) for c in coordinates)

    @classmethod
    def zero(cls, n: int) -> "BordismClassQ":
        return cls(n, [0] * partition_count(n))

    @classmethod
    def monomial(cls, lam: Sequence[int], coeff=1) -> "BordismClassQ":
        lam = _as_partition(lam)
        n = sum(lam)
        coords = [0] * partition_count(n)
        coords[partitions(n).index(lam)] = coeff
        return cls(n, coords)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping) -> "BordismClassQ":
        coords = [Fraction(0)] * partition_count(n)
        index = {lam: i for i, lam in enumerate(partitions(n))}
        for lam, c in mapping.items():
            lam = _as_partition(lam)
            if lam not in index:
                raise InputError(f"{list(lam)} is not a partition of {n}")
            coords[index[lam]] += _q(c)
        return cls(n, coords)

    def items(self):
        return [(lam, c) for lam, c in zip(partitions(self.dimension), self.coordinates) if c]

    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def __eq__(self, other):
        if not isinstance(other, BordismClassQ):
            return NotImplemented
        return self.dimension == other.dimension and self.coordinates == other.coordinates

    def __hash__(self):
        return hash((self.dimension, self.coordinates))

    def __add__(self, other):
        if not isinstance(other, BordismClassQ) or other.dimension != self.dimension:
            raise InputError("bordism classes of different dimensions")
        return BordismClassQ(self.dimension, [a + b for a, b in zip(self.coordinates, other.coordinates)])

    def __neg__(self):
        return BordismClassQ(self.dimension, [-a for a in self.coordinates])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return BordismClassQ(self.dimension, [a * other for a in self.coordinates])
        if not isinstance(other, BordismClassQ):
            return NotImplemented
        n = self.dimension + other.dimension
        out: dict = {}
        for la, a in self.items():
            for lb, b in other.items():
                key = merge(la, lb)
                out[key] = out.get(key, 0) + a * b
        return BordismClassQ.from_mapping(n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def chern_numbers(self) -> CharNumberVector:
        K = chern_matrix(self.dimension)
        vals = [sum(K[i][j] * c for j, c in enumerate(self.coordinates)) for i in range(len(K))]
        return CharNumberVector(self.dimension, "chern", tuple(zip(partitions(self.dimension), vals)))

    def pontryagin_numbers(self) -> CharNumberVector:
        n = self.dimension
        if n % 2:
            return CharNumberVector(n, "pontryagin", ())
        Pm = pontryagin_matrix(n)
        vals = [sum(Pm[i][j] * c for j, c in enumerate(self.coordinates)) for i in range(len(Pm))]
        return CharNumberVector(n, "pontryagin", tuple(zip(partitions(n // 2), vals)))

    def __repr__(self):
        if self.is_zero():
            return f"BordismClassQ(0, n={self.dimension})"
        return "BordismClassQ(" + " + ".join(f"{c}*CP{list(lam)}" for lam, c in self.items()) + ")"

    def to_json(self) -> list:
        return [{"partition": list(lam), "coeff": encode_number(c)} for lam, c in self.items()]


def parse_partition_coefficients(raw, n: int) -> dict:
    """Parse ``[{"partition": [...], "coeff": "p/q"}, ...]`` into ``{partition: Fraction}``."""
    out: dict = {}
    valid = set(partitions(n))
    for entry in raw or []:
        try:
            lam = _as_partition(entry["partition"])
            c = decode_number(entry["coeff"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed partition coefficient {entry!r}: {exc}") from None
        if lam not in valid:
            raise InputError(f"{list(lam)} is not a partition of {n}")
        out[lam] = out.get(lam, 0) + Fraction(c)
    return out


# ---------------------------------------------------------------------------
# Todd genus and the Hirzebruch ring


def hir_basis(n: int) -> list:
    """``y^p + (-1)^n y^{n-p}`` for ``p < n/2``, plus ``y^{n/2}`` when ``n`` is even."""
    out = []
    for p in range((n + 1) // 2):
        chi = [0] * (n + 1)
        chi[p] += 1
        chi[n - p] += (-1) ** n
        out.append(HirPolynomial(n, chi))
    if n % 2 == 0:
        chi = [0] * (n + 1)
        chi[n // 2] = 1
        out.append(HirPolynomial(n, chi))
    return out


@lru_cache(maxsize=None)
def todd_matrix(n: int) -> tuple:
    """Rows ``Td_0 .. Td_{n//2}``, columns partitions of ``n``."""
    cols = [chi_genus(projective_product(lam)).coordinates() for lam in partitions(n)]
    return tuple(tuple(c[i] for c in cols) for i in range(n // 2 + 1))


def todd_genus(c: BordismClassQ) -> HirPolynomial:
    T = todd_matrix(c.dimension)
    coords = [sum(T[i][j] * x for j, x in enumerate(c.coordinates)) for i in range(len(T))]
    return HirPolynomial.from_coordinates(c.dimension, coords)


@lru_cache(maxsize=None)
def todd_chern_coefficients(n: int, p: int) -> tuple:
    """Rational ``a_mu`` with ``Td_p = sum a_mu c_mu`` on dimension-``n`` classes."""
    if not 0 <= p <= n:
        raise InputError(f"Td_{p} is not defined in dimension {n}")
    # Td_p = (-1)^n Td_{n-p}
    sign = 1
    if p > n // 2:
        p, sign = n - p, (-1) ** n
    K = chern_matrix(n)
    Kt = [[K[i][j] for i in range(len(K))] for j in range(len(K))]
    target = [sign * v for v in todd_matrix(n)[p]]
    a = solve_linear(Kt, target, QQ)
    if a is None:
        raise InternalInvariantError("Chern numbers fail to determine rational bordism")
    return tuple(a)


def chern_functional_weights(n: int, chern_coeffs: Mapping) -> list:
    """Convert ``sum a_mu c_mu`` into weights on the monomial coordinates."""
    K = chern_matrix(n)
    index = {mu: i for i, mu in enumerate(partitions(n))}
    w = [Fraction(0)] * len(K)
    for mu, a in chern_coeffs.items():
        mu = _as_partition(mu)
        if mu not in index:
            raise InputError(f"{list(mu)} is not a partition of {n}")
        row = K[index[mu]]
        for j in range(len(w)):
            w[j] += _q(a) * row[j]
    return w


def s2(c: BordismClassQ) -> Fraction:
    """``c_1^2 - 2 c_2`` on a surface class."""
    if c.dimension != 2:
        raise InputError("s_2 is defined on dimension 2")
    ch = c.chern_numbers()
    return ch[(1, 1)] - 2 * ch[(2,)]


# ---------------------------------------------------------------------------
# oriented bordism


def even_partitions(n: int) -> tuple:
    """``2 mu`` for ``mu`` a partition of ``n/2``; these index ``CP^{2 mu_1} x ...``."""
    if n % 2:
        return ()
    return tuple(tuple(2 * x for x in mu) for mu in partitions(n // 2))


@dataclass(frozen=True)
class OrientedClassQ:
    dimension: int
    coordinates: tuple  # aligned with even_partitions(dimension)

    def items(self):
        return [(lam, c) for lam, c in zip(even_partitions(self.dimension), self.coordinates) if c]

    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def to_json(self) -> list:
        return [{"partition": list(lam), "coeff": encode_number(c)} for lam, c in self.items()]


@lru_cache(maxsize=None)
def _oriented_columns(n: int) -> tuple:
    # Pontryagin vectors of the monomials CP^{2 mu}
    index = {lam: j for j, lam in enumerate(partitions(n))}
    Pm = pontryagin_matrix(n)
    return tuple(tuple(Pm[i][index[lam]] for lam in even_partitions(n)) for i in range(len(Pm)))


def forget_oriented(c: BordismClassQ) -> OrientedClassQ:
    """Image in rational oriented bordism, matched through Pontryagin numbers."""
    n = c.dimension
    if n % 2:
        return OrientedClassQ(n, ())
    target = c.pontryagin_numbers().vector()
    M = [list(r) for r in _oriented_columns(n)]
    x = solve_linear(M, target, QQ, ncols=len(even_partitions(n)))
    if x is None:
        raise InternalInvariantError("Pontryagin numbers of even projective monomials are not independent")
    return OrientedClassQ(n, tuple(Fraction(v) for v in x))

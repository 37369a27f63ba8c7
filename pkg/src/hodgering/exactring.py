"""Sparse multivariate polynomials with exact coefficients and graded variables.

A :class:`PolyRing` fixes an ordered list of named indeterminates, each with a
non-negative integer weight, together with a scalar domain (``ZZ``, ``QQ`` or
``Zmod(m)``).  Polynomials are immutable; exponent vectors are stored sparsely
as sorted ``((index, exponent), ...)`` tuples.

>>> R = PolyRing("x y z", weights=(0, 0, 1))
>>> x, y, z = R.gens()
>>> A = (1 + x*y) * z
>>> print(A * A)
1 + 2*x*y + x^2*y^2 (z^2)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Union

from .errors import InputError

__all__ = [
    "Domain",
    "ZZ",
    "QQ",
    "Zmod",
    "PolyRing",
    "Polynomial",
]


class Domain:
    """A scalar domain: the integers, the rationals, or integers mod ``m``."""

    __slots__ = ("kind", "modulus")

    def __init__(self, kind: str, modulus: int = 0):
        if kind not in ("Z", "Q", "Zmod"):
            raise InputError(f"unknown scalar domain {kind!r}")
        if kind == "Zmod" and modulus < 2:
            raise InputError(f"Zmod needs a modulus >= 2, got {modulus}")
        self.kind = kind
        self.modulus = modulus if kind == "Zmod" else 0

    def __eq__(self, other):
        return (
            isinstance(other, Domain)
            and self.kind == other.kind
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        if self.kind == "Zmod":
            return f"Zmod({self.modulus})"
        return {"Z": "ZZ", "Q": "QQ"}[self.kind]

    @property
    def is_field(self) -> bool:
        if self.kind == "Q":
            return True
        if self.kind == "Z":
            return False
        m = self.modulus
        return all(m % d for d in range(2, int(m**0.5) + 1))

    def coerce(self, value):
        """Map an int or Fraction into this domain's canonical representative."""
        if isinstance(value, bool):
            value = int(value)
        if self.kind == "Q":
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
        elif isinstance(value, int):
            return value % self.modulus if self.kind == "Zmod" else value
        elif isinstance(value, Fraction):
            if self.kind == "Z":
                if value.denominator != 1:
                    raise InputError(f"{value} is not an integer")
                return int(value.numerator)
            inv = pow(value.denominator, -1, self.modulus)
            return (value.numerator * inv) % self.modulus
        raise InputError(f"cannot coerce {value!r} into {self!r}")

    def normalize(self, value):
        # fast path for values already produced by arithmetic in this domain
        if self.kind == "Zmod":
            return value % self.modulus
        return value


ZZ = Domain("Z")
QQ = Domain("Q")


def Zmod(m: int) -> Domain:
    return Domain("Zmod", m)


Scalar = Union[int, Fraction]


class PolyRing:
    """Ordered named indeterminates with weights over a scalar domain."""

    __slots__ = ("names", "weights", "domain", "_index")

    def __init__(self, names, weights: Sequence[int] | None = None, domain: Domain = ZZ):
        if isinstance(names, str):
            names = names.split()
        names = tuple(names)
        if len(set(names)) != len(names):
            raise InputError(f"duplicate variable names in {names}")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise InputError("one weight per variable is required")
        if any(w < 0 for w in weights):
            raise InputError("variable weights must be non-negative")
        self.names = names
        self.weights = weights
        self.domain = domain
        self._index = {name: i for i, name in enumerate(names)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.weights == other.weights
            and self.domain == other.domain
        )

    def __hash__(self):
        return hash((self.names, self.weights, self.domain))

    def __repr__(self):
        vs = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"PolyRing([{vs}], {self.domain!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"{name!r} is not a variable of {self!r}") from None

    def with_domain(self, domain: Domain) -> "PolyRing":
        return PolyRing(self.names, self.weights, domain)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(): c})

    def gen(self, name: str) -> "Polynomial":
        return Polynomial(self, {((self.index(name), 1),): 1})

    def gens(self) -> tuple:
        return tuple(self.gen(n) for n in self.names)

    def monomial(self, exponents: Mapping[str, int] | Sequence[int], coeff=1) -> "Polynomial":
        """Build ``coeff * prod(var^e)`` from a dense vector or a name mapping."""
        if isinstance(exponents, Mapping):
            items = [(self.index(k), int(e)) for k, e in exponents.items()]
        else:
            if len(exponents) != len(self.names):
                raise InputError("dense exponent vector has the wrong length")
            items = list(enumerate(int(e) for e in exponents))
        if any(e < 0 for _, e in items):
            raise InputError("exponents must be non-negative")
        key = tuple(sorted((i, e) for i, e in items if e))
        return Polynomial(self, {key: coeff})

    def dense(self, key) -> tuple:
        exps = [0] * len(self.names)
        for i, e in key:
            exps[i] = e
        return tuple(exps)


def _mul_keys(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for i, e in b:
        merged[i] = merged.get(i, 0) + e
    return tuple(sorted(merged.items()))


class Polynomial:
    """An immutable element of a :class:`PolyRing`."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, Scalar], _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self._terms = dict(terms)
        else:
            dom = ring.domain
            clean = {}
            for key, c in terms.items():
                c = dom.coerce(c)
                if c:
                    key = tuple(sorted((i, e) for i, e in key if e))
                    clean[key] = clean.get(key, 0) + c
            self._terms = {k: dom.normalize(v) for k, v in clean.items() if dom.normalize(v)}
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def terms(self) -> dict:
        """Mapping from sparse exponent keys to coefficients (a fresh copy)."""
        return dict(self._terms)

    def dense_terms(self) -> dict:
        return {self.ring.dense(k): c for k, c in self._terms.items()}

    def coefficient(self, exponents: Mapping[str, int] | Sequence[int]):
        key = next(iter(self.ring.monomial(exponents)._terms))
        return self._terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def term_degree(self, key: tuple) -> int:
        w = self.ring.weights
        return sum(e * w[i] for i, e in key)

    def degrees(self) -> set:
        """Set of weighted degrees of the terms."""
        return {self.term_degree(k) for k in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def weighted_degree(self) -> int | None:
        """Weighted degree of a homogeneous polynomial (None for zero)."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise InputError("polynomial is not homogeneous")
        return degs.pop()

    def sorted_terms(self) -> list:
        """Terms in canonical graded-lexicographic order."""
        w = self.ring.weights

        def key(item):
            dense = self.ring.dense(item[0])
            weighted = sum(e * w[i] for i, e in enumerate(dense))
            flat = sum(e for i, e in enumerate(dense) if w[i] == 0)
            return (weighted, flat, tuple(-e for e in dense))

        return sorted(self._terms.items(), key=key)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise InputError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        dom = self.ring.domain
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = dom.normalize(out.get(k, 0) + c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Polynomial(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        dom = self.ring.domain
        return Polynomial(self.ring, {k: dom.normalize(-c) for k, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        dom = self.ring.domain
        out: dict = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                k = _mul_keys(ka, kb)
                out[k] = out.get(k, 0) + ca * cb
        out = {k: dom.normalize(v) for k, v in out.items()}
        return Polynomial(self.ring, {k: v for k, v in out.items() if v}, _trusted=True)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        dom = self.ring.domain
        c = dom.coerce(c)
        if not c:
            return self.ring.zero()
        out = {k: dom.normalize(v * c) for k, v in self._terms.items()}
        return Polynomial(self.ring, {k: v for k, v in out.items() if v}, _trusted=True)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise InputError("only non-negative integer powers are supported")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self == self.ring.constant(other)
            except InputError:
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- homomorphisms ---------------------------------------------------

    def change_domain(self, domain: Domain) -> "Polynomial":
        """Reinterpret the coefficients in another domain (e.g. reduce mod m)."""
        return Polynomial(self.ring.with_domain(domain), self._terms)

    def reduce_mod(self, m: int) -> "Polynomial":
        return self.change_domain(Zmod(m))

    def substitute(self, assignment: Mapping[str, "Polynomial | Scalar"], ring: PolyRing | None = None) -> "Polynomial":
        """Evaluate the ring homomorphism sending each variable to its image.

        Every variable that occurs in the ring must be assigned.  Images are
        either polynomials of one common target ring or scalars; ``ring``
        fixes the target explicitly when all images are scalars.
        """
        missing = [n for n in self.ring.names if n not in assignment]
        if missing:
            raise InputError(f"unassigned variables: {', '.join(missing)}")
        targets = {v.ring for v in assignment.values() if isinstance(v, Polynomial)}
        if ring is None:
            if len(targets) > 1:
                raise InputError("assignment images live in different rings")
            ring = targets.pop() if targets else PolyRing((), (), self.ring.domain)
        elif targets - {ring}:
            raise InputError("assignment images do not live in the target ring")
        images = []
        for name in self.ring.names:
            v = assignment[name]
            images.append(v if isinstance(v, Polynomial) else ring.constant(v))
        powers: list[dict] = [{} for _ in images]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        total = ring.zero()
        for key, c in self._terms.items():
            term = ring.constant(c)
            for i, e in key:
                term = term * power(i, e)
                if not term:
                    break
            total = total + term
        return total

    # -- rendering -------------------------------------------------------

    def named_terms(self) -> dict:
        """``{"A^2": 1, "C": -1}`` in canonical order; the constant monomial is ``"1"``."""
        return {self._monomial_str(self.ring.dense(k)) or "1": c for k, c in self.sorted_terms()}


    def _monomial_str(self, dense, skip=()) -> str:
        parts = []
        for i, e in enumerate(dense):
            if e == 0 or i in skip:
                continue
            name = self.ring.names[i]
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def _terms_str(self, items, skip=()) -> str:
        out = []
        for key, c in items:
            mono = self._monomial_str(self.ring.dense(key), skip)
            neg = isinstance(c, (int, Fraction)) and c < 0 and self.ring.domain.kind != "Zmod"
            mag = -c if neg else c
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __str__(self):
        if not self._terms:
            return "0"
        items = self.sorted_terms()
        w = self.ring.weights
        # augmented generating functions: pull out the common positive-weight monomial
        if 0 in w and any(w):
            graded = {i for i, wi in enumerate(w) if wi > 0}
            denses = [self.ring.dense(k) for k, _ in items]
            factor = [d if i in graded else 0 for i, d in enumerate(denses[0])]
            shared = all(d[i] == factor[i] for d in denses for i in graded)
            if shared and any(factor):
                inner = self._terms_str(items, skip=graded)
                return f"{inner} ({self._monomial_str(factor)})"
        return self._terms_str(items)

    def __repr__(self):
        return f"Polynomial({self})"

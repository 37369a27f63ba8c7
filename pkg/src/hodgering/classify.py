"""Decide which linear combinations of Hodge, Betti and Chern numbers are invariants.

Each question reduces to "does the functional vanish (mod m) on a certain
lattice of differences"; the answer comes with a certificate.  A *yes* carries
coefficients expressing the functional through a named basis of obvious
invariants, a *no* carries an element of the lattice on which the functional
does not vanish.  Both are re-verified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .bordism import parse_partition_coefficients, partitions, pontryagin_matrix
from .chernhodge import (
    ChernHodgeElementQ,
    ambient_rank,
    ch_ideal_q,
    ch_subspace,
    diagonal_rows,
    functional_on_ch,
)
from .comparison import _f_direct, kernel_f
from .errors import InputError, InternalInvariantError, UnsupportedModeError
from .exactring import QQ, ZZ, Zmod
from .hodge import (
    HodgePolynomial,
    canonical_cell,
    chi_matrix,
    curve_monomial_submodule,
    default_surface,
    fundamental_cells,
    hodge_basis,
    hodge_rank,
    ideal_submodule,
    signature_row,
)
from .intlinalg import SmithSolver, Submodule, kernel, solve_linear
from .serialize import decode_number, encode_number

RATIONAL = -1


# ---------------------------------------------------------------------------
# input


@dataclass
class Functional:
    dimension: int
    modulus: int = 0
    hodge_coefficients: dict = field(default_factory=dict)
    betti_coefficients: dict = field(default_factory=dict)
    chern_coefficients: dict = field(default_factory=dict)
    halve_odd: bool = False

    def __post_init__(self):
        n = self.dimension
        if not isinstance(n, int) or n < 0:
            raise InputError("dimension must be a non-negative integer")
        if self.modulus != RATIONAL and (not isinstance(self.modulus, int) or self.modulus < 0):
            raise InputError("modulus must be a non-negative integer or 'rational'")
        cells = set(fundamental_cells(n))
        for cell in self.hodge_coefficients:
            if tuple(cell) not in cells:
                p, q = cell
                raise InputError(
                    f"h^{{{p},{q}}} is outside the fundamental domain 0 <= q <= p, p + q <= {n}"
                    f"; use h^{{{canonical_cell(p, q, n)[0]},{canonical_cell(p, q, n)[1]}}}"
                    if 0 <= p <= n and 0 <= q <= n
                    else f"h^{{{p},{q}}} is out of range for dimension {n}"
                )
        for k in self.betti_coefficients:
            if not 0 <= k <= 2 * n:
                raise InputError(f"b_{k} is out of range for real dimension {2 * n}")
        if self.halve_odd:
            for k, c in self.betti_coefficients.items():
                if k % 2 and k > n and c:
                    raise InputError(
                        f"b_{k}/2 is not part of the halved basis; odd indices must not exceed {n}"
                    )

    @property
    def rational(self) -> bool:
        return self.modulus == RATIONAL

    @classmethod
    def from_json(cls, obj: Mapping) -> "Functional":
        if not isinstance(obj, Mapping):
            raise InputError("a functional must be a JSON object")
        try:
            n = int(obj["dimension"])
        except (KeyError, TypeError, ValueError):
            raise InputError("functional needs an integer 'dimension'") from None
        raw_m = obj.get("modulus", 0)
        if raw_m == "rational":
            m = RATIONAL
        else:
            m = decode_number(raw_m, allow_fraction=False)
        hodge = {}
        for entry in obj.get("hodge_coefficients", []) or []:
            if not isinstance(entry, Sequence) or len(entry) != 3:
                raise InputError(f"hodge coefficients are [p, q, c] triples, got {entry!r}")
            key = (int(entry[0]), int(entry[1]))
            hodge[key] = hodge.get(key, 0) + decode_number(entry[2])
        betti = {}
        for entry in obj.get("betti_coefficients", []) or []:
            if not isinstance(entry, Sequence) or len(entry) != 2:
                raise InputError(f"betti coefficients are [k, c] pairs, got {entry!r}")
            k = int(entry[0])
            betti[k] = betti.get(k, 0) + decode_number(entry[1])
        chern = parse_partition_coefficients(obj.get("chern_coefficients"), n)
        return cls(n, m, hodge, betti, chern, bool(obj.get("halve_odd", False)))

    def to_json(self) -> dict:
        out = {
            "dimension": self.dimension,
            "modulus": "rational" if self.rational else self.modulus,
            "hodge_coefficients": [[p, q, encode_number(c)] for (p, q), c in sorted(self.hodge_coefficients.items())],
        }
        if self.betti_coefficients:
            out["betti_coefficients"] = [[k, encode_number(c)] for k, c in sorted(self.betti_coefficients.items())]
            out["halve_odd"] = self.halve_odd
        if self.chern_coefficients:
            out["chern_coefficients"] = [
                {"partition": list(mu), "coeff": encode_number(c)} for mu, c in self.chern_coefficients.items()
            ]
        return out


# ---------------------------------------------------------------------------
# output


@dataclass
class Verdict:
    question: str
    verdict: str  # "yes", "no" or "trivial"
    certificate: dict | None = None
    notes: list = field(default_factory=list)
    caveat: str | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "certificate": self.certificate}
        if self.notes:
            out["notes"] = list(self.notes)
        if self.caveat:
            out["caveat"] = self.caveat
        return out


@dataclass
class Report:
    kind: str
    dimension: int
    modulus: int
    verdicts: dict

    def __getitem__(self, question) -> Verdict:
        return self.verdicts[question]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "dimension": self.dimension,
            "modulus": "rational" if self.modulus == RATIONAL else self.modulus,
            "verdicts": {q: v.to_json() for q, v in self.verdicts.items()},
        }


# ---------------------------------------------------------------------------
# shared machinery


def _red(v, m: int):
    return v % m if m else v


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _domain(m: int):
    return ZZ if m == 0 else Zmod(m)


def _integral(values, what: str) -> list:
    out = []
    for v in values:
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise InputError(f"{what} must be integers unless the modulus is 'rational'")
            v = int(v)
        out.append(v)
    return out


def _decide(
    question: str,
    phi: Sequence[int],
    ideal: Submodule,
    invariants: Sequence[tuple],
    m: int,
    element,
) -> Verdict:
    """Vanishing of ``phi`` mod ``m`` on ``ideal`` plus a certificate.

    ``invariants`` is a list of ``(name, row)`` pairs spanning the invariant
    functionals; ``element`` turns an ideal vector into its JSON form.
    """
    if all(_red(a, m) == 0 for a in phi):
        names = [name for name, _ in invariants]
        return Verdict(question, "trivial", {"type": "reduction", "basis": names, "coefficients": {}})
    for v in ideal.basis:
        value = _dot(phi, v)
        if _red(value, m):
            if not ideal.contains(v):
                raise InternalInvariantError("violating element is not in the ideal")
            return Verdict(
                question,
                "no",
                {"type": "violating_element", "element": element(v), "value": encode_number(value)},
            )
    rows = [row for _, row in invariants]
    names = [name for name, _ in invariants]
    x = _integral_reduction(rows, phi, m)
    if x is None:
        x = _rational_reduction(rows, phi, m, ideal)
        if x is None:
            raise InternalInvariantError(f"{question}: functional vanishes on the ideal but has no reduction")
        kind = "rational_reduction"
    else:
        kind = "reduction"
    recon = [sum(x[j] * rows[j][i] for j in range(len(rows))) for i in range(len(phi))]
    if any(Fraction(r).denominator != 1 or _red(int(r) - b, m) for r, b in zip(recon, phi)):
        raise InternalInvariantError(f"{question}: reduction certificate does not reproduce the functional")
    cert = {
        "type": kind,
        "basis": names,
        "coefficients": {name: encode_number(c) for name, c in zip(names, x) if c},
    }
    verdict = Verdict(question, "yes", cert)
    if kind == "rational_reduction":
        verdict.notes.append(
            "no integral combination of the basis matches; the rational combination given is "
            "integer-valued on every Hodge polynomial of this degree"
        )
    return verdict


def _integral_reduction(rows, phi, m):
    cols = [[rows[j][i] for j in range(len(rows))] for i in range(len(phi))]
    return SmithSolver(cols, len(rows)).solve(list(phi), _domain(m))


def _rational_reduction(rows, phi, m, ideal: Submodule):
    """Rational ``a`` with ``a . rows`` integral and congruent to ``phi`` mod ``m``.

    The ideal is a saturated kernel, so the functionals vanishing on it form a
    lattice ``A``; ``phi`` lies in ``A + m ZZ^N`` and every element of ``A`` is
    a rational combination of the rows.
    """
    N = len(phi)
    annihilator = kernel([list(v) for v in ideal.basis], ncols=N) if ideal.basis else Submodule(N, [
        [int(i == j) for j in range(N)] for i in range(N)])
    A = annihilator.basis
    if not A:
        return None
    t = SmithSolver([[A[j][i] for j in range(len(A))] for i in range(N)], len(A)).solve(list(phi), _domain(m))
    if t is None:
        return None
    target = [sum(t[j] * A[j][i] for j in range(len(A))) for i in range(N)]
    cols = [[rows[j][i] for j in range(len(rows))] for i in range(N)]
    return solve_linear(cols, target, QQ, ncols=len(rows))


def _hodge_element(n):
    return lambda v: HodgePolynomial.from_coordinates(n, list(v)).to_json()


def betti_rows(n: int, halve_odd: bool) -> list:
    """``b_k`` (``k <= n``) of the forgetful image as rows on fundamental coordinates."""
    images = [_f_direct(B).betti for B in hodge_basis(n)]
    out = []
    for k in range(n + 1):
        if halve_odd and k % 2:
            out.append((f"b_{k}/2", tuple(b[k] // 2 for b in images)))
        else:
            out.append((f"b_{k}", tuple(b[k] for b in images)))
    return out


def _invariant_bases(n: int) -> dict:
    cell_index = {c: i for i, c in enumerate(fundamental_cells(n))}
    N = hodge_rank(n)

    def unit(i):
        return tuple(int(j == i) for j in range(N))

    birational = [(f"h^{{0,{q}}}", unit(cell_index[(q, 0)])) for q in range(n + 1)]
    sigma = [("sigma", signature_row(n))]
    chi = [(f"chi_{p}", chi_matrix(n)[p]) for p in range(n // 2 + 1)]
    return {
        "birational": birational,
        "oriented_topological": sigma + betti_rows(n, True),
        "unoriented_topological": betti_rows(n, True),
        "chern_expressible": chi,
        "pontryagin_expressible": sigma,
    }


def _hodge_ideals(n: int) -> dict:
    return {
        "birational": ideal_submodule("C_ideal", n),
        "oriented_topological": kernel_f(n, "intersect_signature"),
        "unoriented_topological": kernel_f(n, "full"),
        "chern_expressible": ideal_submodule("E_ideal", n),
        "pontryagin_expressible": curve_monomial_submodule(n),
    }


_DIM2_CAVEAT = (
    "in complex dimension 2 the signature is also invariant under orientation-reversing diffeomorphisms, "
    "so unoriented diffeomorphism invariants may exceed unoriented homeomorphism invariants"
)
_ORIENTED_NOTE = "homeomorphism and diffeomorphism invariance coincide here"


# ---------------------------------------------------------------------------
# classifiers


def hodge_vector(phi: Functional) -> list:
    index = {c: i for i, c in enumerate(fundamental_cells(phi.dimension))}
    v = [0] * len(index)
    for cell, c in phi.hodge_coefficients.items():
        v[index[tuple(cell)]] += c
    return v


def classify_hodge(phi: Functional, m: int | None = None) -> Report:
    """Birational, topological and characteristic-number questions for a Hodge functional."""
    m = phi.modulus if m is None else m
    if m == RATIONAL:
        raise UnsupportedModeError("classify_hodge works over ZZ or ZZ/m; use classify_mixed for QQ")
    if phi.betti_coefficients or phi.chern_coefficients:
        raise InputError("classify_hodge takes Hodge coefficients only")
    n = phi.dimension
    vec = _integral(hodge_vector(phi), "Hodge coefficients")
    if m == 1:
        vec = [0] * len(vec)
    bases = _invariant_bases(n)
    ideals = _hodge_ideals(n)
    element = _hodge_element(n)
    verdicts = {}
    for q in bases:
        verdict = _decide(q, vec, ideals[q], bases[q], m, element)
        if q == "oriented_topological":
            verdict.notes.append(_ORIENTED_NOTE)
        if q == "unoriented_topological" and n == 2:
            verdict.caveat = _DIM2_CAVEAT
        verdicts[q] = verdict
    return Report("hodge", n, m, verdicts)


def _betti_composite(phi: Functional) -> list:
    """``phi`` composed with the forgetful map, as a row on fundamental coordinates of degree ``n``."""
    n = phi.dimension
    row = [0] * hodge_rank(n)
    for j, B in enumerate(hodge_basis(n)):
        b = _f_direct(B).betti
        total = 0
        for k, c in phi.betti_coefficients.items():
            if phi.halve_odd and k % 2:
                total += c * (b[k] // 2)
            else:
                total += c * b[k]
        row[j] = total
    return row


def classify_betti(phi: Functional, m: int | None = None) -> Report:
    """Chern and Pontryagin expressibility of a Betti functional on Kähler manifolds.

    ``phi.dimension`` is the complex dimension ``d``; Betti indices run over
    ``0..2d``.
    """
    m = phi.modulus if m is None else m
    if m == RATIONAL:
        m = 0
    if phi.hodge_coefficients or phi.chern_coefficients:
        raise InputError("classify_betti takes Betti coefficients only")
    for c in phi.betti_coefficients.values():
        _integral([c], "Betti coefficients")
    d = phi.dimension
    row = _integral(_betti_composite(phi), "Betti coefficients")
    if m == 1:
        row = [0] * len(row)
    element = _hodge_element(d)
    euler = [sum((-1) ** k * v for k, v in enumerate(_f_direct(B).betti)) for B in hodge_basis(d)]

    chern = _decide("chern_expressible", row, ideal_submodule("E_ideal", d), [("e", tuple(euler))], m, element)
    if chern.verdict == "yes":
        chern.notes.append("a Betti functional expressible through Chern numbers is a multiple of the Euler characteristic")

    sig = signature_row(d)
    curve = curve_monomial_submodule(d)
    pont = _decide("pontryagin_expressible", row, curve, [("sigma", sig)], m, element)
    if pont.verdict == "yes":
        if d % 2 == 0:
            top = default_surface() ** (d // 2)
            c = _red(_dot(row, top.coordinates()), m)
        else:
            c = 0
        if any(_red(a - c * s, m) for a, s in zip(row, sig)):
            raise InternalInvariantError("Pontryagin certificate c * sigma does not reproduce the functional")
        pont.certificate = {
            "type": "reduction",
            "basis": ["sigma"],
            "coefficients": {"sigma": encode_number(c)} if c else {},
        }
        if d % 2 == 0:
            pont.notes.append(f"universal congruence in complex dimension {d}: e = {(-1) ** (d // 2)} * sigma mod 4")
    return Report("betti", d, m, {"chern_expressible": chern, "pontryagin_expressible": pont})


def _mixed_named_rows(n: int, which: str) -> list:
    N = hodge_rank(n)
    P = ambient_rank(n) - N
    out = []
    if which in ("oriented_topological", "unoriented_topological"):
        for name, row in betti_rows(n, False):
            out.append((name, tuple(row) + (0,) * P))
    if which == "oriented_topological":
        Pm = pontryagin_matrix(n)
        for mu, row in zip(partitions(n // 2) if n % 2 == 0 else (), Pm):
            out.append((f"p_{{{','.join(map(str, mu))}}}", (0,) * N + tuple(row)))
    if which == "birational":
        index = {c: i for i, c in enumerate(fundamental_cells(n))}
        for q in range(n + 1):
            out.append((f"h^{{0,{q}}}", tuple(int(j == index[(q, 0)]) for j in range(N)) + (0,) * P))
    return out


def _ch_element(n):
    return lambda v: ChernHodgeElementQ.from_vector(n, list(v), check=False).to_json()


def classify_mixed(phi: Functional) -> Report:
    """Invariance questions for a rational combination of Hodge and Chern numbers."""
    if not phi.rational:
        raise UnsupportedModeError(
            "mixed Hodge/Chern functionals are classified over QQ only; set modulus to 'rational'"
        )
    if phi.betti_coefficients:
        raise InputError("classify_mixed takes Hodge and Chern coefficients only")
    n = phi.dimension
    form = functional_on_ch(phi.hodge_coefficients, phi.chern_coefficients, n)
    w = list(form.weights)
    CH = ch_subspace(n)
    zero_form = form.is_zero_on(CH)
    hrr = [(f"chi_{p} - Td_{p}", diagonal_rows(n)[p]) for p in range(n // 2 + 1)]
    element = _ch_element(n)
    ideals = {
        "birational": ch_ideal_q("birational", n),
        "oriented_topological": ch_ideal_q("ker_Ftilde", n),
        "unoriented_topological": ch_ideal_q("ker_F", n),
    }
    verdicts = {}
    for q, ideal in ideals.items():
        bad = next((v for v in ideal.basis if form(v) != 0), None)
        if bad is not None:
            if not (ideal.contains(bad) and CH.contains(bad)):
                raise InternalInvariantError("violating element is not in the ideal")
            verdict = Verdict(
                q, "no", {"type": "violating_element", "element": element(bad), "value": encode_number(form(bad))}
            )
        else:
            named = _mixed_named_rows(n, q)
            rows = [r for _, r in named] + [r for _, r in hrr]
            cols = [[rows[j][i] for j in range(len(rows))] for i in range(len(w))]
            x = solve_linear(cols, w, QQ, ncols=len(rows))
            if x is None:
                raise InternalInvariantError(f"{q}: functional vanishes on the ideal but has no reduction")
            recon = [sum(x[j] * rows[j][i] for j in range(len(rows))) for i in range(len(w))]
            if recon != w:
                raise InternalInvariantError(f"{q}: reduction certificate does not reproduce the functional")
            k = len(named)
            verdict = Verdict(
                q,
                "yes",
                {
                    "type": "reduction",
                    "basis": [name for name, _ in named],
                    "coefficients": {name: encode_number(c) for (name, _), c in zip(named, x[:k]) if c},
                    "hrr_adjustment": {name: encode_number(-c) for (name, _), c in zip(hrr, x[k:]) if c},
                },
            )
            if zero_form:
                verdict.notes.append("the functional vanishes identically on the Chern-Hodge ring")
        if q == "oriented_topological":
            verdict.notes.append(_ORIENTED_NOTE)
        if q == "unoriented_topological" and n == 2:
            verdict.caveat = _DIM2_CAVEAT
        verdicts[q] = verdict
    return Report("mixed", n, RATIONAL, verdicts)


def classify(phi: Functional) -> Report:
    """Route to the mixed, Betti or Hodge classifier according to the coefficients given."""
    if phi.rational or phi.chern_coefficients:
        return classify_mixed(phi)
    if phi.betti_coefficients:
        return classify_betti(phi)
    return classify_hodge(phi)


# ---------------------------------------------------------------------------
# convenience constructors


def signature_functional(n: int, m: int = 0) -> Functional:
    """``sigma = sum (-1)^p h^{p,q}`` written on fundamental coordinates."""
    return Functional(n, m, dict(zip(fundamental_cells(n), signature_row(n))))


def chi_functional(n: int, p: int, m: int = 0) -> Functional:
    return Functional(n, m, dict(zip(fundamental_cells(n), chi_matrix(n)[p])))


def euler_functional(d: int, m: int = 0) -> Functional:
    return Functional(d, m, betti_coefficients={k: (-1) ** k for k in range(2 * d + 1)})

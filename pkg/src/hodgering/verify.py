"""Self-verification of the structure theorems up to a given degree.

Each check returns ``(passed, detail)``; :func:`run_all` collects them in a
fixed order so the output is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import prod

from . import bordism, chernhodge, comparison, hodge, poincare
from .classify import (
    Functional,
    chi_functional,
    classify_betti,
    classify_hodge,
    euler_functional,
    signature_functional,
)
from .exactring import Polynomial
from .hodge import HodgePolynomial
from .intlinalg import Submodule


@dataclass
class CheckResult:
    tag: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"tag": self.tag, "passed": self.passed, "detail": self.detail}


def random_hodge(rng: random.Random, n: int, bound: int = 20) -> HodgePolynomial:
    return HodgePolynomial.from_coordinates(n, [rng.randint(-bound, bound) for _ in range(hodge.hodge_rank(n))])


def random_poincare(rng: random.Random, n: int, bound: int = 20) -> poincare.PoincarePolynomial:
    coords = [rng.randint(-bound, bound) for _ in range(poincare.poincare_rank(n))]
    return poincare.PoincarePolynomial.from_coordinates(n, coords)


def _failures(items) -> tuple:
    bad = [str(i) for i, ok in items if not ok]
    return (not bad, "all degrees agree" if not bad else "failed at " + ", ".join(bad))


def check_ranks(N: int):
    out = []
    out.append(("rank_hodge", _failures((n, len(hodge.hodge_basis(n)) == ((n + 2) // 2) * ((n + 3) // 2)) for n in range(N + 1))))
    out.append(("rank_poincare", _failures((n, len(poincare.e_basis(n)) == (n + 2) // 2) for n in range(N + 1))))
    out.append(("rank_hirzebruch", _failures(
        (n, len(bordism.hir_basis(n)) == (n + 2) // 2 and Submodule(
            (n + 2) // 2, [list(r) for r in zip(*hodge.chi_matrix(n))]).rank == (n + 2) // 2)
        for n in range(N + 1))))
    out.append(("rank_chern_hodge", _failures(
        (n, chernhodge.ch_subspace(n).rank == ((n + 2) // 2) * ((n + 1) // 2) + bordism.partition_count(n))
        for n in range(N + 1))))
    out.append(("normal_monomial_count", _failures(
        (n, len(poincare.normal_monomials(n)) == (n + 2) // 2) for n in range(N + 1))))
    return out


def check_roundtrips(N: int, samples: int, rng: random.Random):
    abc, wxyz = [], []
    for n in range(N + 1):
        ok_h = ok_p = True
        for _ in range(samples):
            H = random_hodge(rng, n)
            ok_h &= hodge.expand_ABC(hodge.decompose_ABC(H), n) == H
            P = random_poincare(rng, n)
            ok_p &= poincare.decompose_WXYZ(P).expand() == P
        abc.append((n, ok_h))
        wxyz.append((n, ok_p))
    return [("abc_isomorphism", _failures(abc)), ("wxyz_isomorphism", _failures(wxyz))]


def check_ideals(N: int):
    return [
        ("birational_ideal_is_ker_b", _failures(
            (n, hodge.ideal_submodule("C_ideal", n) == hodge.kernel_submodule("b", n)) for n in range(N + 1))),
        ("elliptic_ideal_is_ker_chi", _failures(
            (n, hodge.ideal_submodule("E_ideal", n) == hodge.kernel_submodule("chi", n)) for n in range(N + 1))),
        ("kernel_f_is_G", _failures(
            (n, comparison.kernel_f(n, "full") == comparison.kernel_f_linear(n)) for n in range(N + 1))),
        ("image_f_rank", _failures(
            (n, comparison.f_image(n).rank == n + 1) for n in range(N + 1))),
    ]


def check_pinned():
    G = hodge.hodge_G()
    s = hodge.signature_genus(G)
    W, X, Y, Z = poincare.WXYZ_RING.gens()
    sphere = poincare.expand_WXYZ(W**4 - 4 * W * Y + Z * 2)
    cp2 = bordism.BordismClassQ.monomial((2,))
    hrr = []
    for n in range(5):
        for lam in bordism.partitions(n):
            H = hodge.projective_product(lam)
            hrr.append((list(lam), hodge.chi_genus(H) == bordism.todd_genus(bordism.BordismClassQ.monomial(lam))))
    hrr_chern = []
    for n in range(5):
        for lam in bordism.partitions(n):
            cn = bordism.chern_numbers(lam).as_dict()
            td = hodge.chi_genus(hodge.projective_product(lam)).coordinates()
            for p in range(n // 2 + 1):
                a = bordism.todd_chern_coefficients(n, p)
                val = sum(x * cn[mu] for x, mu in zip(a, bordism.partitions(n)))
                hrr_chern.append(((list(lam), p), val == td[p]))
    return [
        ("signature_of_G", (s.coefficient({"z": 2}) == 4 and len(s) == 1, f"sigma(G) = {s}")),
        ("forget_of_G", (comparison.forget_f(G).is_zero(), f"f(G) = {comparison.forget_f(G)}")),
        ("sphere4_identity", (sphere.betti == (1, 0, 0, 0, 1), f"P(W^4 - 4WY + 2Z) = {sphere}")),
        ("s2_three_signature", (
            bordism.s2(cp2) == 3 == 3 * hodge.projective_space(2).signature(), f"s_2(CP^2) = {bordism.s2(cp2)}")),
        ("chi_projective_line", (str(hodge.chi_genus(hodge.projective_space(1))) == "1 - y (z)", "")),
        ("chi_projective_plane", (str(hodge.chi_genus(hodge.projective_space(2))) == "1 - y + y^2 (z^2)", "")),
        ("hrr_projective_monomials", _failures(hrr)),
        ("hrr_todd_through_chern_numbers", _failures(hrr_chern)),
    ]


def check_kahler(N: int):
    items = []
    for n in range(0, 2 * N + 1, 2):
        items.append((n, comparison.f_image(n // 2) == poincare.parity_lattice(n)))
    return [("kahler_image_parity", _failures(items))]


def check_char_numbers(N: int):
    euler, sig = [], []
    for n in range(min(N, 6) + 1):
        for lam in bordism.partitions(n):
            if n:
                euler.append((list(lam), bordism.chern_numbers(lam)[(n,)] == prod(l + 1 for l in lam)))
    for lam in bordism.partitions(2):
        c = bordism.BordismClassQ.monomial(lam)
        sig.append((list(lam), bordism.s2(c) == 3 * hodge.projective_product(lam).signature()))
    return [("top_chern_is_euler", _failures(euler)), ("s2_signature_degree2", _failures(sig))]


def check_rewriting(N: int, samples: int, rng: random.Random):
    items = []
    for n in range(1, N + 1):
        monos = [m for m in _all_monomials(n)]
        ok = True
        for _ in range(max(1, samples // 4)):
            terms = {tuple((i, e) for i, e in enumerate(m) if e): rng.randint(-5, 5) for m in rng.sample(monos, min(3, len(monos)))}
            q = Polynomial(poincare.WXYZ_RING, terms)
            if q.is_zero():
                continue
            a = poincare.normal_form_I(q)
            b = poincare.normal_form_I(q, "random", random.Random(rng.random()))
            ok &= a == b and a.expand() == poincare.expand_WXYZ(q)
        items.append((n, ok))
    return [("rewriting_confluence", _failures(items))]


def _all_monomials(n: int):
    for l in range(n // 4 + 1):
        for k in range((n - 4 * l) // 3 + 1):
            for j in range((n - 4 * l - 3 * k) // 2 + 1):
                i = n - 4 * l - 3 * k - 2 * j
                yield (i, j, k, l)


def check_chern_hodge(N: int):
    pres = []
    for i in range(3, max(3, min(N, 6)) + 1):
        r = chernhodge.presentation_check(i)
        pres.append((i, all(v for k, v in r.items() if k != "degree")))
    codim = []
    strict = []
    for n in range(2, N + 1):
        CH = chernhodge.ch_subspace(n)
        F = chernhodge.ch_ideal_q("ker_F", n)
        Ft = chernhodge.ch_ideal_q("ker_Ftilde", n)
        codim.append((n, CH.rank - F.rank == n + 1))
        strict.append((n, Ft.is_subset(F) and ((Ft.rank < F.rank) == (n % 2 == 0))))
    hrr_zero = []
    for n in range(N + 1):
        for p in range(n // 2 + 1):
            hrr_zero.append(((n, p), chernhodge.chi_minus_todd_form(n, p).is_zero_on_ch()))
    return [
        ("chern_hodge_presentation", _failures(pres)),
        ("kernel_F_codimension", _failures(codim)),
        ("kernel_Ftilde_strict", _failures(strict)),
        ("hrr_forms_vanish", _failures(hrr_zero)),
    ]


def check_classifiers(N: int):
    items = []
    items.append(("sigma_mod4_invariant", classify_hodge(signature_functional(2, 4))["unoriented_topological"].verdict == "yes"))
    r = classify_hodge(signature_functional(2, 0))["unoriented_topological"]
    items.append(("sigma_integral_not_invariant", r.verdict == "no" and r.certificate["value"] in (4, -4)))
    items.append(("sigma_mod8_not_invariant", classify_hodge(signature_functional(2, 8))["unoriented_topological"].verdict == "no"))
    items.append(("h11_not_birational", classify_hodge(Functional(2, 0, {(1, 1): 1}))["birational"].verdict == "no"))
    items.append(("h0q_birational", all(
        classify_hodge(Functional(n, 0, {(q, 0): 1}))["birational"].verdict == "yes"
        for n in range(min(N, 6) + 1) for q in range(n + 1))))
    items.append(("chi_p_chern_expressible", all(
        classify_hodge(chi_functional(n, p))["chern_expressible"].verdict == "yes"
        for n in range(min(N, 6) + 1) for p in range(n // 2 + 1))))
    items.append(("euler_pontryagin_congruence", all(
        classify_betti(euler_functional(d, 4))["pontryagin_expressible"].verdict == "yes"
        for d in (2, 4) if d <= max(N, 2))))
    tag_ok = all(ok for _, ok in items)
    detail = ", ".join(name for name, ok in items if not ok) or "all regressions match"
    return [("classifier_regressions", (tag_ok, detail))]


def run_all(max_degree: int = 6, samples: int = 20, seed: int = 0) -> list:
    rng = random.Random(seed)
    N = max_degree
    groups = [
        ("ranks", lambda: check_ranks(N)),
        ("roundtrips", lambda: check_roundtrips(N, samples, rng)),
        ("ideals", lambda: check_ideals(N)),
        ("pinned", check_pinned),
        ("kahler", lambda: check_kahler(N)),
        ("char_numbers", lambda: check_char_numbers(N)),
        ("rewriting", lambda: check_rewriting(N, samples, rng)),
        ("chern_hodge", lambda: check_chern_hodge(N)),
        ("classifiers", lambda: check_classifiers(N)),
    ]
    results = []
    for name, group in groups:
        try:
            for tag, (ok, detail) in group():
                results.append(CheckResult(tag, bool(ok), detail))
        except Exception as exc:  # a crash inside a check is a failed check
            results.append(CheckResult(f"{name}_crashed", False, f"{type(exc).__name__}: {exc}"))
    return results

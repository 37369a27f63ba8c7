import random
import pytest

from hodgering import bordism, chernhodge, hodge
from hodgering.bordism import BordismClassQ
from hodgering.chernhodge import (
    ChernHodgeElementQ,
    ch_basis_q,
    ch_ideal_q,
    ch_rank,
    ch_subspace,
    chi_minus_todd_form,
    functional_on_ch,
)
from hodgering.errors import InputError


def test_rank_examples():
    assert [ch_rank(n) for n in range(3)] == [1, 2, 4]


@pytest.mark.parametrize("n", range(9))
def test_basis_dimension_and_diagonal_condition(n):
    basis = ch_basis_q(n)
    assert len(basis) == ch_rank(n)
    for e in basis:
        assert hodge.chi_genus(e.hodge) == bordism.todd_genus(e.bordism)


def test_low_degree_bases():
    E = ChernHodgeElementQ(hodge.elliptic_curve(), BordismClassQ.zero(1))
    L = ChernHodgeElementQ(hodge.projective_line(), BordismClassQ.monomial((1,)))
    assert ch_subspace(1).rank == 2
    assert ch_subspace(1).contains(E.vector()) and ch_subspace(1).contains(L.vector())
    assert ch_subspace(0).contains(ChernHodgeElementQ.one().vector()) and ch_subspace(0).rank == 1


def test_diagonal_condition_is_enforced():
    with pytest.raises(InputError):
        ChernHodgeElementQ(hodge.elliptic_curve(), BordismClassQ.monomial((1,)))


def test_birational_example():
    c = BordismClassQ.monomial((1, 1)) - BordismClassQ.monomial((2,))
    x = ChernHodgeElementQ(hodge.hodge_C(), c)
    assert ch_ideal_q("birational", 2).contains(x.vector())


def test_ker_F_example():
    G = hodge.hodge_G()
    target = hodge.chi_genus(G)
    # chi(G) = 1 + 2y + y^2 = 4 Td(CP^2) - 3 Td(CP^1 x CP^1); E is null-bordant
    g = BordismClassQ.from_mapping(2, {(2,): 4, (1, 1): -3})
    assert bordism.todd_genus(g) == target
    x = ChernHodgeElementQ(G, g)
    assert ch_ideal_q("ker_F", 2).contains(x.vector())


@pytest.mark.parametrize("n", range(0, 7))
def test_ideal_containments(n):
    CH = ch_subspace(n)
    F, Ft, B = (ch_ideal_q(w, n) for w in ("ker_F", "ker_Ftilde", "birational"))
    assert Ft.is_subset(F) and F.is_subset(CH) and B.is_subset(CH)
    if n >= 2:
        assert CH.rank - F.rank == n + 1
        assert (Ft.rank < F.rank) == (n % 2 == 0)


def test_ideals_are_closed_under_multiplication_by_generators():
    gens = chernhodge.generator_elements()
    rng = random.Random(7)
    for n in range(1, 5):
        B = ch_basis_q(n)
        F = ch_ideal_q("ker_F", n)
        for v in F.basis[:3]:
            x = ChernHodgeElementQ.from_vector(n, v)
            for g in gens.values():
                assert ch_ideal_q("ker_F", n + g.dimension).contains((x * g).vector())
        x = sum((b * rng.randint(-3, 3) for b in B[1:]), B[0])
        for g in gens.values():
            assert ch_subspace(n + g.dimension).contains((x * g).vector())


def test_functional_examples():
    for n in range(7):
        for p in range(n // 2 + 1):
            assert chi_minus_todd_form(n, p).is_zero_on_ch()
    form = functional_on_ch({}, {(2,): 1}, 2)
    assert form(chernhodge.generator_elements()["S"]) == 3
    assert functional_on_ch({}, {}, 3).is_zero_on_ch()
    with pytest.raises(InputError):
        functional_on_ch({(0, 1): 1}, {}, 2)


@pytest.mark.parametrize("i", range(3, 7))
def test_presentation_check(i):
    r = chernhodge.presentation_check(i)
    assert r["defect_nonzero"] and r["defect_hodge_zero"] and r["defect_in_ch"] and r["product_zero"]


def test_json():
    S = chernhodge.generator_elements()["S"]
    assert S.to_json()["bordism"] == [{"partition": [2], "coeff": 1}]

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgering import hodge
from hodgering.errors import InputError, ValidationError
from hodgering.hodge import (
    HirPolynomial,
    HodgePolynomial,
    chi_genus,
    decompose_ABC,
    decompose_ELS,
    expand_ABC,
    genus_maps,
    hodge_rank,
    projective_product,
    validate_hodge,
)
from hodgering.intlinalg import Submodule


def hodge_elements(n, bound=15):
    return st.lists(st.integers(-bound, bound), min_size=hodge_rank(n), max_size=hodge_rank(n)).map(
        lambda c: HodgePolynomial.from_coordinates(n, c)
    )


degree = st.integers(0, 5)
pairs = degree.flatmap(lambda n: st.tuples(hodge_elements(n), hodge_elements(n)))
two_degrees = st.tuples(st.integers(0, 3), st.integers(0, 3)).flatmap(
    lambda d: st.tuples(hodge_elements(d[0], 6), hodge_elements(d[1], 6))
)


# -- validation ------------------------------------------------------------------------


def test_fundamental_domain_is_reflected():
    H = validate_hodge([[0, 0, 1], [0, 1, 1]], 1, domain="fundamental")
    assert H == hodge.elliptic_curve()
    assert H.table == ((1, 1), (1, 1))


def test_full_table_input():
    H = validate_hodge([[0, 0, 1], [1, 1, 1]], 1)
    assert H == hodge.hodge_A()
    assert str(H.to_polynomial()) == "1 + x*y (z)"
    assert validate_hodge([[1, 0], [0, 1]], 1, layout="table") == H


def test_symmetry_violation_names_the_pair():
    with pytest.raises(ValidationError, match=r"h\^\{1,0\}|h\^\{0,1\}"):
        validate_hodge([[0, 0, 1], [0, 1, 1], [1, 1, 2], [2, 2, 1]], 2)


def test_validation_errors():
    with pytest.raises(ValidationError):
        validate_hodge([[3, 0, 1]], 2)
    with pytest.raises(InputError):
        validate_hodge([[0, 0, 1], [0, 0, 2]], 1)
    with pytest.raises(InputError):
        validate_hodge([[0, 0]], 1)
    with pytest.raises(ValidationError):
        validate_hodge([[0, 0, 1], [2, 2, 2]], 2, domain="fundamental")


@settings(max_examples=100)
@given(degree.flatmap(hodge_elements))
def test_json_round_trip(H):
    assert HodgePolynomial.from_json(H.to_json()) == H
    if not H.is_zero():
        assert HodgePolynomial.from_polynomial(H.to_polynomial()) == H


# -- bases and decompositions -------------------------------------------------------------


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 2), (2, 4), (3, 6), (4, 9)])
def test_basis_sizes(n, expected):
    assert len(hodge.hodge_basis(n)) == expected == hodge_rank(n)


def test_basis_is_symmetrized_monomials():
    for n in range(6):
        for (p, q), B in zip(hodge.fundamental_cells(n), hodge.hodge_basis(n)):
            orbit = hodge.orbit(p, q, n)
            assert {(a, b) for a in range(n + 1) for b in range(n + 1) if B[a, b]} == set(orbit)
            assert all(B[c] == 1 for c in orbit)


def test_abc_examples():
    A, B, C = hodge.ABC_RING.gens()
    assert decompose_ABC(hodge.projective_line()) == A
    assert decompose_ABC(hodge.elliptic_curve()) == A + B
    assert decompose_ABC(hodge.projective_space(2)) == A ** 2 - C


def test_els_examples():
    E, L, S = hodge.ELS_RING.gens()
    assert decompose_ELS(hodge.projective_space(2)) == S
    assert decompose_ELS(hodge.hodge_C()) == L ** 2 - S
    with pytest.raises(InputError, match="signature"):
        decompose_ELS(hodge.hodge_C(), hodge.projective_line() ** 2)


@settings(max_examples=60)
@given(degree.flatmap(hodge_elements))
def test_els_round_trip_with_other_surface(H):
    # a surface diamond with h^{2,0} = 4, h^{1,1} = 11 and signature -1
    S = validate_hodge([[0, 0, 1], [1, 1, 11], [1, 0, 0], [2, 0, 4]], 2, domain="fundamental")
    assert S.signature() == -1
    assert hodge.expand_ELS(decompose_ELS(H, S), S, H.dimension) == H


@settings(max_examples=60)
@given(pairs, st.integers(-5, 5))
def test_decompose_is_linear(pair, k):
    H1, H2 = pair
    assert decompose_ABC(H1 + k * H2) == decompose_ABC(H1) + decompose_ABC(H2) * k


@settings(max_examples=60)
@given(two_degrees)
def test_decompose_is_multiplicative(pair):
    H1, H2 = pair
    assert decompose_ABC(H1 * H2) == decompose_ABC(H1) * decompose_ABC(H2)


# -- genus maps -------------------------------------------------------------------------------


def test_genus_examples():
    assert str(chi_genus(hodge.projective_space(2))) == "1 - y + y^2 (z^2)"
    s = genus_maps(hodge.hodge_G(), "signature")
    assert s == 4 * s.ring.gen("z") ** 2
    assert str(genus_maps(hodge.elliptic_curve(), "b")) == "1 + y (z)"
    assert genus_maps(hodge.elliptic_curve(), "betti_specialize").betti == (1, 2, 1)


@settings(max_examples=100)
@given(two_degrees)
def test_chi_is_multiplicative(pair):
    H1, H2 = pair
    assert chi_genus(H1 * H2) == chi_genus(H1) * chi_genus(H2)


@settings(max_examples=100)
@given(degree.flatmap(hodge_elements))
def test_genus_routes_agree(H):
    n = H.dimension
    chi = chi_genus(H)
    assert chi.at_y(1) == H.signature()
    # direct formula chi_p = sum_q (-1)^q h^{p,q}
    assert chi.coefficients == tuple(sum((-1) ** q * H[p, q] for q in range(n + 1)) for p in range(n + 1))
    # matrix route against substitution route
    assert [sum(a * c for a, c in zip(row, H.coordinates())) for row in hodge.chi_matrix(n)] == chi.coordinates()
    b = hodge.birational_b(H)
    assert [sum(a * c for a, c in zip(row, H.coordinates())) for row in hodge.b_matrix(n)] == [
        b.coefficient({"y": q, "z": n}) for q in range(n + 1)
    ]


@pytest.mark.parametrize("n", range(11))
def test_chi_is_surjective(n):
    cols = [list(col) for col in zip(*hodge.chi_matrix(n))]
    assert Submodule(hodge.hir_rank(n), cols) == Submodule(hodge.hir_rank(n), [
        [int(i == j) for j in range(hodge.hir_rank(n))] for i in range(hodge.hir_rank(n))])


def test_hirzebruch_constraint():
    with pytest.raises(ValidationError):
        HirPolynomial(1, [1, 1])
    assert HirPolynomial(2, [1, -1, 1]).coordinates() == [1, -1]


def test_projective_diamonds_match_oracle(frozen):
    for key, table in frozen["projective_diamonds"].items():
        lam = tuple(int(x) for x in key.split(",")) if key else ()
        assert [list(r) for r in projective_product(lam).table] == table


# -- ideals -----------------------------------------------------------------------------------


def test_ideal_examples():
    x, y, z = hodge.HODGE_RING.gens()
    assert [B.to_polynomial() for B in hodge.ideal_basis("C_ideal", 2)] == [x * y * z ** 2]
    G = hodge.ideal_basis("G_ideal", 2)
    # HNF makes the leading coordinate h^{1,1} positive, so the basis vector is -G
    assert len(G) == 1 and G[0].to_polynomial() == -(x ** 2 - 2 * x * y + y ** 2) * z ** 2
    assert hodge.ideal_submodule("E_ideal", 1) == Submodule(2, [hodge.elliptic_curve().coordinates()])
    assert hodge.ideal_basis("C_ideal", 1) == []


@pytest.mark.parametrize("n", range(7))
def test_ideals_contain_their_products(n):
    rng = random.Random(n)
    E = hodge.elliptic_curve()
    for _ in range(5):
        if n >= 1:
            K = HodgePolynomial.from_coordinates(n - 1, [rng.randint(-9, 9) for _ in range(hodge_rank(n - 1))])
            assert hodge.ideal_submodule("E_ideal", n).contains((E * K).coordinates())
            assert chi_genus(E * K).coordinates() == [0] * hodge.hir_rank(n)


def test_curve_span_kills_signature():
    for n in range(7):
        S = hodge.curve_monomial_submodule(n)
        assert all(sum(a * b for a, b in zip(hodge.signature_row(n), v)) == 0 for v in S.basis)
        assert S.rank == hodge_rank(n) - (1 if n % 2 == 0 else 0)

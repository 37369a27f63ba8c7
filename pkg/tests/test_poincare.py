import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgering import poincare
from hodgering.errors import InputError, ValidationError
from hodgering.exactring import Polynomial
from hodgering.poincare import (
    KAHLER_RING,
    WXYZ_RING,
    PoincarePolynomial,
    decompose_LECP2,
    decompose_WXYZ,
    expand_LECP2,
    expand_WXYZ,
    kahler_image,
    normal_form_I,
    validate_poincare,
)

W, X, Y, Z = WXYZ_RING.gens()


def all_monomials(n):
    return [(n - 2 * j - 3 * k - 4 * l, j, k, l)
            for l in range(n // 4 + 1) for k in range((n - 4 * l) // 3 + 1) for j in range((n - 4 * l - 3 * k) // 2 + 1)]


def poincare_elements(n, bound=20):
    r = poincare.poincare_rank(n)
    return st.lists(st.integers(-bound, bound), min_size=r, max_size=r).map(
        lambda c: PoincarePolynomial.from_coordinates(n, c))


def test_validation_examples():
    assert validate_poincare([1, 0, 1, 0, 1], 4).betti == (1, 0, 1, 0, 1)
    assert validate_poincare([1], 0) == poincare.point()
    with pytest.raises(ValidationError, match="b_1"):
        validate_poincare([1, 1, 1], 2)
    with pytest.raises(ValidationError, match="b_0"):
        validate_poincare([1, 0, 2], 2)
    with pytest.raises(ValidationError):
        validate_poincare([1, 0], 2)


def test_e_basis():
    assert [P.betti for P in poincare.e_basis(2)] == [(1, 0, 1), (0, 2, 0)]
    assert [P.betti for P in poincare.e_basis(1)] == [(1, 1)]
    assert [P.betti for P in poincare.e_basis(4)][-1] == (0, 0, 1, 0, 0)
    for n in range(15):
        assert len(poincare.e_basis(n)) == (n + 2) // 2 == len(poincare.normal_monomials(n))


def test_normal_form_examples():
    assert normal_form_I(W * X * Y).polynomial() == 2 * W ** 2 * Z
    s4 = W ** 4 - 4 * W * Y + 2 * Z
    assert normal_form_I(s4).polynomial() == s4
    assert normal_form_I(W ** 3 * Z ** 2).polynomial() == W ** 3 * Z ** 2
    assert expand_WXYZ(s4).betti == (1, 0, 0, 0, 1)


def test_decompose_examples():
    assert decompose_WXYZ(PoincarePolynomial(2, (1, 2, 1))).polynomial() == W ** 2
    assert decompose_WXYZ(PoincarePolynomial(3, (1, 0, 0, 1))).polynomial() == W ** 3 - 3 * Y
    assert decompose_WXYZ(PoincarePolynomial(4, (1, 0, 0, 0, 1))).polynomial() == W ** 4 - 4 * W * Y + 2 * Z


@pytest.mark.parametrize("n", range(1, 9))
def test_rewriting_is_confluent(n):
    rng = random.Random(1000 + n)
    monos = all_monomials(n)
    for _ in range(500):
        picks = rng.sample(monos, min(len(monos), rng.randint(1, 3)))
        q = Polynomial(WXYZ_RING, {tuple((i, e) for i, e in enumerate(m) if e): rng.randint(-6, 6) for m in picks})
        if q.is_zero():
            continue
        a = normal_form_I(q)
        b = normal_form_I(q, "random", random.Random(rng.random()))
        assert a == b
        P = expand_WXYZ(q)
        assert a.expand() == P
        assert decompose_WXYZ(P) == a


@settings(max_examples=100)
@given(st.integers(0, 10).flatmap(poincare_elements))
def test_wxyz_round_trip_and_json(P):
    assert decompose_WXYZ(P).expand() == P
    assert PoincarePolynomial.from_json(P.to_json()) == P


@settings(max_examples=60)
@given(st.tuples(st.integers(0, 5), st.integers(0, 5)).flatmap(
    lambda d: st.tuples(poincare_elements(d[0], 5), poincare_elements(d[1], 5))))
def test_decompose_is_multiplicative_modulo_relations(pair):
    P, Q = pair
    prod = decompose_WXYZ(P).polynomial() * decompose_WXYZ(Q).polynomial()
    if prod.is_zero():
        return
    assert normal_form_I(prod) == decompose_WXYZ(P * Q)


# -- Kähler image ---------------------------------------------------------------------------


def test_kahler_examples():
    L, E, CP2 = KAHLER_RING.gens()
    assert kahler_image(PoincarePolynomial(2, (1, 2, 1))) is True
    assert kahler_image(PoincarePolynomial(4, (1, 1, 2, 1, 1))) is False
    assert decompose_LECP2(PoincarePolynomial(2, (1, 2, 1))) == E
    assert decompose_LECP2(PoincarePolynomial(4, (1, 2, 2, 2, 1))) == E * L
    assert decompose_LECP2(PoincarePolynomial(4, (1, 0, 1, 0, 1))) == CP2
    with pytest.raises(InputError, match="odd-index"):
        decompose_LECP2(PoincarePolynomial(4, (1, 1, 2, 1, 1)))
    assert kahler_image(PoincarePolynomial(3, (1, 0, 0, 1))) is False


@settings(max_examples=100)
@given(st.integers(0, 6).flatmap(lambda d: poincare_elements(2 * d)))
def test_lecp2_canonical_form(P):
    if not poincare.is_kahler(P):
        with pytest.raises(InputError):
            decompose_LECP2(P)
        return
    q = decompose_LECP2(P)
    assert all(e[1] <= 1 for e in q.dense_terms())
    assert expand_LECP2(q, P.dimension) == P


def _all_kahler_monomials(d):
    return [(a, e, (d - a - e) // 2) for a in range(d + 1) for e in range(d + 1 - a) if (d - a - e) % 2 == 0]


@pytest.mark.parametrize("d", range(5))
def test_kahler_image_is_parity_lattice_by_brute_force(d):
    # span of images of all monomials in L, E, CP^2 (no canonical-form assumption)
    from hodgering.intlinalg import Submodule

    n = 2 * d
    gens = [expand_LECP2(Polynomial(KAHLER_RING, {tuple((i, x) for i, x in enumerate(m) if x): 1})).coordinates()
            for m in _all_kahler_monomials(d)]
    assert Submodule(poincare.poincare_rank(n), gens) == poincare.parity_lattice(n)

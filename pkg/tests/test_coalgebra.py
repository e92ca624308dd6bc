import random
from fractions import Fraction

import pytest
from hypothesis import given

from magfine.coalgebra import (
    TensorElement,
    alpha,
    alpha_tensor_square,
    alpha_words,
    coassociativity_defect,
    decomposition,
    decomposition_check,
    deconcatenation,
    delta,
    delta_left_comb_expected,
    delta_power,
    filtration_degree,
    full_coproduct,
    idempotent_e,
    is_alpha_coalgebra_map,
    is_primitive,
    tensor,
)
from magfine.magma import MagElement, associator, generators, left_comb, mu, right_comb, unit
from magfine.suites import basis_terms, random_element, random_primitive
from magfine.trees import enumerate_binary, split
from strategies import mag_elements

x1, x2, x3, x4, x5 = generators(5)
ONE = unit()


def brute_delta(x):
    # Direct double loop over terms and cut positions, independent of the cached path.
    out = {}
    for (t, w), c in x.terms.items():
        for i in range(1, len(w)):
            a, b = split(t, i)
            key = ((a, w[:i]), (b, w[i:]))
            out[key] = out.get(key, 0) + c
    return TensorElement(2, out)


def test_delta_of_generator_vanishes():
    assert not delta(x1)
    assert delta(x1) == 0


def test_delta_of_product_of_generators():
    assert delta(x1 * x2) == tensor(x1, x2)


def test_delta_of_left_comb_3():
    assert delta(left_comb([x1, x2, x3])) == tensor(x1, x2 * x3) + tensor(x1 * x2, x3)


def test_delta_of_associator_vanishes():
    assert not delta(associator(x1, x2, x3))


def test_delta_matches_brute_force():
    for x in basis_terms(7):
        assert delta(x) == brute_delta(x)


def test_delta_ignores_unit():
    assert not delta(ONE)
    assert delta(ONE + x1 * x2) == delta(x1 * x2)


def test_delta_power_zero_is_identity():
    x = x1 * (x2 * x3)
    assert delta_power(0, x) == TensorElement.from_element(x)
    with pytest.raises(ValueError):
        delta_power(-1, x)


@pytest.mark.parametrize("n", range(2, 8))
def test_delta_power_on_left_comb(n):
    gens = generators(n)
    assert delta_power(n - 1, left_comb(gens)) == tensor(*gens)
    assert not delta_power(n, left_comb(gens))


def test_delta_power_vanishes_beyond_degree():
    for t in enumerate_binary(5):
        x = MagElement.basis(t, (1, 2, 3, 4, 5))
        assert delta_power(4, x)
        assert not delta_power(5, x)


@pytest.mark.parametrize("n", range(2, 8))
def test_left_comb_deconcatenation(n):
    gens = generators(n)
    assert delta(left_comb(gens)) == delta_left_comb_expected(gens)


def test_full_coproduct_examples():
    assert full_coproduct(ONE) == tensor(ONE, ONE)
    assert full_coproduct(x1) == tensor(x1, ONE) + tensor(ONE, x1)
    assert full_coproduct(ONE * 3) == tensor(ONE, ONE).scale(3)


def ui_rhs(x, y):
    return full_coproduct(x).times_right(y) + full_coproduct(y).times_left(x) - tensor(x, y)


@given(mag_elements(max_degree=3), mag_elements(max_degree=3))
def test_unital_infinitesimal_law(x, y):
    assert full_coproduct(x * y) == ui_rhs(x, y)
    assert delta(x * y) == delta(x).times_right(y) + delta(y).times_left(x) + tensor(x, y)


def test_unital_infinitesimal_law_with_unit():
    for y in (x1, x1 * x2, ONE):
        assert full_coproduct(ONE * y) == ui_rhs(ONE, y)
        assert full_coproduct(y * ONE) == ui_rhs(y, ONE)


def test_tensor_rank_checks():
    with pytest.raises(ValueError):
        TensorElement(0)
    with pytest.raises(ValueError):
        TensorElement(2, {((None,)): 1})
    with pytest.raises(ValueError):
        tensor(x1, x2) * tensor(x1, x2, x3)
    with pytest.raises(ValueError):
        tensor()


def test_is_primitive():
    assert is_primitive(x1)
    assert not is_primitive(x1 * x2)
    assert not is_primitive(ONE)
    assert is_primitive(associator(x1, x2, x3))
    for n in range(3, 7):
        for i in range(1, n - 1):
            assert is_primitive(mu(n, i, generators(n)))


def test_filtration_degree():
    assert filtration_degree(ONE) == 0
    assert filtration_degree(ONE * 5) == 0
    assert filtration_degree(MagElement.zero()) == 0
    assert filtration_degree(x1) == 1
    assert filtration_degree(associator(x1, x2, x3)) == 1
    for n in range(1, 8):
        assert filtration_degree(left_comb(generators(n))) == n


def test_filtration_degree_of_combination_is_exact():
    # as(x1,x2,x3).x4 has filtration degree 2 although each of its tree terms has degree 4.
    y = associator(x1, x2, x3) * x4
    assert all(filtration_degree(MagElement({k: c})) == 4 for k, c in y.terms.items())
    assert filtration_degree(y) == 2


def test_e_fixes_primitives():
    for p in (x1, associator(x1, x2, x3), mu(5, 2, generators(5))):
        assert idempotent_e(p) == p


def test_e_kills_products_of_primitives():
    assert not idempotent_e(x1 * x2)
    assert not idempotent_e(associator(x1, x2, x3) * x4)


@pytest.mark.parametrize("n", range(2, 7))
def test_e_kills_right_combs(n):
    assert not idempotent_e(right_comb(generators(n)))


def test_e_rejects_unit():
    with pytest.raises(ValueError):
        idempotent_e(ONE + x1)
    with pytest.raises(ValueError):
        alpha(ONE)
    with pytest.raises(ValueError):
        decomposition(ONE)


@given(mag_elements(max_degree=5))
def test_e_lands_in_primitives_and_is_idempotent(x):
    y = idempotent_e(x)
    assert not delta(y)
    assert idempotent_e(y) == y


def test_alpha_examples():
    assert alpha(x1) == [TensorElement.from_element(x1)]
    a = alpha(x1 * x2)
    assert len(a) == 2
    assert not a[0]
    assert a[1] == tensor(x1, x2)


def test_alpha_words_of_unit():
    assert alpha_words(ONE) == {(): Fraction(1)}


@given(mag_elements(max_degree=5))
def test_alpha_is_coalgebra_map(x):
    assert is_alpha_coalgebra_map(x)
    assert is_alpha_coalgebra_map(x + ONE * 2)


def test_deconcatenation_of_word():
    w = ("a", "b")
    assert deconcatenation({w: 1}) == {((), w): 1, (("a",), ("b",)): 1, (w, ()): 1}
    with pytest.raises(ValueError):
        alpha_tensor_square(tensor(x1, x2, x3))


def test_decomposition_examples():
    assert decomposition_check(x1)
    assert decomposition_check(x1 * x2)
    assert decomposition(x1 * x2) == right_comb([x1, x2])


def test_decomposition_all_degree_5_terms():
    terms = [MagElement.basis(t, (1, 2, 3, 4, 5)) for t in enumerate_binary(5)]
    assert len(terms) == 14
    assert all(decomposition_check(x) for x in terms)


@given(mag_elements(max_degree=5))
def test_decomposition_random(x):
    assert decomposition_check(x)


def test_coassociativity_on_basis_terms():
    for x in basis_terms(8):
        assert not coassociativity_defect(x)


def test_associator_coproduct_seeded():
    rng = random.Random(42)
    for _ in range(30):
        x, y = random_primitive(rng), random_primitive(rng)
        z = random_element(rng, max_degree=3)
        a = associator(x, y, z)
        expected = TensorElement.zero(2)
        for (za, zb), c in delta(z).terms.items():
            expected = expected + tensor(
                associator(x, y, MagElement({za: 1})), MagElement({zb: c})
            )
        assert delta(a) == expected


def test_tensor_arithmetic():
    t = tensor(x1, x2)
    assert t - t == 0
    assert (t + t) == t.scale(2) == 2 * t
    assert len(t) == 1
    assert "⊗" in repr(t)
    assert tensor(x1 + x2, x3) == tensor(x1, x3) + tensor(x2, x3)

import random
from fractions import Fraction

import pytest
from hypothesis import given

from magfine.magma import (
    EMPTY,
    MagElement,
    associator,
    expand_fine_monomial,
    generator,
    generators,
    left_comb,
    mag_product,
    mu,
    right_comb,
    unit,
)
from magfine.trees import LEAF, FineNode, Vee, enumerate_fine, left_comb_tree, right_comb_tree
from magfine.suites import random_element
from strategies import coefficients, mag_elements

x1, x2, x3, x4, x5 = generators(5)
WORD5 = (1, 2, 3, 4, 5)


def term(tree, word, c=1):
    return MagElement.basis(tree, word, c)


def test_term_validation():
    with pytest.raises(ValueError):
        MagElement({(LEAF, (1, 2)): 1})
    with pytest.raises(ValueError):
        MagElement({(EMPTY, (1,)): 1})
    with pytest.raises(ValueError):
        MagElement({(LEAF, (0,)): 1})


def test_no_stored_zeros():
    x = MagElement({(LEAF, (1,)): 0, (LEAF, (2,)): 3})
    assert len(x) == 1
    assert not (x1 - x1)
    assert x1 - x1 == MagElement.zero()


def test_product_of_generators():
    assert x1 * x2 == term(Vee(LEAF, LEAF), (1, 2))


@given(mag_elements())
def test_unit_laws(x):
    assert unit() * x == x
    assert x * unit() == x


def test_not_associative():
    a = generator(1)
    left = (a * a) * a
    right = a * (a * a)
    assert left != right
    assert len(left) == len(right) == 1
    ((t1, _),) = left.terms
    ((t2, _),) = right.terms
    assert {t1, t2} == {left_comb_tree(3), right_comb_tree(3)}


@given(mag_elements(), mag_elements(), mag_elements(), coefficients)
def test_bilinear(a, b, c, k):
    assert (a + b) * c == a * c + b * c
    assert c * (a + b) == c * a + c * b
    assert (a * k) * c == (a * c) * k == a * (c * k)


def test_bilinear_seeded():
    rng = random.Random(42)
    for _ in range(100):
        a, b, c = (random_element(rng) for _ in range(3))
        assert mag_product(a + b, c) == mag_product(a, c) + mag_product(b, c)
        assert mag_product(c, a + b) == mag_product(c, a) + mag_product(c, b)
        assert mag_product(unit(), a) == a == mag_product(a, unit())


@given(mag_elements(degree=2), mag_elements(degree=3))
def test_degree_additivity(a, b):
    assert (a * b).degrees() <= {5}


def test_left_comb():
    assert left_comb([x1]) == x1
    assert left_comb([x1, x2, x3]) == term(left_comb_tree(3), (1, 2, 3))
    with pytest.raises(ValueError):
        left_comb([])
    with pytest.raises(ValueError):
        right_comb([])


@pytest.mark.parametrize("n", range(1, 7))
def test_right_comb_tree(n):
    assert right_comb(generators(n)) == term(right_comb_tree(n), tuple(range(1, n + 1)))
    assert left_comb(generators(n)) == term(left_comb_tree(n), tuple(range(1, n + 1)))


def test_associator_on_generators():
    a = associator(x1, x2, x3)
    assert a.terms == {
        (left_comb_tree(3), (1, 2, 3)): Fraction(1),
        (right_comb_tree(3), (1, 2, 3)): Fraction(-1),
    }


def test_associator_with_unit_vanishes():
    for args in ((unit(), x2, x3), (x1, unit(), x3), (x1, x2, unit())):
        assert not associator(*args)


@given(mag_elements(max_degree=2), mag_elements(max_degree=2), mag_elements(max_degree=2), mag_elements(max_degree=2))
def test_associator_trilinear(x, xp, y, z):
    assert associator(x + xp, y, z) == associator(x, y, z) + associator(xp, y, z)
    assert associator(y, x + xp, z) == associator(y, x, z) + associator(y, xp, z)
    assert associator(y, z, x + xp) == associator(y, z, x) + associator(y, z, xp)


def test_mu_small_cases():
    assert mu(3, 1, [x1, x2, x3]) == associator(x1, x2, x3)
    assert mu(4, 2, [x1, x2, x3, x4]) == associator(x1, x2, x3 * x4) - associator(x1, x2, x3) * x4
    assert mu(4, 1, [x1, x2, x3, x4]) == associator(x1, x2 * x3, x4)


def test_mu_5_2_against_hand_expansion():
    # Oracle: build the trees of mu_2^4(x1, x2.x3, x4, x5) one by one.
    L = LEAF
    b = Vee(L, L)  # x2.x3
    expected = {}

    def add(tree, c):
        expected[(tree, WORD5)] = expected.get((tree, WORD5), 0) + c

    # as(x1, b, x4.x5) = ((x1 b)(x4 x5)) - (x1 (b (x4 x5)))
    add(Vee(Vee(L, b), Vee(L, L)), 1)
    add(Vee(L, Vee(b, Vee(L, L))), -1)
    # - as(x1, b, x4) . x5 = -(((x1 b) x4) x5) + ((x1 (b x4)) x5)
    add(Vee(Vee(Vee(L, b), L), L), -1)
    add(Vee(Vee(L, Vee(b, L)), L), 1)
    assert mu(5, 2, [x1, x2, x3, x4, x5]) == MagElement(expected)
    assert mu(5, 2, [x1, x2, x3, x4, x5]) == mu(4, 2, [x1, x2 * x3, x4, x5])


def test_mu_general_branch_matches_definition():
    for n in range(5, 8):
        args = generators(n)
        for i in range(2, n - 1):
            expected = mu(4, 2, [args[0], left_comb(args[1:n - i]), left_comb(args[n - i:n - 1]), args[-1]])
            assert mu(n, i, args) == expected


def test_mu_rejects_bad_indices():
    for n, i in ((2, 1), (3, 0), (3, 2), (5, 4), (5, 0)):
        with pytest.raises(ValueError):
            mu(n, i, generators(max(n, 1)))
    with pytest.raises(ValueError):
        mu(4, 1, generators(3))


@pytest.mark.parametrize("n", range(3, 8))
def test_mu_is_multilinear_in_order(n):
    word = tuple(range(1, n + 1))
    for i in range(1, n - 1):
        m = mu(n, i, generators(n))
        assert m
        assert all(w == word for _, w in m.terms)


def test_expand_fine_monomial():
    assert expand_fine_monomial(LEAF, [x1]) == x1
    corolla = FineNode((LEAF, LEAF, LEAF), 1)
    assert expand_fine_monomial(corolla, [x1, x2, x3]) == associator(x1, x2, x3)
    nested = FineNode((LEAF, corolla, LEAF), 1)
    out = expand_fine_monomial(nested, generators(5))
    assert out and out.degrees() == {5}
    assert out == mu(3, 1, [x1, associator(x2, x3, x4), x5])


def test_expand_single_corollas_reproduce_mu():
    for n in range(3, 8):
        for i in range(1, n - 1):
            m = FineNode(tuple([LEAF] * n), i)
            assert expand_fine_monomial(m, generators(n)) == mu(n, i, generators(n))


def test_expand_checks_arity():
    with pytest.raises(ValueError):
        expand_fine_monomial(enumerate_fine(3)[0], [x1, x2])

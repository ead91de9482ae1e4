import random

import pytest

from freedouble.derived import (
    GroupRingElement,
    MagnusMatrix,
    derived_eq,
    exponent_vector,
    fox_derivative,
    in_derived,
    least_level_outside,
    magnus_matrix,
    ring_is_zero,
)
from freedouble.errors import BudgetError
from freedouble.words import EMPTY, all_reduced_words, commutator, conjugate, inv, mul, random_word

from oracles import magnus_free_fox_abelian

a, b = (1,), (2,)
A_, B_ = (-1,), (-2,)
ab = commutator(a, b)


def test_exponent_vector_examples():
    assert exponent_vector(ab, 2) == (0, 0)
    assert exponent_vector((1, 1, -2), 2) == (2, -1)
    assert exponent_vector(EMPTY, 2) == (0, 0)


def test_fox_examples():
    assert fox_derivative((1, 2), 1) == GroupRingElement({EMPTY: 1})
    assert fox_derivative(A_, 1) == GroupRingElement({A_: -1})
    assert not fox_derivative(b, 1)
    assert fox_derivative(a, 1) == GroupRingElement({EMPTY: 1})
    assert str(fox_derivative(ab, 1)) == "-1*A +1*AB"
    with pytest.raises(ValueError):
        fox_derivative(a, 3, rank=2)
    with pytest.raises(ValueError):
        fox_derivative(a, 0)


def test_ring_is_zero_examples():
    e = GroupRingElement({EMPTY: 1, ab: -1})
    assert ring_is_zero(e, 1)
    assert not ring_is_zero(e, 2)
    for level in range(4):
        assert ring_is_zero(GroupRingElement(), level)


def test_in_derived_examples():
    assert in_derived(ab, 1)
    assert not in_derived(ab, 2)
    assert in_derived(commutator(ab, conjugate(ab, a)), 2)
    assert not in_derived(a, 1)
    assert all(in_derived(w, 0) for w in [a, ab, EMPTY])


def test_derived_eq_examples():
    assert derived_eq((1, 2), (2, 1), 1)
    assert not derived_eq((1, 2), (2, 1), 2)
    for u in [a, ab, (1, -2, 2, 1)]:
        assert derived_eq(u, u, 3)


def test_budget_error_beyond_max_level():
    with pytest.raises(BudgetError):
        in_derived(ab, 5)
    with pytest.raises(BudgetError):
        in_derived(ab, 3, max_level=2)
    with pytest.raises(ValueError):
        in_derived(ab, -1)


def test_least_level_outside():
    assert least_level_outside(a) == 1
    assert least_level_outside(ab) == 2
    assert least_level_outside(commutator(ab, conjugate(ab, b)), max_level=3) == 3


def test_magnus_examples():
    assert magnus_matrix(EMPTY, 2).is_identity()
    m = magnus_matrix(a, 2)
    assert m.diagonal == (1, 0)
    assert m.upper[0].coeffs == {(0, 0): 1} and not m.upper[1]
    c = magnus_matrix(ab, 2)
    assert c.diagonal == (0, 0) and not c.is_identity()


def test_magnus_homomorphism():
    rng = random.Random(1)
    for _ in range(500):
        u = random_word(rng, 2, rng.randint(0, 10))
        v = random_word(rng, 2, rng.randint(0, 10))
        assert magnus_matrix(mul(u, v), 2) == magnus_matrix(u, 2) * magnus_matrix(v, 2)
    assert magnus_matrix(mul(u, inv(u)), 2) == MagnusMatrix.identity(2)


def test_magnus_matches_direct_fox_sum():
    rng = random.Random(2)
    for _ in range(300):
        w = random_word(rng, 3, rng.randint(0, 12))
        diag, upper = magnus_free_fox_abelian(w, 3)
        m = magnus_matrix(w, 3)
        assert m.diagonal == diag
        assert [p.coeffs for p in m.upper] == upper


def test_fox_magnus_agreement_short_words():
    count = 0
    for w in all_reduced_words(2, 8):
        if any(exponent_vector(w, 2)):
            continue
        count += 1
        assert in_derived(w, 2) == magnus_matrix(w, 2).is_identity()
    assert count > 0


def test_fox_product_rule():
    rng = random.Random(3)
    for _ in range(300):
        u = random_word(rng, 2, rng.randint(0, 8))
        v = random_word(rng, 2, rng.randint(0, 8))
        for i in (1, 2):
            lhs = fox_derivative(mul(u, v), i)
            rhs = fox_derivative(u, i) + fox_derivative(v, i).left_mul(u)
            assert lhs == rhs


def test_filtration_chain_and_conjugation():
    rng = random.Random(4)
    samples = [random_word(rng, 2, rng.randint(0, 10)) for _ in range(150)]
    # make sure deeper levels are populated
    samples += [commutator(random_word(rng, 2, 3), random_word(rng, 2, 3)) for _ in range(50)]
    samples += [commutator(commutator(a, b), conjugate(commutator(a, b), random_word(rng, 2, 2)))]
    for w in samples:
        for level in (1, 2, 3):
            if in_derived(w, level):
                assert in_derived(w, level - 1)
                g = random_word(rng, 2, rng.randint(1, 4))
                assert in_derived(conjugate(w, g), level)

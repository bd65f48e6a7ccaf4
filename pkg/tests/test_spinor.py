import pytest
from hypothesis import given, strategies as st

from spinorlab.exact import gq
from spinorlab.spinor import (
    Spinor,
    Vector10,
    annihilator,
    basis_masks,
    bilinear,
    clifford_act,
    e,
    gamma,
    is_pure,
    pair,
    parse_spinor_word,
    quadratic_value,
)

ints = st.integers(-3, 3)
vectors = st.lists(ints, min_size=10, max_size=10).map(lambda c: Vector10(tuple(gq(x) for x in c)))


def spinor_from(coeffs, parity):
    return Spinor({m: gq(c) for m, c in zip(basis_masks(parity), coeffs) if c}, parity)


even = st.lists(ints, min_size=16, max_size=16).filter(any).map(lambda c: spinor_from(c, 0))
odd = st.lists(ints, min_size=16, max_size=16).filter(any).map(lambda c: spinor_from(c, 1))


def test_word_order_carries_sign():
    assert e(2, 1) == e(1, 2) * -1
    assert parse_spinor_word("e53") == e(3, 5) * -1
    assert not e(1, 1).terms


@given(vectors, even)
def test_clifford_relation(v, d):
    assert clifford_act(v, clifford_act(v, d)) == d * quadratic_value(v)


@given(vectors, vectors, odd)
def test_polarized_clifford_relation(v, w, d):
    lhs = clifford_act(v, clifford_act(w, d)) + clifford_act(w, clifford_act(v, d))
    assert lhs == d * bilinear(v, w)


@given(even, even)
def test_gamma_is_symmetric(x, y):
    assert (gamma(x, y) - gamma(y, x)).is_zero()


@given(even, odd)
def test_pairing_is_order_free(x, y):
    assert pair(x, y) == pair(y, x)


@pytest.mark.parametrize(
    "d",
    [e(), e(1, 2), e(1, 2, 3, 4), e() + e(1, 2) + e(3, 4) + e(1, 2, 3, 4), e(1), e(1, 2, 3, 4, 5), e(1) + e(1, 2, 3)],
)
def test_pure_spinors_have_five_dimensional_annihilator(d):
    assert is_pure(d)
    assert len(annihilator(d)) == 5


@pytest.mark.parametrize("d", [e() + e(1, 2, 3, 4), e(1, 2) + e(3, 4), e(1) + e(2, 3, 4), e(1) + e(1, 2, 3, 4, 5)])
def test_impure_spinors(d):
    assert not is_pure(d)
    with pytest.raises(ValueError):
        annihilator(d)


def test_mixed_parity_is_rejected():
    with pytest.raises(ValueError):
        gamma(e(), e(1))
    with pytest.raises(ValueError):
        pair(e(), e(1, 2))


def test_records_round_trip():
    d = e(1, 2) * gq(1, 2) - e(3, 4, 5, 1) + e()
    assert Spinor.from_records(d.to_records()) == d

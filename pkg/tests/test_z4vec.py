import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from z4gbent.errors import DimensionError, InputError
from z4gbent.z4vec import (
    Z4Vector,
    counts,
    cyclic_shift,
    euclidean_weight,
    from_masks,
    gray_map,
    hamming_weight,
    inner_product,
    lee_weight,
    product,
    to_masks,
    weights,
)

vectors = st.lists(st.integers(0, 3), min_size=1, max_size=40)


def test_weights_of_cf():
    v = Z4Vector.from_string("01010321")
    assert counts(v) == (3, 3, 1, 1)
    assert weights(v) == (5, 6, 8)


def test_gray_map_table():
    assert gray_map([0, 1, 2, 3]) == (0, 0, 0, 1, 1, 1, 1, 0)


def test_from_string_rejects_bad_digit():
    with pytest.raises(InputError, match="position 2"):
        Z4Vector.from_string("014")


def test_length_mismatch():
    with pytest.raises(DimensionError):
        inner_product([1, 2], [1])


def test_zero_length_rejected():
    with pytest.raises(DimensionError):
        Z4Vector([])


def test_cyclic_shift_is_right_shift():
    assert cyclic_shift([1, 2, 3, 0]).entries == (0, 1, 2, 3)


def test_vector_arithmetic():
    x = Z4Vector([1, 2, 3])
    assert (x + x).entries == (2, 0, 2)
    assert (-x).entries == (3, 2, 1)
    assert (2 * x).entries == (2, 0, 2)
    assert product(x, x).entries == (1, 0, 1)
    assert x.support() == {0, 1, 2}
    assert Z4Vector([0, 2]).is_even()


@given(vectors)
def test_weights_match_oracle(v):
    assert hamming_weight(v) == oracles.hamming(v)
    assert lee_weight(v) == oracles.lee(v)
    assert euclidean_weight(v) == oracles.euclid(v)


@given(vectors)
def test_gray_map_is_lee_isometry(v):
    assert sum(gray_map(v)) == lee_weight(v)


@given(st.integers(1, 30).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 3), min_size=n, max_size=n),
    st.lists(st.integers(0, 3), min_size=n, max_size=n))))
def test_gray_distance_isometry(pair):
    x, y = pair
    diff = [(a - b) % 4 for a, b in zip(x, y)]
    gx, gy = gray_map(x), gray_map(y)
    assert lee_weight(diff) == sum(a != b for a, b in zip(gx, gy))


@given(vectors)
def test_euclidean_mod_8_for_self_orthogonal_word(v):
    # <v,v> = n1 + n3 (mod 4) and wt_E = n1 + n3 + 4 n2, so <v,v> = wt_E (mod 4)
    assert inner_product(v, v) == euclidean_weight(v) % 4


@given(vectors)
def test_mask_round_trip(v):
    lo, hi = to_masks(v)
    assert from_masks(lo, hi, len(v)).entries == tuple(v)

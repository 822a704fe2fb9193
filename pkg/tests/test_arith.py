import pytest
from hypothesis import given
from hypothesis import strategies as st

from dayan.arith import div_floor, div_least_positive, gcd


@pytest.mark.parametrize(
    "c, d, q, r",
    [
        (41130, 38887, 1, 2243),
        (6, 6, 0, 6),
        (2, 1, 1, 1),  # floor division would leave r = 0 here
        (3, 7, 0, 3),
    ],
)
def test_div_least_positive_examples(c, d, q, r):
    assert div_least_positive(c, d) == (q, r)


@pytest.mark.parametrize("c, d, q, r", [(41130, 38887, 1, 2243), (6, 6, 1, 0), (38886, 2243, 17, 755)])
def test_div_floor_examples(c, d, q, r):
    assert div_floor(c, d) == (q, r)


@pytest.mark.parametrize("c, d", [(0, 3), (3, 0), (-1, 2)])
def test_div_least_positive_rejects(c, d):
    with pytest.raises(ValueError):
        div_least_positive(c, d)


def test_div_floor_rejects_zero_divisor():
    with pytest.raises(ValueError):
        div_floor(5, 0)


def test_gcd():
    assert gcd(38887, 41130) == 1
    assert gcd(6, 0) == 6
    assert gcd(4, 6) == 2
    with pytest.raises(ValueError):
        gcd(0, 0)


def test_rejects_non_int():
    with pytest.raises(TypeError):
        div_least_positive(3.0, 2)


@given(st.integers(1, 10**40), st.integers(1, 10**40))
def test_least_positive_vs_floor(c, d):
    q, r = div_least_positive(c, d)
    fq, fr = div_floor(c, d)
    assert c == q * d + r
    assert 1 <= r <= d
    assert (r - c) % d == 0
    if fr:
        assert (q, r) == (fq, fr)
    else:
        assert (q, r) == (fq - 1, d)

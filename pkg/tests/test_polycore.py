from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from tanderiv.polycore import IntPoly, binomial, hp, poly_eval, to_hp

polys = st.lists(st.integers(-50, 50), max_size=9).map(IntPoly)


def test_difference_of_squares():
    assert IntPoly([1, 1]) * IntPoly([1, -1]) == IntPoly([1, 0, -1])


def test_add_zero_is_identity():
    p = IntPoly([3, 0, -2, 7])
    assert p + IntPoly() == p
    assert p + 0 == p


def test_scale_then_sub_gives_t3():
    p = IntPoly.monomial(3).scale(4) - IntPoly([0, 3])
    assert p == IntPoly([0, -3, 0, 4])


def test_canonical_trimming():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly([0, 0]).degree == -1
    assert IntPoly([1, 1]) - IntPoly([0, 1]) == IntPoly([1])


@pytest.mark.parametrize(
    "p, expected",
    [
        (IntPoly([0, 0, 0, 1]), IntPoly([0, 0, 3])),
        (IntPoly([7]), IntPoly()),
        (IntPoly([1, 0, -10, 0, 5]), IntPoly([0, -20, 0, 20])),
    ],
)
def test_derivative(p, expected):
    assert p.derivative() == expected


def test_eval_examples():
    assert poly_eval(IntPoly([1, 0, -3]), 1) == -2
    assert poly_eval(IntPoly(), Fraction(5, 3)) == 0
    # 3 - 10/4 + 3/16
    assert poly_eval(IntPoly([3, 0, -10, 0, 3]), Fraction(1, 2)) == Fraction(11, 16)


def test_eval_float_path_is_high_precision():
    v = poly_eval(IntPoly([1, 1]), Fraction(1, 3))
    assert v == Fraction(4, 3)
    f = poly_eval(IntPoly([1, 1]), to_hp(Fraction(1, 3)))
    assert abs(f - hp.mpf(4) / 3) < hp.mpf(2) ** -100


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(9, 0) == 1
    assert binomial(3, 7) == 0
    assert binomial(7, 3) - binomial(6, 3) == binomial(6, 2) == 15


@pytest.mark.parametrize("n", range(0, 61, 5))
def test_binomial_matches_stdlib(n):
    assert [binomial(n, k) for k in range(n + 2)] == [comb(n, k) for k in range(n + 2)]


def test_pascal_rule():
    for n in range(1, 41):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_divmod_exact_and_inexact():
    q, r = (IntPoly([1, 0, 1]) ** 3).divmod(IntPoly([1, 0, 1]))
    assert q == IntPoly([1, 0, 1]) ** 2 and not r
    with pytest.raises(ValueError):
        IntPoly([1, 0, 1]).divmod(IntPoly([1, 2]))


def test_immutable():
    p = IntPoly([1])
    with pytest.raises(AttributeError):
        p._c = (2,)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@settings(max_examples=200)
@given(
    st.lists(st.integers(-20, 20), max_size=13).map(IntPoly),
    st.fractions(min_value=-4, max_value=4, max_denominator=1000),
)
def test_exact_eval_matches_float(p, q):
    exact = poly_eval(p, q)
    approx = poly_eval(p, to_hp(q))
    assert abs(approx - to_hp(Fraction(exact))) <= 1e-12 * max(abs(exact), 1)

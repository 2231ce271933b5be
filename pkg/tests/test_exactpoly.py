"""Exact polynomial / rational function arithmetic."""
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golaymsd.exactpoly import (Poly, RationalFunction, isolate_fixed_point,
                                series_truncate, univariate_divmod)


def frac(n, d=1):
    return Fraction(n, d)


coeffs = st.fractions(min_value=-10, max_value=10, max_denominator=12)
exponents = st.tuples(st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(exponents, coeffs, max_size=6).map(
    lambda terms: Poly(("x", "y"), terms))


def test_binomial_expansion():
    one_minus = Poly.univariate("delta", [1, -1])
    p = one_minus**11
    coeffs = p.univariate_coeffs()
    assert coeffs[0] == 1
    assert coeffs[1] == -11
    assert coeffs[2] == 55
    assert [abs(c) for c in coeffs] == [math.comb(11, k) for k in range(12)]


def test_zero_coefficients_dropped():
    p = Poly(("x",), {(0,): 1, (1,): 0})
    assert (1,) not in p.terms
    assert p == Poly.constant(1, ("x",))


def test_pow_and_eval():
    p = Poly(("x", "y"), {(1, 0): 1, (0, 1): 2})
    q = p**3
    assert q.coefficient((1, 2)) == 12  # 3 * 1 * 2^2
    assert q.evaluate({"x": frac(1), "y": frac(1, 2)}) == frac(8)


def test_substitute_ray():
    p = Poly(("eps0", "epsS"), {(1, 0): 1, (0, 1): 1, (1, 1): 3})
    ray = Poly.univariate("d", [0, frac(1, 3)])
    out = p.substitute({"eps0": ray, "epsS": ray})
    assert out == Poly.univariate("d", [0, frac(2, 3), frac(1, 3)])


def test_shift_down_exact_and_rejects():
    p = Poly.univariate("x", [0, 0, 3, 5])
    assert p.shift_down("x", 2) == Poly.univariate("x", [3, 5])
    with pytest.raises(ValueError):
        Poly.univariate("x", [1, 2]).shift_down("x", 1)


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys)
@settings(max_examples=40, deadline=None)
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json()) == p


def test_json_round_trip_big_integers():
    big = 10**40 + 7
    p = Poly(("x",), {(3,): Fraction(big, big + 2)})
    assert Poly.from_json(p.to_json()) == p


def test_rational_equality_cross_multiplied():
    x = Poly.variable("x", ("x",))
    one = Poly.constant(1, ("x",))
    a = RationalFunction(x * x - one, x * x + x)   # (x-1)(x+1) / x(x+1)
    b = RationalFunction(x - one, x)
    assert a == b
    assert not (a == RationalFunction(x + one, x))


def test_rational_den_normalization():
    x = Poly.variable("x", ("x",))
    rf = RationalFunction(x, x * Fraction(-2, 3) + Fraction(4, 3))
    # denominator scaled to primitive integers with positive leading coeff
    assert rf.den == x - Poly.constant(2, ("x",))
    assert rf.num == x * Fraction(-3, 2)


def test_rational_zero_denominator_rejected():
    x = Poly.variable("x", ("x",))
    with pytest.raises(ZeroDivisionError):
        RationalFunction(x, Poly(("x",)))


def test_series_truncate_simple():
    x = Poly.variable("x", ("x",))
    one = Poly.constant(1, ("x",))
    f = RationalFunction(one, one - x)  # geometric series
    assert series_truncate(f, 4) == Poly.univariate("x", [1, 1, 1, 1, 1])
    const = RationalFunction(Poly.constant(7, ("x",)), one)
    assert series_truncate(const, 3) == Poly.constant(7, ("x",))


def test_series_truncate_vanishing_denominator():
    x = Poly.variable("x", ("x",))
    with pytest.raises(ZeroDivisionError):
        series_truncate(RationalFunction(Poly.constant(1, ("x",)), x), 2)


@given(polys, polys, st.integers(0, 5))
@settings(max_examples=40, deadline=None)
def test_series_residual_vanishes_to_order(num, den, order):
    # series(f) * den - num has no terms of total degree <= order
    if den.constant_term() == 0:
        return
    f = RationalFunction(num, den)
    s = series_truncate(f, order)
    residual = s * f.den - f.num
    assert residual.truncate(order).is_zero()


def test_fixed_point_quadratic_curve():
    # f(x) = 2x^2 sits below the diagonal near 0 and crosses it at 1/2
    x = Poly.variable("x", ("x",))
    f = RationalFunction(x * x * 2, Poly.constant(1, ("x",)))
    mid, lo, hi = isolate_fixed_point(f)
    assert lo <= frac(1, 2) <= hi
    assert hi - lo <= frac(1, 10**12)
    assert abs(mid - frac(1, 2)) <= frac(1, 10**12)


def test_fixed_point_requires_sign_change():
    x = Poly.variable("x", ("x",))
    f = RationalFunction(x * x, Poly.constant(1, ("x",)))  # x^2 < x on (0,1)
    with pytest.raises(ValueError, match="no threshold"):
        isolate_fixed_point(f)


def test_univariate_divmod():
    x = Poly.variable("x", ("x",))
    num = x**3 - Poly.constant(1, ("x",))
    den = x - Poly.constant(1, ("x",))
    q, r = univariate_divmod(num, den)
    assert r.is_zero()
    assert q == x * x + x + Poly.constant(1, ("x",))
    q2, r2 = univariate_divmod(x * x + Poly.constant(1, ("x",)), x + Poly.constant(1, ("x",)))
    assert q2 * (x + Poly.constant(1, ("x",))) + r2 == x * x + Poly.constant(1, ("x",))
    assert r2 == Poly.constant(2, ("x",))

import pickle
from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cyclotomics
from hochsmash.errors import CyclotomicOrderError, LiteralParseError, NotRational, PoleError
from hochsmash.exactmath import (
    CyclotomicNumber,
    Polynomial,
    PowerSeries,
    RationalFunction,
    as_rational,
    cyc_add,
    cyc_inv,
    cyc_mul,
    cyc_neg,
    cyclotomic_polynomial,
    embed,
    euler_phi,
    format_cyclotomic,
    laurent_expand,
    parse_cyclotomic,
    poly_gcd,
    rational,
)

z = CyclotomicNumber.zeta


def t_poly(*coeffs):
    return Polynomial(list(coeffs), "t")


# -- rationals and cyclotomic polynomials --------------------------------------

def test_rational_lowest_terms():
    q = rational(Fraction(6, -4))
    assert (q.numerator, q.denominator) == (-3, 2)
    assert rational("10/4") == mpq(5, 2)
    with pytest.raises(TypeError):
        rational(0.5)


@pytest.mark.parametrize("m, coeffs", [
    (1, [-1, 1]),
    (2, [1, 1]),
    (3, [1, 1, 1]),
    (4, [1, 0, 1]),
    (6, [1, -1, 1]),
    (12, [1, 0, -1, 0, 1]),
])
def test_cyclotomic_polynomial(m, coeffs):
    assert cyclotomic_polynomial(m) == Polynomial(coeffs, "z")


@pytest.mark.parametrize("m", range(1, 31))
def test_cyclotomic_polynomials_factor_z_to_the_m_minus_one(m):
    # z^m - 1 = prod over divisors, computed independently by exact division
    target = Polynomial([-1] + [0] * (m - 1) + [1], "z")
    prod = Polynomial([1], "z")
    for k in range(1, m + 1):
        if m % k == 0:
            prod = prod * cyclotomic_polynomial(k)
    assert prod == target
    assert cyclotomic_polynomial(m).degree == euler_phi(m)


# -- field arithmetic ---------------------------------------------------------

def test_spec_products():
    assert cyc_mul(z(4), z(4)) == CyclotomicNumber.from_rational(4, -1)
    assert cyc_add(cyc_add(CyclotomicNumber.one(3), z(3)), z(3, 2)) == CyclotomicNumber.zero(3)
    for m in (2, 3, 5, 7, 8, 9, 12):
        assert cyc_inv(z(m)) == z(m, m - 1)
    assert cyc_neg(z(4)) == z(4, 3)


def test_order_mismatch_is_an_error():
    with pytest.raises(CyclotomicOrderError):
        z(3) + z(4)
    with pytest.raises(CyclotomicOrderError):
        z(3) == z(4) or cyc_mul(z(3), z(6))


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.zero(5).inverse()


def test_as_rational():
    assert as_rational(CyclotomicNumber.from_rational(4, mpq(3, 2))) == mpq(3, 2)
    with pytest.raises(NotRational):
        as_rational(z(4))
    assert as_rational(z(3) + z(3, 2)) == -1


def test_canonical_reduction_across_paths():
    # z^5 in Q(zeta_5) equals 1, and z^2 + z^3 is -1 - z - z^4
    a = z(5) ** 5
    assert a == 1 and a.coeffs == CyclotomicNumber.one(5).coeffs
    lhs = z(5, 2) + z(5, 3)
    rhs = -1 - z(5) - z(5, 4)
    assert lhs.coeffs == rhs.coeffs


def test_pickle_and_hash():
    x = parse_cyclotomic("1/2*z^3 - z + 2", 8)
    assert pickle.loads(pickle.dumps(x)) == x
    assert hash(CyclotomicNumber.from_rational(6, 3)) == hash(CyclotomicNumber.from_rational(6, 3))
    assert embed(6, 3) == 3


@settings(max_examples=200, deadline=None)
@given(cyclotomics(nonzero=True))
def test_inverse_property(a):
    assert cyc_mul(a, cyc_inv(a)) == 1


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_field_axioms(data):
    m = data.draw(st.sampled_from((3, 4, 5, 8, 12)))
    a, b, c = (data.draw(cyclotomics(m)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a - a == 0


@settings(max_examples=100, deadline=None)
@given(st.fractions(max_denominator=50), st.sampled_from((1, 3, 4, 7)))
def test_as_rational_of_embedding(q, m):
    assert as_rational(embed(m, q)) == rational(q)


# -- literals ---------------------------------------------------------------------

def test_parse_examples():
    x = parse_cyclotomic("1/2*z^3 - z + 2", 8)
    assert x.coeffs == (2, -1, 0, mpq(1, 2))
    assert parse_cyclotomic("z^4", 4) == 1
    assert parse_cyclotomic("-1", 1) == -1
    assert parse_cyclotomic("3 z", 3) == 3 * z(3)


@pytest.mark.parametrize("text", ["z^", "", "1 2", "z*", "x", "1//2", "z^-1"])
def test_parse_rejects(text):
    with pytest.raises(LiteralParseError):
        parse_cyclotomic(text, 4)


@settings(max_examples=200, deadline=None)
@given(cyclotomics())
def test_literal_round_trip(a):
    assert parse_cyclotomic(format_cyclotomic(a), a.order).coeffs == a.coeffs


# -- polynomials --------------------------------------------------------------------

def test_polynomial_basics():
    p = t_poly(1, 2, 0, 0)
    assert p.degree == 1 and p.coeffs == (1, 2)
    assert Polynomial([], "t").degree < 0
    q, r = divmod(t_poly(-1, 0, 0, 1), t_poly(-1, 1))
    assert q == t_poly(1, 1, 1) and not r
    assert poly_gcd(t_poly(-1, 0, 1), t_poly(1, 2, 1)) == t_poly(1, 1)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6),
       st.lists(st.integers(-9, 9), min_size=1, max_size=4).filter(any))
def test_division_identity(a, b):
    A, B = t_poly(*a), t_poly(*b)
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.degree < B.degree


# -- series ---------------------------------------------------------------------------

def test_laurent_examples():
    one_minus_t = t_poly(1, -1)
    assert laurent_expand(RationalFunction(t_poly(1), one_minus_t), 0, 3).window(0, 3) == [1] * 4
    f = RationalFunction(t_poly(0, 0, 1), t_poly(1, 0, -1))
    assert laurent_expand(f, 0, 6).window(0, 6) == [0, 0, 1, 0, 1, 0, 1]
    g = RationalFunction(t_poly(1), t_poly(0, 1) * one_minus_t)
    assert laurent_expand(g, -1, 2).window(-1, 2) == [1, 1, 1, 1]
    with pytest.raises(PoleError):
        laurent_expand(g, 0, 2)


def test_rational_function_normal_form():
    f = RationalFunction(t_poly(-1, 0, 1), t_poly(-2, 2))
    assert f.num == t_poly(mpq(1, 2), mpq(1, 2)) and f.den == t_poly(1)
    assert f.den.leading() > 0


def test_series_truncation_rules():
    a = PowerSeries(0, [1, 1, 1, 1, 1], 4)
    b = PowerSeries(-1, [1, 0, 2], 1)
    s = a + b
    assert s.trunc == 1 and s.window(-1, 1) == [1, 1, 3]
    with pytest.raises(IndexError):
        s[2]
    assert a == PowerSeries(0, [1, 1], 1)
    # unknown terms start at min(5 - 1, 2 + 0)
    assert (a * b).trunc == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4),
       st.lists(st.integers(-4, 4), min_size=1, max_size=4),
       st.lists(st.integers(-4, 4), min_size=1, max_size=3),
       st.lists(st.integers(-4, 4), min_size=1, max_size=3))
def test_laurent_expand_is_multiplicative(n1, n2, d1, d2):
    d1, d2 = [1] + d1, [1] + d2  # nonzero constant terms keep the poles away
    f = RationalFunction(t_poly(*n1), t_poly(*d1))
    g = RationalFunction(t_poly(*n2), t_poly(*d2))
    N = 7
    assert laurent_expand(f * g, 0, N) == laurent_expand(f, 0, N) * laurent_expand(g, 0, N)

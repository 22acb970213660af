"""Polynomial arithmetic, orders, parsing."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triplepoint.errors import ParseError, RingMismatchError, ZeroPolynomialError
from triplepoint.polyring import GREVLEX, LEX, Gaussian, Ring

R = Ring(("x", "y", "z", "t"))
x, y, z, t = R.gens()


def test_add_cancellation():
    assert (x + y) + (x - y) == 2 * x


def test_add_identity():
    p = R.polynomial("x^2*y - 3*t")
    assert p + R.zero() == p


def test_add_example_from_presentation():
    # (t^5) + (xy - t^5) -> xy
    assert t**5 + (x * y - t**5) == x * y


def test_mul_difference_of_squares():
    assert (x + y) * (x - y) == x**2 - y**2


def test_mul_identity():
    p = R.polynomial("x*z - t^6 - z*t^2")
    assert p * R.one() == p


def test_gaussian_conjugates():
    i = R.scalar((0, 1, 1))
    assert (x + i * y) * (x - i * y) == x**2 + y**2


def test_degree_of_product_adds():
    p = R.polynomial("x*y - t^5")
    q = R.polynomial("z^2 + t")
    assert (p * q).degree() == p.degree() + q.degree()


def test_leading_term_grevlex_tiebreak():
    # x t^3 and t^4 have equal degree; grevlex prefers the smaller t power
    p = x * t**3 + t**4
    mono, coeff = p.leading_term()
    assert mono.exponents == (1, 0, 0, 3)
    assert coeff.re == 1 and coeff.im == 0


def test_leading_term_degree_dominates():
    assert (x**2 + y).leading_term()[0].exponents == (2, 0, 0, 0)


def test_leading_term_lex():
    assert (y + x).leading_term(LEX)[0].exponents == (1, 0, 0, 0)


def test_leading_term_zero_raises():
    with pytest.raises(ZeroPolynomialError):
        R.zero().leading_term()


def test_ring_mismatch_raises():
    other = Ring(("x", "y"))
    with pytest.raises(RingMismatchError):
        x + other.var("x")


def test_reduce_single_step():
    q, r = (x**2).reduce([x], want_quotients=True)
    assert r.is_zero() and q[0] == x


def test_reduce_no_step():
    assert y.reduce([x]) == y


def test_reduce_lex_one_division_step():
    # under lex x > y > z > t the binomial xy - t^5 leads with xy
    L = Ring(("x", "y", "z", "t"), LEX)
    p = L.polynomial("x^2*y")
    r = p.reduce([L.polynomial("x*y - t^5")])
    assert r == L.polynomial("x*t^5")


def test_reduce_grevlex_t5_leads():
    # under the default order the same divisor leads with t^5
    p = R.polynomial("x^2*y")
    assert p.reduce([R.polynomial("x*y - t^5")]) == p


def test_parse_render_round_trip():
    texts = [
        "x*y - t^5",
        "-t^6 - z*t^2 + x*z",
        "(1+i)*x^2 + (2i)*t - 3/2",
        "x^2 + y^2",
        "i",
        "-i*t",
        "7",
    ]
    for s in texts:
        p = R.polynomial(s)
        assert R.polynomial(str(p)) == p


def test_parse_unicode_minus_and_juxtaposition():
    assert R.polynomial("x−y") == x - y
    assert R.polynomial("2x + 3i*t") == 2 * x + R.scalar((0, 3, 1)) * t


def test_parse_errors():
    for bad in ("", "x +", "w", "x^", "1/0", "x**2"):
        with pytest.raises(ParseError):
            R.polynomial(bad)


def test_gaussian_str():
    assert str(Gaussian(Fraction(3, 2), Fraction(0))) == "3/2"
    assert str(Gaussian(Fraction(0), Fraction(-1))) == "-i"


def _polys(ring):
    coeff = st.tuples(
        st.integers(-4, 4), st.integers(-4, 4), st.integers(1, 3)
    )
    exp = st.tuples(*(st.integers(0, 3) for _ in range(ring.n)))
    term = st.tuples(exp, coeff)
    return st.lists(term, max_size=5).map(
        lambda pairs: ring.from_terms(pairs)
    )


@settings(max_examples=120, deadline=None)
@given(_polys(R), _polys(R))
def test_addition_commutes(p, q):
    assert p + q == q + p


@settings(max_examples=120, deadline=None)
@given(_polys(R), _polys(R), _polys(R))
def test_mul_distributes(p, q, r):
    assert p * (q + r) == p * q + p * r


@settings(max_examples=120, deadline=None)
@given(_polys(R), _polys(R))
def test_mul_commutes_and_degree(p, q):
    assert p * q == q * p
    if p and q:
        assert (p * q).degree() == p.degree() + q.degree()


@settings(max_examples=80, deadline=None)
@given(_polys(R), st.lists(_polys(R), min_size=1, max_size=3))
def test_reduce_idempotent_and_witnessed(p, divisors):
    divisors = [d for d in divisors if d]
    if not divisors:
        return
    quots, r = p.reduce(divisors, want_quotients=True)
    assert r.reduce(divisors) == r
    total = r
    for qi, di in zip(quots, divisors):
        total = total + qi * di
    assert total == p

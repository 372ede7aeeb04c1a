from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qaffine.scalars import (
    MINUS_Q,
    ONE,
    I_UNIT,
    OMEGA,
    Q,
    QS,
    ParseError,
    RootOutsideDomain,
    SpectralScalar,
    nth_roots,
    parse_scalar,
    print_scalar,
    scalar,
)

scalars = st.builds(
    scalar,
    st.integers(min_value=-30, max_value=30),
    st.fractions(min_value=-20, max_value=20).filter(lambda f: f.denominator in (1, 2, 3, 6)),
)


def test_minus_q_squared_is_q_squared():
    assert MINUS_Q * MINUS_Q == scalar(0, 2)


def test_qs_squared_is_q():
    assert QS * QS == Q


def test_omega_squared():
    assert OMEGA * OMEGA == scalar(16, 0)
    assert OMEGA * OMEGA * OMEGA == ONE


def test_pow_examples():
    assert MINUS_Q ** 3 == scalar(12, 3)
    assert (I_UNIT * scalar(0, 2)) ** 2 == scalar(12, 4)


@given(scalars)
def test_pow_minus_one_is_inverse(x):
    assert (x ** -1) * x == ONE


@given(scalars, scalars, scalars)
def test_group_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * ONE == a
    assert a * a.inv() == ONE


@given(scalars, st.integers(min_value=-6, max_value=6))
def test_pow_is_iterated_product(a, n):
    acc = ONE
    for _ in range(abs(n)):
        acc = acc * (a if n >= 0 else a.inv())
    assert a ** n == acc


def test_nth_roots_examples():
    minus_q8 = scalar(12, 8)
    rts = nth_roots(minus_q8, 2)
    assert set(rts) == {scalar(6, 4), scalar(18, 4)}
    minus_q9 = scalar(12, 9)
    rts3 = set(nth_roots(minus_q9, 3))
    assert rts3 == {scalar(4, 3), scalar(12, 3), scalar(20, 3)}
    assert set(nth_roots(Q, 2)) == {QS, scalar(12, Fraction(1, 2))}


@given(scalars, st.sampled_from([2, 3]))
def test_nth_roots_are_roots(a, n):
    try:
        rts = nth_roots(a, n)
    except RootOutsideDomain:
        return
    assert len(set(rts)) == n
    for r in rts:
        assert r ** n == a


def test_nth_roots_domain_errors():
    with pytest.raises(RootOutsideDomain):
        nth_roots(scalar(1, 0), 2)
    with pytest.raises(RootOutsideDomain):
        nth_roots(QS, 2)  # would need q^(1/4)


def test_parse_examples():
    assert parse_scalar("(-q)^3") == scalar(12, 3)
    assert parse_scalar("i*q^2") == scalar(6, 2)
    assert parse_scalar("w*q^(4/3)") == scalar(8, Fraction(4, 3))
    assert parse_scalar("-1") == scalar(12, 0)
    assert parse_scalar("z24^30*qs") == scalar(6, Fraction(1, 2))
    assert parse_scalar("q^-2") == scalar(0, -2)
    assert parse_scalar("(-qt)^5") == scalar(12, Fraction(5, 3))
    assert parse_scalar("1") == ONE


def test_parse_error_has_offset():
    with pytest.raises(ParseError) as err:
        parse_scalar("q^2*!")
    assert err.value.offset == 4
    with pytest.raises(ParseError):
        parse_scalar("q^(1/")
    with pytest.raises(ParseError):
        parse_scalar("qs^(1/2)")  # q^(1/4) is outside the domain


@given(scalars)
def test_print_parse_round_trip(a):
    assert parse_scalar(print_scalar(a)) == a


def test_print_canonical_forms():
    assert print_scalar(ONE) == "1"
    assert print_scalar(scalar(12, 3)) == "z24^12*q^3"
    assert print_scalar(scalar(0, Fraction(-5, 2))) == "q^(-5/2)"
    assert print_scalar(scalar(7, 0)) == "z24^7"
    assert print_scalar(Q) == "q"


def test_scalar_is_reduced():
    s = scalar(25, Fraction(4, 6))
    assert s == SpectralScalar(1, 2, 3)
    with pytest.raises(RootOutsideDomain):
        scalar(0, Fraction(1, 4))

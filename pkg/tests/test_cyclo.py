import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modkit.cyclo import (
    CycNum,
    LiteralError,
    NotAnInteger,
    format_literal,
    lower,
    minimal_conductor,
    parse_literal,
    zeta,
)
from modkit.cyclo.polys import cyclotomic_poly, power_table, totient

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 20]


@st.composite
def cycnums(draw, conductor=None):
    n = conductor or draw(st.sampled_from(CONDUCTORS))
    coeffs = draw(
        st.lists(
            st.fractions(min_value=-5, max_value=5, max_denominator=6),
            min_size=n,
            max_size=n,
        )
    )
    return CycNum(n, coeffs)


def embed_sum(x: CycNum) -> complex:
    n = x.conductor
    return sum(complex(c) * cmath.exp(2j * cmath.pi * k / n) for k, c in enumerate(x.coeffs))


# -- worked examples -------------------------------------------------------------


def test_i_squared():
    assert zeta(4) * zeta(4) == -1


def test_sqrt2_squared():
    r2 = zeta(8) + zeta(8, 7)
    assert r2 * r2 == 2
    assert abs(r2.embed() - 2**0.5) < 1e-9


def test_inverse_of_two():
    assert CycNum.rational(2).inv() == Fraction(1, 2)


def test_conj_examples():
    assert zeta(4).conj() == -zeta(4)
    assert CycNum.rational(Fraction(3, 2)).conj() == Fraction(3, 2)
    assert zeta(3).conj() == zeta(3, 2)


def test_realness_and_integers():
    assert not zeta(4).is_real()
    assert (zeta(3) + zeta(3, 2) + 1).as_integer() == 0
    with pytest.raises(NotAnInteger):
        CycNum.rational(Fraction(1, 2)).as_integer()
    with pytest.raises(NotAnInteger):
        zeta(5).as_integer()


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycNum.rational(0, 7).inv()


def test_cyclotomic_polynomials_oracle():
    # Phi_12 = x^4 - x^2 + 1, Phi_9 = x^6 + x^3 + 1
    assert list(cyclotomic_poly(12)) == [1, 0, -1, 0, 1]
    assert list(cyclotomic_poly(9)) == [1, 0, 0, 1, 0, 0, 1]
    for n in range(1, 40):
        assert len(cyclotomic_poly(n)) - 1 == totient(n)


def test_power_table_agrees_with_floats():
    for n in (7, 12, 15):
        z = cmath.exp(2j * cmath.pi / n)
        for e, row in enumerate(power_table(n)):
            assert abs(sum(c * z**k for k, c in row) - z**e) < 1e-9


def test_equality_across_conductors():
    assert zeta(8, 2) == zeta(4)
    assert zeta(12, 4) == zeta(3)
    assert hash(zeta(8, 2)) == hash(zeta(4))
    assert CycNum.rational(5, 7) == 5


def test_minimal_conductor():
    M, vals = minimal_conductor([zeta(100, 20), 2 * zeta(12, 4)])
    assert M == 15
    assert vals[0] == zeta(5) and vals[1] == 2 * zeta(3)
    assert lower(zeta(8), 4) is None
    assert minimal_conductor([CycNum.rational(3, 40)])[0] == 1


# -- literals --------------------------------------------------------------------


@pytest.mark.parametrize(
    "text,conductor,expected",
    [
        ("1", 1, CycNum.rational(1)),
        ("-3/2", 1, CycNum.rational(Fraction(-3, 2))),
        ("z", 4, zeta(4)),
        ("z^2", 8, zeta(4)),
        ("2*z^3 - z + 1/2", 5, 2 * zeta(5, 3) - zeta(5) + Fraction(1, 2)),
        ("  z ^ -1 ", 6, zeta(6, 5)),
        ("z^2 - z^6", 16, zeta(8) + zeta(8, 7)),
    ],
)
def test_parse_literal(text, conductor, expected):
    assert parse_literal(text, conductor) == expected


@pytest.mark.parametrize("text", ["", "z^", "1 +", "1/0", "2 z", "z^2 + ", "x", "1//2", "3*"])
def test_parse_literal_rejects(text):
    with pytest.raises(LiteralError):
        parse_literal(text, 8)


def test_format_literal_shapes():
    assert format_literal(CycNum.rational(0, 5)) == "0"
    assert format_literal(zeta(4)) == "z"
    assert format_literal(-zeta(7, 3) + Fraction(1, 2)) in ("1/2 - z^3", "-z^3 + 1/2")


# -- properties ------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_field_axioms(data):
    n = data.draw(st.sampled_from(CONDUCTORS))
    a, b, c = (data.draw(cycnums(n)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0
    if not a.is_zero():
        assert a * a.inv() == 1


@settings(max_examples=60, deadline=None)
@given(cycnums(), cycnums())
def test_embedding_is_a_ring_map(a, b):
    assert abs((a * b).embed() - a.embed() * b.embed()) < 1e-9 * (1 + abs(a.embed() * b.embed()))
    assert abs((a + b).embed() - (a.embed() + b.embed())) < 1e-9 * (1 + abs(a.embed()) + abs(b.embed()))
    assert abs(a.embed() - embed_sum(a)) < 1e-9 * (1 + abs(embed_sum(a)))


@settings(max_examples=60, deadline=None)
@given(cycnums())
def test_conj_involution(a):
    assert a.conj().conj() == a
    assert abs(a.conj().embed() - a.embed().conjugate()) < 1e-9 * (1 + abs(a.embed()))
    assert (a * a.conj()).is_real()


@settings(max_examples=60, deadline=None)
@given(cycnums())
def test_literal_round_trip(a):
    assert parse_literal(format_literal(a), a.conductor) == a


@settings(max_examples=40, deadline=None)
@given(cycnums(), st.sampled_from([2, 3, 5]))
def test_lift_and_lower(a, k):
    up = a.lift(a.conductor * k)
    assert up == a
    assert lower(up, a.conductor) == a
    M, (low,) = minimal_conductor([up])
    assert low == a and a.conductor % M == 0

"""Serialization round-trips: pretty, compact, and JSON forms."""

import json
from fractions import Fraction

import pytest

from padicore import (
    QQ,
    Ball,
    ClopenSet,
    FiniteFamily,
    LaurentSeries,
    Padic,
    PadicPolynomial,
    ParseError,
    PowerSeries,
    PrimeFieldCoefficients,
)
from padicore import textforms as tf
from helpers import random_padic, rng_for

F3 = PrimeFieldCoefficients(3)


# ------------------------------------------------------------------ padics


def test_padic_pretty_round_trip_random():
    rng = rng_for("padic-pretty-rt")
    for p in (2, 3, 5, 7):
        for _ in range(50):
            x = random_padic(rng, p, rng.randrange(1, 9), -4, 4)
            assert tf.parse_padic(x.pretty()) == x
            assert tf.parse_padic(x.compact()) == x
            assert tf.parse_padic(tf.padic_to_json(x)) == x


def test_padic_zero_round_trip():
    z = Padic.zero(7, 5)
    assert tf.parse_padic(z.pretty()) == z
    assert tf.parse_padic(z.compact()) == z
    assert tf.parse_padic(tf.padic_to_json(z)) == z


def test_padic_rational_literal_needs_context():
    assert tf.parse_padic("1/2", 5, 4) == Padic.from_rational(1, 2, 5, 4)
    with pytest.raises(ParseError):
        tf.parse_padic("1/2")


def test_padic_parse_rejects_garbage():
    for bad in ("", "1 + 2", "O(6^2)x", "3 + 1*5 + O(7^3)", "{not json}"):
        with pytest.raises(ParseError):
            tf.parse_padic(bad)


# ------------------------------------------------------------------ series


def test_series_pretty_round_trip():
    rng = rng_for("series-pretty-rt")
    for _ in range(40):
        f = PowerSeries(F3, [rng.randrange(3) for _ in range(6)], 6)
        assert tf.parse_series(f.pretty(), F3) == f
    g = PowerSeries(QQ, [Fraction(1), Fraction(-1, 2), Fraction(0), Fraction(3)], 4)
    assert tf.parse_series(g.pretty(), QQ) == g


def test_series_json_round_trip():
    f = PowerSeries(F3, [1, 0, 2, 0], 4)
    assert tf.series_from_json(json.loads(tf.series_to_json(f))) == f
    q = PowerSeries(QQ, [Fraction(1, 2), Fraction(-3)], 2)
    assert tf.series_from_json(json.loads(tf.series_to_json(q))) == q


def test_series_json_exact_shape():
    f = PowerSeries(F3, [1, 0, 2, 0], 4)
    data = json.loads(tf.series_to_json(f))
    assert data == {"field": {"Fp": 3}, "order_prec": 4, "coeffs": [1, 0, 2, 0]}


def test_laurent_round_trips():
    rng = rng_for("laurent-rt")
    for _ in range(40):
        coeffs = [rng.randrange(3) for _ in range(6)]
        tail = rng.randrange(-4, 4)
        f = LaurentSeries(F3, coeffs, tail, 6)
        assert tf.parse_laurent(f.pretty(), F3) == f
        assert tf.series_from_json(json.loads(tf.series_to_json(f))) == f
    zero = LaurentSeries(F3, [], -2, 0)
    assert tf.parse_laurent(zero.pretty(), F3) == zero


def test_laurent_pretty_example_shape():
    f = LaurentSeries(F3, [1, 1, 1, 0], -1, 4)
    assert f.pretty() == "T^-1 + 1 + T + O(T^3)"


def test_field_descriptor_parsing():
    assert tf.parse_field("fp:3") == F3
    assert tf.parse_field("GF:7") == PrimeFieldCoefficients(7)
    assert tf.parse_field("q") == QQ
    with pytest.raises(ParseError):
        tf.parse_field("galaxy")


# ------------------------------------------------------------- polynomials


def test_polynomial_grammar():
    assert tf.parse_polynomial_rational_coeffs("x^2-2") == [-2, 0, 1]
    assert tf.parse_polynomial_rational_coeffs("3*x^4 + x - 7") == [-7, 1, 0, 0, 3]
    assert tf.parse_polynomial_rational_coeffs("5") == [5]
    assert tf.parse_polynomial_rational_coeffs("-x") == [0, -1]
    with pytest.raises(ParseError):
        tf.parse_polynomial_rational_coeffs("x^^2")
    with pytest.raises(ParseError):
        tf.parse_polynomial_rational_coeffs("")


def test_polynomial_json_round_trip():
    f = PadicPolynomial(7, [-2, 0, 1], abs_prec=5)
    data = json.loads(tf.polynomial_to_json(f))
    g = tf.polynomial_from_json(data, PadicPolynomial)
    assert f == g


# ------------------------------------------------------------- clopen sets


def test_clopen_json_round_trip():
    s = ClopenSet(5, [Ball(5, 1, 0), Ball(5, 2, 7)])
    text = tf.clopen_to_json(s)
    assert tf.parse_clopen(text) == s
    data = json.loads(text)
    assert data["p"] == 5
    assert {"level": 2, "center": 7} in data["balls"]


def test_clopen_canonical_serialization():
    b = Ball(3, 1, 0)
    via_split = ClopenSet(3, [c for c in b.split()])
    direct = ClopenSet(3, [b])
    assert tf.clopen_to_json(via_split) == tf.clopen_to_json(direct)


# ----------------------------------------------------------------- families


def test_family_json_round_trip():
    fam = FiniteFamily(["a", "b"], [Fraction(1, 2), Fraction(-3)])
    text = tf.family_to_json(fam)
    back = tf.parse_family(text)
    assert back.labels == fam.labels and back.values == fam.values
    pfam = FiniteFamily([0, 1], [Padic.from_int(5, 5, 4), Padic.from_int(2, 5, 4)])
    back2 = tf.parse_family(tf.family_to_json(pfam))
    assert back2.values == pfam.values


def test_family_parse_rejects_bad_modes():
    with pytest.raises(ParseError):
        tf.parse_family('{"mode": "complex", "values": ["1"]}')
    with pytest.raises(ParseError):
        tf.parse_family("[]")
    with pytest.raises(ParseError):
        tf.parse_family("{bad json")

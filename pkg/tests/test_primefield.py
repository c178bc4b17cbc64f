"""Prime-field arithmetic: reductions, inverses, field axioms, Frobenius."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padicore import DivisionByZeroError, FpElement, PrimeMismatchError
from padicore.errors import DomainError

SMALL_PRIMES = [2, 3, 5, 7]


def test_add_mul_sub_reductions():
    assert (FpElement(3, 5) + FpElement(4, 5)).value == 2
    assert (FpElement(3, 5) * FpElement(4, 5)).value == 2
    assert (FpElement(0, 7) - FpElement(1, 7)).value == 6


def test_inverse_matches_exhaustive_search():
    # independent oracle: scan all candidates
    expected = next(c for c in range(7) if 3 * c % 7 == 1)
    assert expected == 5
    assert FpElement(3, 7).inverse().value == expected


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_inverse_of_one_and_minus_one(p):
    assert FpElement(1, p).inverse().value == 1
    assert FpElement(p - 1, p).inverse().value == p - 1


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_all_inverses(p):
    for a in range(1, p):
        assert (FpElement(a, p) * FpElement(a, p).inverse()).value == 1


def test_inverse_of_zero_rejected():
    with pytest.raises(DivisionByZeroError):
        FpElement(0, 5).inverse()


def test_mismatched_primes_rejected():
    with pytest.raises(PrimeMismatchError):
        FpElement(1, 5) + FpElement(1, 7)
    with pytest.raises(PrimeMismatchError):
        FpElement(1, 5) * FpElement(1, 7)


def test_composite_modulus_rejected():
    with pytest.raises(DomainError):
        FpElement(1, 6)
    with pytest.raises(DomainError):
        FpElement(1, 1)


def test_pow_examples():
    assert (FpElement(2, 5) ** 3).value == 3
    assert (FpElement(4, 7) ** 0).value == 1


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_fermat_little(p):
    for a in range(1, p):
        assert (FpElement(a, p) ** (p - 1)).value == 1


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_frobenius_additivity(p):
    for a in range(p):
        for b in range(p):
            lhs = (FpElement(a, p) + FpElement(b, p)) ** p
            rhs = FpElement(a, p) ** p + FpElement(b, p) ** p
            assert lhs == rhs


def test_frobenius_char3_instance():
    # (1 + 1)^3 = 2 = 1^3 + 1^3 in GF(3)
    assert ((FpElement(1, 3) + FpElement(1, 3)) ** 3).value == 2


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_field_axioms_exhaustive(p):
    elems = [FpElement(a, p) for a in range(p)]
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            for c in elems:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


@given(
    st.sampled_from(SMALL_PRIMES + [11, 101]),
    st.integers(min_value=-(10**6), max_value=10**6),
    st.integers(min_value=-(10**6), max_value=10**6),
)
def test_negation_and_subtraction(p, a, b):
    x, y = FpElement(a, p), FpElement(b, p)
    assert x - y == x + (-y)
    assert (x - y) + y == x

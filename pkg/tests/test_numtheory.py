from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from zdg.errors import DomainError
from zdg.numtheory import (
    MAX_MODULUS,
    divisor_table,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    is_squarefree,
    proper_divisor_classes_domain,
    valuation,
)


@pytest.mark.parametrize(
    "n, expected",
    [(12, [(2, 2), (3, 1)]), (9973, [(9973, 1)]), (27, [(3, 3)])],
)
def test_factorize_examples(n, expected):
    assert list(factorize(n)) == expected


def test_factorize_domain():
    for bad in (1, 0, -5, MAX_MODULUS + 1):
        with pytest.raises(DomainError):
            factorize(bad)


@pytest.mark.parametrize("m, expected", [(1, 1), (9, 6), (12, 4)])
def test_euler_phi_examples(m, expected):
    assert euler_phi(m) == expected == oracle.phi(m)


def test_euler_phi_domain():
    with pytest.raises(DomainError):
        euler_phi(0)


def test_divisor_examples():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert proper_divisor_classes_domain(12) == [2, 3, 4, 6]
    assert proper_divisor_classes_domain(7) == []


@pytest.mark.parametrize("n, expected", [(15, True), (12, False), (105, True)])
def test_is_squarefree(n, expected):
    assert is_squarefree(n) is expected


def test_valuation():
    assert valuation(72, 2) == 3
    assert valuation(72, 3) == 2
    assert valuation(72, 5) == 0


def test_small_range_against_trial_division():
    for n in range(2, 10_001):
        fac = factorize(n)
        assert prod(p**e for p, e in fac) == n
        assert list(fac) == oracle.trial_factor(n)


def test_phi_against_coprime_count():
    for n in range(2, 10_001, 7):
        assert euler_phi(n) == oracle.phi(n)


def test_divisor_sum_identity():
    for n in range(2, 10_001):
        assert sum(euler_phi(n // d) for d in divisors(n)) == n


def test_divisor_table_matches_definitions():
    for n in (12, 360, 1001, 2**10, 963761198400 // 6720):
        rows = divisor_table(n)
        assert [d for d, _, _ in rows] == divisors(n)
        for d, ph, spf in rows:
            assert ph == euler_phi(n // d)
            assert spf == (0 if d == 1 else factorize(d).primes[0])


@pytest.mark.parametrize(
    "n",
    [
        2**61 - 1,
        (2**31 - 1) * (2**31 + 11),
        MAX_MODULUS,
        999_999_000_001 * 7,
        1_000_003 * 1_000_033 * 1_009,
        963_761_198_400,
    ],
)
def test_large_factorizations(n):
    fac = factorize(n)
    assert prod(p**e for p, e in fac) == n
    assert all(oracle.is_prime(p) if p < 10**12 else is_prime(p) for p in fac.primes)


def test_known_primes_and_pseudoprimes():
    # strong pseudoprimes to several small bases
    for c in (3215031751, 2152302898747, 3474749660383, 341550071728321, 3825123056546413051):
        assert not is_prime(c)
    for p in (2, 3, 5, 9973, 2**31 - 1, 2**61 - 1, 9223372036854775783):
        assert is_prime(p)


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=2, max_value=MAX_MODULUS))
def test_factorize_recomposes(n):
    fac = factorize(n)
    assert fac.n == n
    assert prod(p**e for p, e in fac) == n
    assert list(fac.primes) == sorted(set(fac.primes))
    assert all(is_prime(p) for p in fac.primes)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=2, max_value=200_000))
def test_primality_against_trial_division(n):
    assert is_prime(n) == oracle.is_prime(n)

from decimal import Decimal
from fractions import Fraction
from math import comb

import pytest

from gpdecomp import (
    alon_lower_coefficient,
    base_coefficient,
    construct_theorem1_detailed,
    corollary2_below_one,
    corollary2_exact,
    corollary2_value,
    count_c_prime,
    predicted_family_tallies,
    predicted_theorem1_count,
    theorem1_coefficient,
    threshold_d,
)
from gpdecomp.bounds import corollary2_decreasing_at


def naive_partitions(total, max_part=None):
    """All partitions of ``total`` as non-increasing tuples (independent of
    the enumeration inside count_c_prime)."""
    if max_part is None:
        max_part = total
    if total == 0:
        return [()]
    out = []
    for first in range(min(total, max_part), 0, -1):
        for rest in naive_partitions(total - first, first):
            out.append((first,) + rest)
    return out


def naive_c_prime(r, d):
    return sum(
        1
        for p in naive_partitions(r)
        if len(p) <= d - 1 and sum(1 for x in p if x % 2) == 1
    )


def test_c_prime_examples():
    assert count_c_prime(5, 2) == 1
    assert count_c_prime(7, 3) == 4
    assert count_c_prime(3, 1) == 0


@pytest.mark.parametrize("d", range(1, 16))
def test_c_prime_agrees_with_naive_enumerator(d):
    r = 2 * d + 1
    assert count_c_prime(r, d) == naive_c_prime(r, d)


def test_coefficient_d2():
    rep = theorem1_coefficient(2, 10)
    assert rep.theorem1_coefficient == Fraction(44, 15)
    assert rep.c_prime == 1
    assert rep.epsilon_k == Fraction(1, 5)
    assert not rep.coefficient_below_one


def test_threshold():
    assert threshold_d() == 147
    assert base_coefficient(147) < 1
    assert base_coefficient(146) >= 1
    assert 2 * threshold_d() + 1 == 295


def test_coefficient_eventually_monotone_by_parity():
    # The coefficient is not monotone step by step: going from odd d to d+1
    # replaces d*q^m with q^(m+1) + (d+1)*q^m, a strict increase.  It does
    # decrease along each parity class, and stays below 1 from 147 onwards.
    for d in range(100, 199):
        assert base_coefficient(d + 2) < base_coefficient(d)
    for d in range(101, 103):
        assert base_coefficient(d + 1) > base_coefficient(d) or d % 2 == 0
    for d in range(147, 400):
        assert base_coefficient(d) < 1


def test_coefficient_exact_rational_path():
    # exact fractions all the way; spot-check a big exponent stays exact
    v = Fraction(14, 15) ** 400
    assert v.numerator == 14**400
    assert base_coefficient(5) == Fraction(14, 15) ** 2 + 5 * Fraction(14, 15) ** 2


def test_alon_lower_coefficient():
    assert alon_lower_coefficient(2) == 1
    assert alon_lower_coefficient(3) == 1
    assert alon_lower_coefficient(4) == Fraction(1, 3)
    assert alon_lower_coefficient(5) == Fraction(1, 3)


def test_corollary2_exact_multiples_of_four():
    assert corollary2_exact(4) == Fraction(28, 15)
    assert corollary2_exact(5) is None
    from decimal import localcontext

    with localcontext() as ctx:
        ctx.prec = 50
        expected = Decimal(28) / Decimal(15)
        assert abs(corollary2_value(4) - expected) < Decimal("1e-35")


def test_corollary2_at_295():
    assert corollary2_below_one(295)
    assert corollary2_value(295) < 1


def test_corollary2_decay():
    vals = [corollary2_value(r) for r in range(2, 200)]
    peak = vals.index(max(vals))
    for i in range(peak, len(vals) - 1):
        assert vals[i + 1] < vals[i]
    # exact rational decreasing test agrees with the decimal one
    for r in range(peak + 2, 200):
        assert corollary2_decreasing_at(r)


def test_corollary2_precision_is_stated():
    rep = theorem1_coefficient(3, 5, precision=35)
    assert rep.precision_digits == 35


@pytest.mark.parametrize(
    "n,k,d",
    [(2, 3, 2), (3, 3, 2), (4, 3, 2), (3, 2, 2), (4, 2, 2), (2, 4, 3), (3, 3, 3), (3, 4, 3)],
)
def test_predicted_matches_construction(n, k, d):
    r = 2 * d + 1
    if r > k * n:
        pytest.skip("r exceeds ground set")
    dec, tally = construct_theorem1_detailed(n, k, r)
    pred = predicted_family_tallies(n, k, d)
    assert pred["paired_two_classes"] == tally.paired_two_classes
    assert pred["two_plus_three"] == tally.two_plus_three
    assert pred["generic"] == tally.generic
    exact, bookkeeping = predicted_theorem1_count(n, k, d)
    assert exact == dec.piece_count
    assert exact <= bookkeeping


def test_predicted_worked_example():
    exact, bookkeeping = predicted_theorem1_count(3, 3, 2)
    assert exact == 27
    assert bookkeeping >= 27

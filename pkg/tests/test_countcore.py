from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from permfact.countcore import genus_of, mu, w_number, w_number_full_cycle, xi
from permfact.exactnum import factorial
from permfact.oracle import brute_mu, brute_xi
from permfact.partition import Partition, all_partitions, class_size


def test_w_number_examples():
    assert w_number((Partition([2]), Partition([2])), 2) == 1
    assert w_number((Partition([1]),), 1) == 1
    assert w_number((Partition([2]), Partition([2])), 1) == w_number_full_cycle(
        2, (Partition([2]),), 1
    )


def test_w_number_full_cycle_examples():
    assert w_number_full_cycle(2, (Partition([2]),), 2) == 1
    assert w_number_full_cycle(3, (Partition([3]),), 1) == w_number(
        (Partition([3]), Partition([3])), 1
    )
    assert w_number_full_cycle(3, (Partition([3]),), 3) == Fraction(2)


def test_w_number_full_cycle_agrees_with_general_form():
    for n in range(2, 7):
        full = Partition([n])
        for other in all_partitions(n):
            for m in range(1, n + 1):
                assert w_number_full_cycle(n, (other,), m) == w_number(
                    (full, other), m
                ), (other, m)


def test_w_number_range_errors():
    with pytest.raises(ValueError):
        w_number((Partition([2]), Partition([2])), 0)
    with pytest.raises(ValueError):
        w_number((Partition([2]), Partition([2])), 3)
    with pytest.raises(ValueError):
        w_number((Partition([2]), Partition([3])), 1)


def test_xi_examples():
    assert xi((Partition([2]), Partition([2])), 2) == 1
    assert xi((Partition([3]), Partition([3])), 1) == 2
    assert xi((Partition([3]), Partition([3]), Partition([3])), 1) == 6


def test_xi_matches_oracle_small():
    for n in range(1, 6):
        classes = all_partitions(n)
        for a in classes:
            for g in classes:
                for m in range(1, n + 1):
                    assert xi((a, g), m) == brute_xi((a, g), m), (a, g, m)


def test_xi_single_class():
    for n in range(1, 6):
        for c in all_partitions(n):
            for m in range(1, n + 1):
                expected = class_size(c) if c.length == m else 0
                assert xi((c,), m) == expected


def test_xi_class_order_invariance():
    for n in range(2, 5):
        classes = all_partitions(n)
        for a in classes:
            for b in classes:
                for g in classes:
                    base = [xi((a, b, g), m) for m in range(1, n + 1)]
                    for order in permutations((a, b, g)):
                        assert [
                            xi(order, m) for m in range(1, n + 1)
                        ] == base


@settings(deadline=None, max_examples=25)
@given(st.data())
def test_xi_pair_totals(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    classes = all_partitions(n)
    a = data.draw(st.sampled_from(classes))
    g = data.draw(st.sampled_from(classes))
    total = sum(xi((a, g), m) for m in range(1, n + 1))
    assert total == class_size(a) * class_size(g)


def test_mu_examples():
    assert mu(Partition([3]), 1) == 1
    assert mu(Partition([2, 1]), 2) == 3
    assert mu(Partition([2, 2]), 3) == 2


def test_mu_degenerate_inputs_return_zero():
    assert mu(Partition([2, 1]), 4) == 0
    assert mu(Partition([2, 1]), 0) == 0
    assert mu(Partition([2, 1]), -1) == 0


def test_mu_matches_oracle_small():
    for n in range(1, 8):
        for gamma in all_partitions(n):
            for m in range(1, n + 1):
                assert mu(gamma, m) == brute_mu(gamma, m), (gamma, m)


def test_mu_parity_vanishing():
    for n in range(1, 9):
        for gamma in all_partitions(n):
            for m in range(1, n + 1):
                if (n + 1 - gamma.length - m) % 2:
                    assert mu(gamma, m) == 0, (gamma, m)


def test_mu_is_xi_with_fixed_full_cycle():
    for n in range(1, 8):
        full = Partition([n])
        for gamma in all_partitions(n):
            for m in range(1, n + 1):
                assert mu(gamma, m) * factorial(n - 1) == xi((full, gamma), m)


def test_genus_of():
    assert genus_of(4, 2, 3) == 0
    assert genus_of(4, 2, 1) == 1
    assert genus_of(3, 1, 2) is None
    assert genus_of(3, 3, 3) is None  # negative Euler defect
    with pytest.raises(ValueError):
        genus_of(0, 1, 1)

from fractions import Fraction
from itertools import combinations

import pytest

from permfact.charkit import dimension
from permfact.partition import Partition, all_partitions
from permfact.symfun import (
    SparsePolynomial,
    monomial_sym,
    power_sum,
    schur,
    verify_m1_identities,
    verify_schur_identity,
)


def test_sparse_polynomial_arithmetic():
    x = SparsePolynomial(2, {(1, 0): 1})
    y = SparsePolynomial(2, {(0, 1): 1})
    p = (x + y) * (x + y)
    assert p.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert (p - p).is_zero()
    assert (0 * p).is_zero()
    assert p.evaluate((2, 3)) == 25
    q = x.tensor(y)
    assert q.nvars == 4 and q.terms == {(1, 0, 0, 1): 1}


def test_sparse_polynomial_drops_zero_coefficients():
    p = SparsePolynomial(1, {(1,): Fraction(0), (2,): Fraction(3)})
    assert p.terms == {(2,): 3}


def test_power_sum_examples():
    assert power_sum(Partition([1]), 2).terms == {(1, 0): 1, (0, 1): 1}
    assert power_sum(Partition([2]), 2).terms == {(2, 0): 1, (0, 2): 1}
    assert power_sum(Partition([1, 1]), 1).terms == {(2,): 1}


def test_schur_examples():
    assert schur(Partition([1]), 3) == power_sum(Partition([1]), 3)
    assert schur(Partition([2]), 2).terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert schur(Partition([1, 1]), 1).is_zero()


def test_monomial_examples():
    assert monomial_sym(Partition([2, 1]), 2).terms == {(2, 1): 1, (1, 2): 1}
    assert monomial_sym(Partition([1]), 3).terms == {
        (1, 0, 0): 1,
        (0, 1, 0): 1,
        (0, 0, 1): 1,
    }
    assert monomial_sym(Partition([3]), 2).terms == {(3, 0): 1, (0, 3): 1}
    assert monomial_sym(Partition([1, 1, 1]), 2).is_zero()


def test_schur_positivity():
    for n in range(1, 7):
        for lam in all_partitions(n):
            for k in range(1, 7):
                s = schur(lam, k)
                assert all(
                    c.denominator == 1 and c > 0 for c in s.terms.values()
                ), (lam, k)


def test_schur_sum_weighted_by_dimension():
    for n in range(1, 6):
        k = 3
        total = SparsePolynomial.zero(k)
        for lam in all_partitions(n):
            total = total + schur(lam, k) * dimension(lam)
        assert total == power_sum(Partition([1] * n), k)


@pytest.mark.parametrize("builder", [power_sum, schur, monomial_sym])
def test_symmetry_under_variable_transpositions(builder):
    k = 4
    for n in range(1, 6):
        for lam in all_partitions(n):
            p = builder(lam, k)
            for i, j in combinations(range(k), 2):
                order = list(range(k))
                order[i], order[j] = order[j], order[i]
                assert p.permuted(order) == p, (builder.__name__, lam, i, j)


def test_verify_schur_identity_small():
    for n in range(1, 4):
        report = verify_schur_identity(n)
        assert report.ok, [c.label for c in report.failures]


def test_verify_m1_identities_small():
    for n in range(1, 5):
        report = verify_m1_identities(n)
        assert report.ok, [c.label for c in report.failures]


def test_arity_mismatch_rejected():
    a = SparsePolynomial(2, {(1, 0): 1})
    b = SparsePolynomial(3, {(1, 0, 0): 1})
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        SparsePolynomial(2, {(1,): 1})

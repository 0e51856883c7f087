"""Exact sparse multivariate polynomials and symmetric-function identity checks.

Polynomials are dicts from exponent tuples to rational coefficients over
a fixed number of variables.  Products of two separate variable families
(the x's and the y's of the two-class generating function) are formed
with tensor(), which concatenates exponent vectors.

The identity checkers compare the two-class factorization generating
function against its shape expansion.  The auxiliary variable tracking
the cycle count is handled by evaluation at n+1 integer points, which is
equivalent for polynomials of degree <= n.
"""

from fractions import Fraction
from itertools import permutations

from .exactnum import factorial
from .partition import Partition, all_partitions, class_size
from .charkit import character, dimension, frak_c, frak_m
from .countcore import xi
from .report import CheckReport


class SparsePolynomial:
    """Multivariate polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean: dict = {}
        if terms:
            for exponents, coeff in terms.items():
                if len(exponents) != nvars:
                    raise ValueError(
                        f"exponent vector {exponents} does not have {nvars} entries"
                    )
                coeff = Fraction(coeff)
                if coeff:
                    clean[tuple(exponents)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "SparsePolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            new = terms.get(e, 0) + c
            if new:
                terms[e] = new
            else:
                terms.pop(e, None)
        out = SparsePolynomial(self.nvars)
        out.terms = terms
        return out

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, SparsePolynomial):
            if self.nvars != other.nvars:
                raise ValueError("variable count mismatch")
            terms: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    new = terms.get(e, 0) + c1 * c2
                    if new:
                        terms[e] = new
                    else:
                        terms.pop(e, None)
            out = SparsePolynomial(self.nvars)
            out.terms = terms
            return out
        coeff = Fraction(other)
        out = SparsePolynomial(self.nvars)
        if coeff:
            out.terms = {e: c * coeff for e, c in self.terms.items()}
        return out

    __rmul__ = __mul__

    def tensor(self, other: "SparsePolynomial") -> "SparsePolynomial":
        """Product over disjoint variable families: exponent concatenation."""
        out = SparsePolynomial(self.nvars + other.nvars)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[e1 + e2] = c1 * c2
        out.terms = terms
        return out

    def permuted(self, order) -> "SparsePolynomial":
        """Polynomial with variables reindexed: new var i is old var order[i]."""
        order = tuple(order)
        if sorted(order) != list(range(self.nvars)):
            raise ValueError("order must be a permutation of the variables")
        out = SparsePolynomial(self.nvars)
        out.terms = {
            tuple(e[order[i]] for i in range(self.nvars)): c
            for e, c in self.terms.items()
        }
        return out

    def evaluate(self, values) -> Fraction:
        values = tuple(values)
        if len(values) != self.nvars:
            raise ValueError("value count mismatch")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, p in zip(values, e):
                if p:
                    v *= Fraction(x) ** p
            total += v
        return total

    def __repr__(self):
        return f"SparsePolynomial(nvars={self.nvars}, terms={len(self.terms)})"


def power_sum(lam: Partition, k: int) -> SparsePolynomial:
    """Power-sum symmetric polynomial: product over parts of sum x_j^part."""
    if k < 1:
        raise ValueError("power_sum requires at least one variable")
    result = SparsePolynomial.constant(k, 1)
    for part in lam.parts:
        factor = SparsePolynomial(
            k,
            {
                tuple(part if j == i else 0 for j in range(k)): Fraction(1)
                for i in range(k)
            },
        )
        result = result * factor
    return result


def schur(lam: Partition, k: int) -> SparsePolynomial:
    """Schur polynomial via the character expansion over power sums.

    s = 1/n! sum over classes of |class| * character * power_sum.  With
    fewer variables than rows the result is correctly zero.
    """
    n = lam.n
    if n < 1:
        raise ValueError("schur requires a partition of n >= 1")
    result = SparsePolynomial.zero(k)
    for alpha in all_partitions(n):
        chi = character(lam, alpha)
        if chi == 0:
            continue
        result = result + power_sum(alpha, k) * Fraction(
            class_size(alpha) * chi, factorial(n)
        )
    return result


def monomial_sym(lam: Partition, k: int) -> SparsePolynomial:
    """Monomial symmetric polynomial: all distinct monomials of exponent type lam."""
    if k < 1:
        raise ValueError("monomial_sym requires at least one variable")
    if lam.length > k:
        return SparsePolynomial.zero(k)
    padded = tuple(lam.parts) + (0,) * (k - lam.length)
    exponents = set(permutations(padded))
    return SparsePolynomial(k, {e: Fraction(1) for e in exponents})


def _xi_generating_terms(n: int) -> list:
    """All (alpha, gamma, m, count) with a nonzero two-class count."""
    out = []
    for alpha in all_partitions(n):
        for gamma in all_partitions(n):
            for m in range(1, n + 1):
                value = xi((alpha, gamma), m)
                if value:
                    out.append((alpha, gamma, m, value))
    return out


def verify_schur_identity(n: int) -> CheckReport:
    """Check the two-class generating function against its shape expansion.

    Both sides are polynomials of degree <= n in the cycle-count marker,
    so equality at the integer points 0..n is equivalence.  The left side
    is assembled from the counting engine, the right side from
    hook-content products and Schur polynomials in n variables per family.
    """
    if n < 1:
        raise ValueError("verify_schur_identity requires n >= 1")
    report = CheckReport("schur-identity")
    k = n
    terms = _xi_generating_terms(n)
    p_cache = {alpha.parts: power_sum(alpha, k) for alpha in all_partitions(n)}
    s_pairs = []
    for lam in all_partitions(n):
        s = schur(lam, k)
        s_pairs.append((lam, s.tensor(s)))

    scale = Fraction(1, factorial(n) ** 2)
    for z in range(n + 1):
        lhs = SparsePolynomial.zero(2 * k)
        for alpha, gamma, m, value in terms:
            pp = p_cache[alpha.parts].tensor(p_cache[gamma.parts])
            lhs = lhs + pp * (scale * value * z ** m)
        rhs = SparsePolynomial.zero(2 * k)
        for lam, ss in s_pairs:
            weight = frak_m(lam, z) / dimension(lam)
            if weight:
                rhs = rhs + ss * weight
        diff = lhs - rhs
        detail = ""
        if not diff.is_zero():
            exp = min(diff.terms)
            detail = f"first mismatch at z={z}, monomial {exp}"
        report.add(f"n={n} z={z}", diff.is_zero(), detail)
    return report


def verify_m1_identities(n: int) -> CheckReport:
    """Compare the three routes to the single-cycle generating function.

    (a) direct counts, (b) the alternating hook-content weights on Schur
    pairs, (c) the monomial-basis expression with factorial weights.
    """
    if n < 1:
        raise ValueError("verify_m1_identities requires n >= 1")
    report = CheckReport("m1-identities")
    k = n
    p_cache = {alpha.parts: power_sum(alpha, k) for alpha in all_partitions(n)}

    direct = SparsePolynomial.zero(2 * k)
    scale = Fraction(1, factorial(n) ** 2)
    for alpha in all_partitions(n):
        for gamma in all_partitions(n):
            value = xi((alpha, gamma), 1)
            if value:
                pp = p_cache[alpha.parts].tensor(p_cache[gamma.parts])
                direct = direct + pp * (scale * value)

    shape_side = SparsePolynomial.zero(2 * k)
    for lam in all_partitions(n):
        weight = Fraction(0)
        for j in range(n):
            term = frak_c(lam, j + 1) / (j + 1)
            weight += -term if j % 2 else term
        if weight:
            s = schur(lam, k)
            shape_side = shape_side + s.tensor(s) * (weight / dimension(lam))

    monomial_side = SparsePolynomial.zero(2 * k)
    m_cache = {lam.parts: monomial_sym(lam, k) for lam in all_partitions(n)}
    for lam in all_partitions(n):
        for mu_ in all_partitions(n):
            slots = n + 1 - lam.length - mu_.length
            if slots < 0:
                continue
            weight = Fraction(
                factorial(n - lam.length) * factorial(n - mu_.length),
                factorial(n) * factorial(slots),
            )
            monomial_side = monomial_side + m_cache[lam.parts].tensor(
                m_cache[mu_.parts]
            ) * weight

    report.add(f"n={n} direct == shape expansion", direct == shape_side)
    report.add(f"n={n} direct == monomial expression", direct == monomial_side)
    report.add(f"n={n} shape == monomial", shape_side == monomial_side)
    return report

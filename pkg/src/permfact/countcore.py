"""The central counting engine.

Counts tuples of permutations from prescribed conjugacy classes whose
product has a given number of cycles (xi), and factorizations of a fixed
full cycle into a class member times a permutation with m cycles (mu,
which is the one-face bipartite map count).  All arithmetic is exact
rational; results are asserted integral and nonnegative at the boundary.
"""

from fractions import Fraction
from functools import lru_cache

from .exactnum import binomial, factorial, stirling_first_unsigned
from .partition import Partition, all_partitions, class_size
from .charkit import character, dimension, frak_c, hook_character_poly


class ConsistencyError(ArithmeticError):
    """A count came out non-integral or negative: an implementation bug."""


def _check_classes(classes) -> tuple:
    classes = tuple(classes)
    if not classes:
        raise ValueError("at least one conjugacy class is required")
    n = classes[0].n
    if n < 1:
        raise ValueError("classes must partition n >= 1")
    for c in classes[1:]:
        if c.n != n:
            raise ValueError(
                f"inconsistent class sizes: {classes[0]} and {c} partition different n"
            )
    return classes


def w_number(classes, m: int) -> Fraction:
    """Character-weighted class-product sum over all shapes.

    For classes C_1..C_t of S_n and 1 <= m <= n this is
    prod|C_i| / m! times the sum over shapes lam of
    frak_c(lam, m) * dim(lam)^(1-t) * prod_i character(lam, C_i).
    """
    classes = _check_classes(classes)
    n = classes[0].n
    if not 1 <= m <= n:
        raise ValueError(f"m = {m} out of range 1..{n}")
    t = len(classes)
    total = Fraction(0)
    for lam in all_partitions(n):
        chi_prod = 1
        for c in classes:
            chi = character(lam, c)
            if chi == 0:
                chi_prod = 0
                break
            chi_prod *= chi
        if chi_prod == 0:
            continue
        total += frak_c(lam, m) * Fraction(chi_prod, dimension(lam) ** (t - 1))
    sizes = 1
    for c in classes:
        sizes *= class_size(c)
    return Fraction(sizes, factorial(m)) * total


def w_number_full_cycle(n: int, other_classes, m: int) -> Fraction:
    """The same sum when one class consists of the full cycles.

    Only hook-shape characters survive, so the shape sum collapses to a
    single index j = 0..n-1 and no general character values are needed:
    (n-1)! prod|C_i| / m! times
    sum_j (-1)^j C(n-1-j, n-m) / C(n-1, j)^(t-1) * prod_i hookchar_j(C_i).
    """
    others = tuple(other_classes)
    if any(c.n != n for c in others):
        raise ValueError("other classes must partition n")
    if n < 1:
        raise ValueError("w_number_full_cycle requires n >= 1")
    if not 1 <= m <= n:
        raise ValueError(f"m = {m} out of range 1..{n}")
    t = len(others)
    hooks = [hook_character_poly(c) for c in others]
    total = Fraction(0)
    for j in range(n):
        chi_prod = 1
        for h in hooks:
            if h[j] == 0:
                chi_prod = 0
                break
            chi_prod *= h[j]
        if chi_prod == 0:
            continue
        top = binomial(n - 1 - j, n - m)
        if top == 0:
            continue
        term = top * chi_prod / Fraction(binomial(n - 1, j)) ** (t - 1)
        total += -term if j % 2 else term
    sizes = factorial(n - 1)
    for c in others:
        sizes *= class_size(c)
    return Fraction(sizes, factorial(m)) * total


def xi(classes, m: int) -> int:
    """Number of tuples (s_1..s_t), s_i in class C_i, whose product has m cycles.

    Alternating Stirling sum over the W-numbers.  When some class is the
    full cycles it is moved to the front (the count is invariant under
    reordering) and the collapsed hook-character form is used throughout.
    """
    classes = _check_classes(classes)
    n = classes[0].n
    if not 1 <= m <= n:
        raise ValueError(f"m = {m} out of range 1..{n}")
    return _xi_cached(tuple(c.parts for c in classes), n, m)


@lru_cache(maxsize=None)
def _xi_cached(parts_tuple: tuple, n: int, m: int) -> int:
    classes = [Partition._from_sorted(p) for p in parts_tuple]
    full = (n,)
    others = None
    for idx, c in enumerate(classes):
        if c.parts == full:
            others = classes[:idx] + classes[idx + 1:]
            break
    total = Fraction(0)
    for k in range(n - m + 1):
        s1 = stirling_first_unsigned(m + k, m)
        if others is not None:
            w = w_number_full_cycle(n, others, m + k)
        else:
            w = w_number(classes, m + k)
        term = s1 * w
        total += -term if k % 2 else term
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(f"xi came out {total} for classes={parts_tuple}, m={m}")
    return int(total)


@lru_cache(maxsize=None)
def _edge_choice_poly(gamma_parts: tuple) -> tuple:
    """Coefficients of prod over parts g of ((1+y)^g - 1), dense and exact."""
    poly = [1]
    for g in gamma_parts:
        factor = [binomial(g, k) for k in range(g + 1)]
        factor[0] = 0
        prod = [0] * (len(poly) + g)
        for a, ca in enumerate(poly):
            if ca:
                for b in range(1, g + 1):
                    prod[a + b] += ca * factor[b]
        poly = prod
    return tuple(poly)


def mu(gamma: Partition, m: int) -> int:
    """One-face bipartite map count: factorizations of a fixed full cycle.

    Counts pairs (sigma, pi) with sigma of cycle type gamma, pi having m
    cycles and sigma*pi equal to the fixed cycle (1 2 ... n).  Degenerate
    inputs (m outside 1..n, or parity making the count vanish) return 0.
    """
    n = gamma.n
    if n < 1:
        raise ValueError("mu requires a partition of n >= 1")
    if m < 1 or m > n:
        return 0
    return _mu_cached(gamma.parts, m)


@lru_cache(maxsize=None)
def _mu_cached(gamma_parts: tuple, m: int) -> int:
    n = sum(gamma_parts)
    poly = _edge_choice_poly(gamma_parts)
    total = Fraction(0)
    for k in range(n - m + 1):
        idx = n - m - k + 1
        coeff = poly[idx] if 0 <= idx < len(poly) else 0
        if coeff == 0:
            continue
        term = Fraction(stirling_first_unsigned(m + k, m) * coeff, factorial(m + k))
        total += -term if k % 2 else term
    gamma = Partition._from_sorted(gamma_parts)
    result = class_size(gamma) * total
    if result.denominator != 1 or result < 0:
        raise ConsistencyError(f"mu came out {result} for gamma={gamma}, m={m}")
    return int(result)


def genus_of(n: int, d: int, m: int):
    """Genus from the Euler relation, or None when it is not realizable.

    For a one-face map on n edges whose factor cycle counts are d and m,
    2 - 2g = 1 + d + m - n.  Returns the nonnegative integer g, or None
    when 1 + n - d - m is negative or odd (the count vanishes there).
    """
    if n < 1 or d < 1 or m < 1:
        raise ValueError("genus_of requires positive n, d, m")
    g2 = 1 + n - d - m
    if g2 < 0 or g2 % 2 != 0:
        return None
    return g2 // 2

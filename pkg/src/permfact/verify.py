"""Named verification suites driven by the CLI.

Each suite cross-checks one family of results, usually formula versus
brute force or two independent formulas against each other, and returns
a CheckReport with one case per unit of work.  Suite sizes are capped by
the brute-force guards where applicable.
"""

from fractions import Fraction
from itertools import product

from .exactnum import binomial, factorial
from .partition import Partition, all_partitions
from .countcore import ConsistencyError, mu, xi
from . import closedform, dimred, oracle, symfun
from .report import CheckReport

_ORACLE_T3_CAP = 5
_ORACLE_MU_CAP = 8

DEFAULT_N_MAX = {
    "oracle": 5,
    "closedform": 10,
    "schur": 3,
    "m1": 4,
    "jackson": 8,
    "hz": 8,
    "dimred": 8,
    "polynomiality": 10,
    "all": 5,
}


def suite_oracle(n_max: int) -> CheckReport:
    """Counting engine versus exhaustive enumeration."""
    report = CheckReport("oracle")
    for n in range(1, min(n_max, oracle._T2_LIMIT) + 1):
        classes = all_partitions(n)
        bad = []
        for a, g, m in product(classes, classes, range(1, n + 1)):
            if xi((a, g), m) != oracle.brute_xi((a, g), m):
                bad.append(f"({a};{g};m={m})")
        report.add(f"pairs n={n}", not bad, ", ".join(bad[:3]))
    for n in range(1, min(n_max, _ORACLE_T3_CAP) + 1):
        classes = all_partitions(n)
        bad = []
        for a, b, g in product(classes, repeat=3):
            for m in range(1, n + 1):
                if xi((a, b, g), m) != oracle.brute_xi((a, b, g), m):
                    bad.append(f"({a};{b};{g};m={m})")
        report.add(f"triples n={n}", not bad, ", ".join(bad[:3]))
    for n in range(1, min(n_max, _ORACLE_MU_CAP) + 1):
        bad = []
        for g in all_partitions(n):
            for m in range(1, n + 1):
                if mu(g, m) != oracle.brute_mu(g, m):
                    bad.append(f"({g};m={m})")
        report.add(f"one-face n={n}", not bad, ", ".join(bad[:3]))
    return report


def suite_closedform(n_max: int) -> CheckReport:
    """Every specialized formula against the general explicit one."""
    report = CheckReport("closedform")
    for n in range(1, n_max + 1):
        bad = []
        for m in range(1, n + 1):
            if closedform.zagier_stanley(n, m) != mu(Partition([n]), m):
                bad.append(f"m={m}")
        report.add(f"zagier-stanley n={n}", not bad, ", ".join(bad[:3]))

        bad = []
        for p in range(0, n):
            gamma = Partition([1] * p + [n - p])
            for m in range(1, n + 1):
                if closedform.mu_one_p(n, p, m) != mu(gamma, m):
                    bad.append(f"(p={p},m={m})")
        report.add(f"near-hook n={n}", not bad, ", ".join(bad[:3]))

        bad = []
        for t in range(0, n - 1):
            for p in range(1, n - t):
                if n - p - t < 1:
                    continue
                gamma = Partition([1] * t + [p, n - p - t])
                for m in range(1, n + 1):
                    if closedform.mu_t_p(n, t, p, m) != mu(gamma, m):
                        bad.append(f"(t={t},p={p},m={m})")
        report.add(f"three-block n={n}", not bad, ", ".join(bad[:3]))

        bad = []
        for p in range(1, n):
            gamma = Partition([p, n - p])
            for m in range(1, n + 1):
                if closedform.mu_two_parts(n, p, m) != mu(gamma, m):
                    bad.append(f"(p={p},m={m})")
                if closedform.mu_two_parts(n, p, m) != closedform.mu_t_p(n, 0, p, m):
                    bad.append(f"(p={p},m={m}) vs three-block")
        report.add(f"two-part n={n}", not bad, ", ".join(bad[:3]))

        bad = []
        for gamma in all_partitions(n):
            if closedform.mu_genus_zero(gamma) != mu(gamma, n + 1 - gamma.length):
                bad.append(str(gamma))
        report.add(f"genus-zero n={n}", not bad, ", ".join(bad[:3]))

        bad = []
        for p in range(1, n + 1):
            if n % p:
                continue
            blocks = n // p
            gamma = Partition([p] * blocks)
            for m in range(1, n + 1):
                if closedform.mu_p_power(blocks, p, m) != mu(gamma, m):
                    bad.append(f"(p={p},m={m})")
        report.add(f"equal-part n={n}", not bad, ", ".join(bad[:3]))
    return report


def suite_schur(n_max: int) -> CheckReport:
    report = CheckReport("schur")
    for n in range(1, n_max + 1):
        report.extend(symfun.verify_schur_identity(n))
    return report


def suite_m1(n_max: int) -> CheckReport:
    report = CheckReport("m1")
    for n in range(1, n_max + 1):
        report.extend(symfun.verify_m1_identities(n))
    return report


def suite_jackson(n_max: int) -> CheckReport:
    """By-part-count aggregation: internal agreement and the bivariate identity."""
    report = CheckReport("jackson")
    for n in range(1, n_max + 1):
        bad = []
        totals = {}
        for m in range(1, n + 1):
            for d in range(1, n + 1):
                try:
                    totals[m, d] = closedform.jackson_by_length(n, m, d)
                except ConsistencyError as exc:
                    bad.append(str(exc))
        report.add(f"direct vs closed sum n={n}", not bad, "; ".join(bad[:2]))

        # Bivariate identity with the n! normalization, at integer points.
        bad = []
        for x in range(n + 1):
            for y in range(n + 1):
                lhs = sum(
                    v * x ** m * y ** d for (m, d), v in totals.items()
                )
                rhs = factorial(n) * sum(
                    binomial(n - 1, k - 1)
                    * binomial(x, k)
                    * binomial(y + n - k, n - k + 1)
                    for k in range(1, n + 1)
                )
                if lhs != rhs:
                    bad.append(f"(x={x},y={y}): {lhs} != {rhs}")
        report.add(f"generating identity n={n}", not bad, "; ".join(bad[:2]))
    return report


def suite_hz(n_max: int) -> CheckReport:
    """One-face map counts: generating identities, pairing classes, Catalan."""
    report = CheckReport("hz")
    report.extend(closedform.hz_series_check(n_max))
    for n in range(1, min(n_max, 5) + 1):
        gamma = Partition([2] * n)
        bad = []
        for g in range(n // 2 + 1):
            if closedform.one_face_map_count(n, g) != mu(gamma, n + 1 - 2 * g):
                bad.append(f"g={g}")
        report.add(f"map counts vs pairing class n={n}", not bad, ", ".join(bad))
    bad = []
    for n in range(1, n_max + 1):
        catalan = binomial(2 * n, n) // (n + 1)
        if closedform.one_face_map_count(n, 0) != catalan:
            bad.append(f"n={n}")
    report.add(f"genus-0 column is Catalan n<={n_max}", not bad, ", ".join(bad))
    return report


def suite_dimred(n_max: int) -> CheckReport:
    """Reduction recursion versus the explicit formula, plus a build."""
    report = CheckReport("dimred")
    for n in range(2, n_max + 1):
        bad = []
        for gamma in all_partitions(n):
            if gamma.length < 2:
                continue
            for i in sorted(set(gamma.parts)):
                for m in range(1, n + 1):
                    got = dimred.reduce_mu(gamma, m, i)
                    want = Fraction(factorial(m) * mu(gamma, m), factorial(n))
                    if got != want:
                        bad.append(f"({gamma};m={m};i={i})")
        report.add(f"recursion vs explicit n={n}", not bad, ", ".join(bad[:3]))
    try:
        db = dimred.build_database(n_max)
        report.add(
            f"database build n_max={n_max} ({len(db.records)} records)", True
        )
    except dimred.DatabaseBuildError as exc:
        report.add(f"database build n_max={n_max}", False, str(exc))
    return report


def suite_polynomiality(n_max: int) -> CheckReport:
    """Weighted counts as bounded-degree symmetric polynomials of the parts."""
    report = CheckReport("polynomiality")
    for n in range(1, n_max + 1):
        for d in (2, 3):
            if d > n:
                continue
            for g in range(0, 3):
                if 1 - 2 * g + n - d < 1:
                    continue
                report.extend(closedform.polynomiality_check(n, d, g))
    return report


SUITES = {
    "oracle": suite_oracle,
    "closedform": suite_closedform,
    "schur": suite_schur,
    "m1": suite_m1,
    "jackson": suite_jackson,
    "hz": suite_hz,
    "dimred": suite_dimred,
    "polynomiality": suite_polynomiality,
}


def run_suite(name: str, n_max=None) -> CheckReport:
    """Run one named suite (or 'all') and return the combined report."""
    if name == "all":
        report = CheckReport("all")
        for sub in SUITES:
            cap = n_max if n_max is not None else DEFAULT_N_MAX[sub]
            report.extend(run_suite(sub, cap))
        return report
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{', '.join([*SUITES, 'all'])}")
    cap = n_max if n_max is not None else DEFAULT_N_MAX[name]
    return SUITES[name](cap)

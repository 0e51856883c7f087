"""Exact counting of permutation factorizations and one-face maps.

Counts tuples of permutations drawn from prescribed conjugacy classes of
the symmetric group whose product has a given number of cycles, and the
special case of factorizations of a fixed full cycle (one-face bipartite
maps, indexed by genus).  All arithmetic is exact: integers are
arbitrary precision and intermediate values are rationals.

Every counting route has an independent cross-check: a brute-force
oracle on small symmetric groups, specialized closed forms, symmetric
function identities, and a dimension-reduction recursion that also
drives the persisted count database.
"""

from .partition import (
    Partition,
    PartitionParseError,
    all_partitions,
    aut_lambda,
    class_size,
    parse_partition,
    remove_part,
    z_lambda,
)
from .exactnum import (
    binomial,
    double_factorial_odd,
    factorial,
    stirling_first_signed,
    stirling_first_unsigned,
    stirling_second,
)
from .charkit import (
    DiagramCell,
    character,
    diagram,
    dimension,
    frak_c,
    frak_m,
    hook_character_poly,
)
from .countcore import ConsistencyError, genus_of, mu, w_number, w_number_full_cycle, xi
from .closedform import (
    HZTableRow,
    hz_series_check,
    hz_table,
    jackson_by_length,
    mu_genus_zero,
    mu_one_p,
    mu_p_power,
    mu_t_p,
    mu_two_parts,
    one_face_map_count,
    polynomiality_check,
    zagier_stanley,
)
from .symfun import (
    SparsePolynomial,
    monomial_sym,
    power_sum,
    schur,
    verify_m1_identities,
    verify_schur_identity,
)
from .oracle import Perm, brute_mu, brute_xi, compose, cycle_type
from .dimred import (
    CountRecord,
    Database,
    DatabaseBuildError,
    DatabaseRangeError,
    build_database,
    load_database,
    reduce_mu,
    tilde_S,
)
from .report import CaseResult, CheckReport

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "PartitionParseError",
    "all_partitions",
    "aut_lambda",
    "class_size",
    "parse_partition",
    "remove_part",
    "z_lambda",
    "binomial",
    "double_factorial_odd",
    "factorial",
    "stirling_first_signed",
    "stirling_first_unsigned",
    "stirling_second",
    "DiagramCell",
    "character",
    "diagram",
    "dimension",
    "frak_c",
    "frak_m",
    "hook_character_poly",
    "ConsistencyError",
    "genus_of",
    "mu",
    "w_number",
    "w_number_full_cycle",
    "xi",
    "HZTableRow",
    "hz_series_check",
    "hz_table",
    "jackson_by_length",
    "mu_genus_zero",
    "mu_one_p",
    "mu_p_power",
    "mu_t_p",
    "mu_two_parts",
    "one_face_map_count",
    "polynomiality_check",
    "zagier_stanley",
    "SparsePolynomial",
    "monomial_sym",
    "power_sum",
    "schur",
    "verify_m1_identities",
    "verify_schur_identity",
    "Perm",
    "brute_mu",
    "brute_xi",
    "compose",
    "cycle_type",
    "CountRecord",
    "Database",
    "DatabaseBuildError",
    "DatabaseRangeError",
    "build_database",
    "load_database",
    "reduce_mu",
    "tilde_S",
    "CaseResult",
    "CheckReport",
    "__version__",
]

"""
Exact lattice theory of irreducible discrete (quasi-)copulas.

The quasi-copulas of order n, their sign-matrix and permutation
representations, the concordance lattice with its meet-irreducible
(bigrassmannian) elements, and exact rank statistics.
"""

from .core import (
    Classification, DiscopulaError, NotCopulaError, NotQuasiCopulaError, PositionSets,
    QuasiCopula, StructuralError, classify, format_qcm, frechet_lower, frechet_upper,
    is_associative, is_commutative, parse_qcm, positions,
)
from .enumeration import ResourceLimitError, enumerate_copulas, enumerate_quasi_copulas, robbins
from .irreducible import (
    CompletionLattice, FinitePoset, decompose, dedekind_macneille, enumerate_meet_irreducibles,
    format_decomposition, is_meet_irreducible, is_meet_irreducible_bruteforce, m_p_function,
    verify_completion,
)
from .matrixrep import (
    BigrassmannianParams, Permutation, SignMatrix, bigrassmannian_from_params,
    bigrassmannian_params, from_permutation, from_sign_matrix, inversion_count,
    is_bigrassmannian, left_descents, lukasiewicz, lukasiewicz_decomposition, ordinal_sum,
    right_descents, to_permutation, to_sign_matrix,
)
from .order import (
    HasseDiagram, bruhat_leq, check_lattice_laws, format_dot, hasse, join, leq, meet,
    non_lattice_witness, upper_covers, verify_order_isomorphism,
)
from .stats import (
    StatsReport, beta, entry_sum, kendall_tau, m_value, max_inversions_meet_irreducible,
    spearman_rho, stats_report, tau_bound_check,
)

__version__ = "0.1.0"

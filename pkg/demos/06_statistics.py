"""
Rank statistics
===============

Kendall's tau and Spearman's rho as exact fractions, and how negative tau
can get on a meet-irreducible.
"""

from discopula import (
    Permutation, enumerate_meet_irreducibles, from_permutation, kendall_tau, stats_report,
)
from discopula.stats import format_stats

print(format_stats(stats_report(from_permutation(Permutation.parse("231")))))

for n in range(2, 9):
    low = min(kendall_tau(q) for q in enumerate_meet_irreducibles(n))
    print(f"n={n}: min tau = {low}, bound -1/{n - 1}")

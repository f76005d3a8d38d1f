"""
Exact rank statistics of quasi-copulas.

Everything here is integer or `fractions.Fraction` arithmetic:

* ``entry_sum``  - sum of the interior entries ``|Q|``
* ``m_value``    - ``|M_n| - |Q|``, the rank of ``Q`` counted from the top
* ``beta``       - inversion-weighted sum, equal to ``m_value`` on copulas
* ``kendall_tau``  - ``1 - 4 l(w) / (n(n-1))`` for copulas
* ``spearman_rho`` - ``1 - 12 m(Q) / ((n-1)n(n+1))``, defined on all of Q_n
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import DiscopulaError, NotCopulaError, QuasiCopula, positions
from .matrixrep import Permutation, inversion_count, to_permutation

__all__ = [
    "UndefinedStatisticError", "StatsReport",
    "entry_sum", "m_value", "beta", "kendall_tau", "spearman_rho",
    "max_inversions_meet_irreducible", "tau_bound_check",
    "stats_report", "format_stats",
]


class UndefinedStatisticError(DiscopulaError):
    pass


def entry_sum(q: QuasiCopula) -> int:
    return sum(q.flat)


def _upper_sum(n: int) -> int:
    return n * (n + 1) * (2 * n + 1) // 6


def _rank(n: int) -> int:
    # m(W_n), the number of meet-irreducibles
    return (n - 1) * n * (n + 1) // 6


def m_value(q: QuasiCopula) -> int:
    return _upper_sum(q.n) - entry_sum(q)


def beta(w: Permutation) -> int:
    x = w.word
    return sum(x[i] - x[j] for i in range(len(x)) for j in range(i + 1, len(x)) if x[i] > x[j])


def kendall_tau(q: QuasiCopula) -> Fraction:
    if q.n < 2:
        raise UndefinedStatisticError("tau is undefined for n = 1")
    if positions(q).negative:
        raise NotCopulaError("tau defined via l(w) only for copulas")
    n = q.n
    return 1 - Fraction(4 * inversion_count(to_permutation(q)), n * (n - 1))


def spearman_rho(q: QuasiCopula) -> Fraction:
    if q.n < 2:
        raise UndefinedStatisticError("rho is undefined for n = 1")
    return 1 - Fraction(2 * m_value(q), _rank(q.n))


def max_inversions_meet_irreducible(n: int, verify: bool = False) -> int:
    """
    ``floor(n^2 / 4)``. With ``verify=True`` the value is also recomputed by
    maximizing ``i2 * i3`` over parameter tuples and by counting inversions
    of every meet-irreducible; a mismatch raises `AssertionError`.
    """
    if n < 2:
        raise DiscopulaError("need n >= 2")
    value = n * n // 4
    if verify:
        from .irreducible import bigrassmannian_param_tuples, enumerate_meet_irreducibles

        by_params = max(p.i2 * p.i3 for p in bigrassmannian_param_tuples(n))
        by_words = max(inversion_count(to_permutation(q)) for q in enumerate_meet_irreducibles(n))
        assert value == by_params == by_words, (value, by_params, by_words)
    return value


def tau_bound_check(n: int) -> bool:
    """
    ``-1/(n-1) <= tau <= 1`` on every meet-irreducible of order `n`, with
    the lower bound attained when `n` is even.
    """
    from .irreducible import enumerate_meet_irreducibles

    if n < 2:
        raise DiscopulaError("need n >= 2")
    taus = [kendall_tau(q) for q in enumerate_meet_irreducibles(n)]
    lower = Fraction(-1, n - 1)
    if not all(lower <= t <= 1 for t in taus):
        return False
    return n % 2 == 1 or min(taus) == lower


@dataclass(frozen=True)
class StatsReport:
    """Absent (undefined) statistics are None."""
    n: int
    inversions: int | None
    entry_sum: int
    m: int
    beta: int | None
    tau: Fraction | None
    rho: Fraction | None


def stats_report(q: QuasiCopula) -> StatsReport:
    copula = not positions(q).negative
    w = to_permutation(q) if copula else None
    return StatsReport(
        n=q.n,
        inversions=inversion_count(w) if w is not None else None,
        entry_sum=entry_sum(q),
        m=m_value(q),
        beta=beta(w) if w is not None else None,
        tau=kendall_tau(q) if copula and q.n >= 2 else None,
        rho=spearman_rho(q) if q.n >= 2 else None,
    )


def _fmt(x) -> str:
    if x is None:
        return "undefined"
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def format_stats(r: StatsReport) -> str:
    keys = ("n", "inversions", "entry_sum", "m", "beta", "tau", "rho")
    return "".join(f"{k}: {_fmt(getattr(r, k))}\n" for k in keys)

"""
Theorem-check suites run by ``discopula verify``.

Each suite takes the order `n` and returns a list of `Check` rows. A check
that does not apply at this `n` is reported as skipped rather than passed.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .core import is_associative, is_commutative
from .enumeration import enumerate_copulas, enumerate_quasi_copulas, robbins
from .irreducible import (
    bigrassmannian_param_tuples, dedekind_macneille, enumerate_meet_irreducibles,
    is_meet_irreducible, FinitePoset, verify_completion,
)
from .matrixrep import (
    Permutation, bigrassmannian_from_params, bigrassmannian_params, from_permutation,
    inversion_count, lukasiewicz_decomposition, to_permutation, to_sign_matrix,
)
from .order import (
    check_lattice_laws, hasse, lattice_index, leq, meet, non_lattice_witness,
    verify_order_isomorphism,
)
from .stats import beta, entry_sum, m_value, max_inversions_meet_irreducible, tau_bound_check

__all__ = ["Check", "SUITES", "MAX_VERIFY_N", "run_suites", "format_table", "all_passed"]

MAX_VERIFY_N = 5
LATTICE_SAMPLES = 100_000


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool | None  # None: skipped
    detail: str = ""

    @property
    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "SKIP"}[self.passed]


def _lattice(n: int) -> list[Check]:
    out = []
    qs = list(enumerate_quasi_copulas(n))
    samples = None if n <= 4 else LATTICE_SAMPLES
    v = check_lattice_laws(qs, samples=samples)
    scope = "all triples" if samples is None else f"{samples} random triples"
    out.append(Check("lattice", "Q_n distributive lattice", v.ok, v.message or scope))

    if n >= 3:
        v = check_lattice_laws(list(enumerate_copulas(n)))
        w = non_lattice_witness(n, "copulas")
        ok = (not v.ok and v.law == "closure under meet"
              and not meet(w.p, w.q).is_copula())
        out.append(Check("lattice", "P_n not a lattice", ok, v.message))
    else:
        out.append(Check("lattice", "P_n not a lattice", None, "needs n >= 3"))
    if n >= 4:
        w = non_lattice_witness(n, "proper")
        ok = not w.p.is_copula() and not w.q.is_copula() and w.meet.is_copula()
        out.append(Check("lattice", "Q_n \\ P_n not a lattice", ok, w.verdict))
    else:
        out.append(Check("lattice", "Q_n \\ P_n not a lattice", None, "needs n >= 4"))

    out.append(Check("lattice", "reverse Bruhat ~ concordance", verify_order_isomorphism(n)))

    d = hasse(n)
    sums = [entry_sum(q) for q in d.nodes]
    graded = all(sums[b] - sums[a] == 1 for a, b in d.edges)
    ends = d.sources() == [0] and d.sinks() == [len(d.nodes) - 1]
    out.append(Check("lattice", "Hasse diagram graded by entry sum",
                     graded and ends and len(d.nodes) == robbins(n),
                     f"{len(d.nodes)} nodes, {len(d.edges)} edges"))
    return out


def _completion(n: int) -> list[Check]:
    cops = [from_permutation(Permutation(w)) for w in permutations(range(1, n + 1))]
    poset = FinitePoset(len(cops), tuple(tuple(leq(a, b) for b in cops) for a in cops))
    size = len(dedekind_macneille(poset))
    return [Check("completion", "completion of P_n is Q_n",
                  verify_completion(n) and size == robbins(n), f"{size} cuts")]


def _mth1(n: int) -> list[Check]:
    idx = lattice_index(n)
    lattice_mi = {k for k in range(len(idx)) if idx.upper_cover_count(k) == 1}
    structural = {k for k, q in enumerate(idx.elements) if is_meet_irreducible(q)}
    count_ok = len(enumerate_meet_irreducibles(n)) == (n - 1) * n * (n + 1) // 6
    rank_ok = all(m_value(q) == sum(1 for m in lattice_mi if idx.up[k] >> m & 1)
                  for k, q in enumerate(idx.elements))
    beta_ok = all(beta(to_permutation(q)) == m_value(q) for q in enumerate_copulas(n))
    return [
        Check("mth1", "structural = lattice meet-irreducibles",
              structural == lattice_mi and count_ok, f"{len(lattice_mi)} meet-irreducibles"),
        Check("mth1", "m(Q) = #meet-irreducibles above Q", rank_ok),
        Check("mth1", "beta(w) = m(Q(w))", beta_ok),
    ]


def _tau(n: int) -> list[Check]:
    if n < 2:
        return [Check("tau", "max inversions / tau bound", None, "needs n >= 2")]
    try:
        ok, detail = True, f"max l = {max_inversions_meet_irreducible(n, verify=True)}"
    except AssertionError as exc:
        ok, detail = False, f"mismatch {exc}"
    return [Check("tau", "max l over M(S_n) = floor(n^2/4)", ok, detail),
            Check("tau", "tau >= -1/(n-1) on meet-irreducibles", tau_bound_check(n))]


def _assoc(n: int) -> list[Check]:
    cops = list(enumerate_copulas(n))
    structural = all(is_associative(q) == (lukasiewicz_decomposition(to_sign_matrix(q))
                                           is not None) for q in cops)
    coxeter_ok = comm_ok = params_ok = True
    for p in bigrassmannian_param_tuples(n):
        w = bigrassmannian_from_params(p)
        q = from_permutation(w)
        coxeter = inversion_count(w) == 1
        coxeter_ok &= is_associative(q) == coxeter
        comm_ok &= is_commutative(q) == (p.i2 == p.i3)
        params_ok &= bigrassmannian_params(w) == p
    return [
        Check("assoc", "bigrassmannian parameters round trip", params_ok),
        Check("assoc", "associative = Lukasiewicz ordinal sum", structural, f"{len(cops)} copulas"),
        Check("assoc", "associative meet-irreducible = Coxeter", coxeter_ok),
        Check("assoc", "commutative meet-irreducible = (i2 == i3)", comm_ok),
    ]


SUITES = {
    "lattice": _lattice,
    "completion": _completion,
    "mth1": _mth1,
    "tau": _tau,
    "assoc": _assoc,
}


def _run_one(name: str, n: int) -> list[Check]:
    return SUITES[name](n)


def run_suites(n: int, names: list[str] | None = None, parallel: bool = False) -> list[Check]:
    names = list(SUITES) if names is None else names
    if parallel:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run_one, names, [n] * len(names)))
    else:
        results = [_run_one(name, n) for name in names]
    return [c for rows in results for c in rows]


def format_table(checks: list[Check]) -> str:
    w1 = max(len(c.suite) for c in checks)
    w2 = max(len(c.name) for c in checks)
    lines = []
    for c in checks:
        line = f"{c.suite:<{w1}}  {c.name:<{w2}}  {c.status}"
        if c.detail:
            line += f"  ({c.detail})"
        lines.append(line)
    return "\n".join(lines) + "\n"


def all_passed(checks: list[Check]) -> bool:
    return all(c.passed is not False for c in checks)


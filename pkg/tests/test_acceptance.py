"""
Acceptance suite: one test per criterion, all exact.

Run under pytest for the PASS/FAIL summary, or directly with
``python3 tests/test_acceptance.py``.
"""

from fractions import Fraction
from itertools import combinations, permutations

from discopula import (
    BigrassmannianParams, FinitePoset, Permutation, SignMatrix, beta, bigrassmannian_from_params,
    check_lattice_laws, decompose, dedekind_macneille, entry_sum, enumerate_copulas,
    enumerate_meet_irreducibles, enumerate_quasi_copulas, frechet_lower, frechet_upper,
    from_permutation, from_sign_matrix, hasse, inversion_count, is_associative, is_commutative,
    is_meet_irreducible, is_meet_irreducible_bruteforce, kendall_tau, leq, lukasiewicz_decomposition,
    m_value, max_inversions_meet_irreducible, meet, non_lattice_witness, robbins, to_permutation,
    to_sign_matrix, upper_covers, verify_completion, verify_order_isomorphism,
)
from discopula.irreducible import bigrassmannian_param_tuples
from discopula.order import lattice_index, meet_all

import oracles
from helpers import Q3_ELEMENTS, interior


def Q(s):
    return from_permutation(Permutation.parse(s))


def test_criterion_01_hasse_of_order_three():
    d = hasse(3)
    assert {q.interior for q in d.nodes} == set(Q3_ELEMENTS.values())
    assert len(d.nodes) == 7 and len(d.edges) == 8
    proper = [q for q in d.nodes if not q.is_copula()]
    assert [q.interior for q in proper] == [Q3_ELEMENTS["middle"]]
    # the drawn cover lines
    name = {v: k for k, v in Q3_ELEMENTS.items()}
    drawn = {("bottom", "atom_231"), ("bottom", "atom_312"), ("atom_231", "middle"),
             ("atom_312", "middle"), ("middle", "coatom_132"), ("middle", "coatom_213"),
             ("coatom_132", "top"), ("coatom_213", "top")}
    got = {(name[d.nodes[a].interior], name[d.nodes[b].interior]) for a, b in d.edges}
    assert got == drawn


def test_criterion_02_robbins_counts():
    expected = [1, 2, 7, 42, 429, 7436]
    assert [robbins(n) for n in range(1, 7)] == expected
    assert [sum(1 for _ in enumerate_quasi_copulas(n)) for n in range(1, 7)] == expected


def test_criterion_03_bijections():
    for n in range(1, 6):
        asms = oracles.asms_by_rows(n)
        assert len(asms) == robbins(n)
        for rows in asms:
            a = SignMatrix(rows)
            assert to_sign_matrix(from_sign_matrix(a)) == a
        for q in enumerate_quasi_copulas(n):
            assert from_sign_matrix(to_sign_matrix(q)) == q
    for n in range(1, 7):
        for word in permutations(range(1, n + 1)):
            w = Permutation(word)
            assert to_permutation(from_permutation(w)) == w


def test_criterion_04_order_isomorphism():
    assert all(verify_order_isomorphism(n) for n in range(1, 6))


def test_criterion_05_distributive_lattice():
    for n in range(1, 5):
        v = check_lattice_laws(enumerate_quasi_copulas(n))
        assert v.ok, v.message
    v = check_lattice_laws(enumerate_quasi_copulas(5), samples=100_000)
    assert v.ok, v.message


def test_criterion_06_non_lattice_witnesses():
    m = meet(Q("132"), Q("213"))
    assert m.interior == Q3_ELEMENTS["middle"] and not m.is_copula()
    assert tuple(non_lattice_witness(3)) == (Q("132"), Q("213"))
    p, q = non_lattice_witness(4, "proper")
    assert p.interior == ((0, 0, 0, 1), (0, 1, 1, 2), (1, 1, 2, 3), (1, 2, 3, 4))
    assert q.interior == ((0, 0, 1, 1), (0, 1, 1, 2), (0, 1, 2, 3), (1, 2, 3, 4))
    assert to_sign_matrix(p).rows == ((0, 0, 0, 1), (0, 1, 0, 0), (1, -1, 1, 0), (0, 1, 0, 0))
    assert to_sign_matrix(q).rows == ((0, 0, 1, 0), (0, 1, -1, 1), (0, 0, 1, 0), (1, 0, 0, 0))
    pq = meet(p, q)
    assert pq.interior == ((0, 0, 0, 1), (0, 1, 1, 2), (0, 1, 2, 3), (1, 2, 3, 4))
    assert to_sign_matrix(pq).rows == ((0, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 0))


def test_criterion_07_completion():
    for n, cuts in [(2, 2), (3, 7), (4, 42), (5, 429)]:
        assert verify_completion(n)
        cops = list(enumerate_copulas(n))
        poset = FinitePoset(len(cops), tuple(tuple(leq(a, b) for b in cops) for a in cops))
        assert len(dedekind_macneille(poset)) == cuts
    bowtie = FinitePoset.from_relation(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    lat = dedekind_macneille(bowtie)
    assert len(lat) == 7
    added = {lat.members(k) for k in range(len(lat)) if k not in lat.embedding}
    assert added == {frozenset(), frozenset({0, 1}), frozenset({0, 1, 2, 3})}


def test_criterion_08_meet_irreducibles():
    for n in range(1, 6):
        idx = lattice_index(n)
        for q in idx.elements:
            assert is_meet_irreducible(q) == is_meet_irreducible_bruteforce(q, idx)
    counts = [len(enumerate_meet_irreducibles(n)) for n in range(2, 9)]
    assert counts == [1, 4, 10, 20, 35, 56, 84]
    assert counts == [(n - 1) * n * (n + 1) // 6 for n in range(2, 9)]


def test_criterion_09_decomposition():
    for n in range(1, 5):
        top = frechet_upper(n)
        for q in enumerate_quasi_copulas(n):
            if q == top:
                continue
            parts = decompose(q)
            assert all(is_meet_irreducible(r) for r in parts)
            assert not any(leq(a, b) for a in parts for b in parts if a != b)
            assert meet_all(parts, n) == q
    parts = decompose(interior([[0, 0, 1, 1], [0, 1, 1, 2], [0, 1, 2, 3], [1, 2, 3, 4]]))
    assert sorted(r.interior for r in parts) == sorted([
        ((0, 1, 1, 1), (0, 1, 2, 2), (0, 1, 2, 3), (1, 2, 3, 4)),
        ((0, 0, 1, 1), (1, 1, 2, 2), (1, 2, 3, 3), (1, 2, 3, 4)),
        ((1, 1, 1, 1), (1, 1, 1, 2), (1, 2, 2, 3), (1, 2, 3, 4)),
    ])
    for n in (2, 3):
        mi = enumerate_meet_irreducibles(n)
        antichains = {}
        for k in range(1, len(mi) + 1):
            for sub in combinations(mi, k):
                if not any(leq(a, b) for a in sub for b in sub if a != b):
                    antichains.setdefault(meet_all(sub, n), []).append(sorted(sub))
        for q in enumerate_quasi_copulas(n):
            if q != frechet_upper(n):
                assert antichains[q] == [decompose(q)]


def test_criterion_10_rank_counts_meet_irreducibles():
    for n in range(1, 6):
        mi = enumerate_meet_irreducibles(n)
        for q in enumerate_quasi_copulas(n):
            assert m_value(q) == sum(1 for r in mi if leq(q, r))
    assert m_value(Q("231")) == 3


def test_criterion_11_beta_identity():
    for n in range(1, 7):
        for word in permutations(range(1, n + 1)):
            w = Permutation(word)
            assert beta(w) == m_value(from_permutation(w))
    assert beta(Permutation.parse("231")) == 3


def test_criterion_12_kendall_bounds():
    for n in range(2, 9):
        mi = enumerate_meet_irreducibles(n)
        ells = [inversion_count(to_permutation(q)) for q in mi]
        assert max(ells) == n * n // 4 == max_inversions_meet_irreducible(n, verify=True)
        w = bigrassmannian_from_params(BigrassmannianParams(0, (n + 1) // 2, n // 2, 0))
        assert inversion_count(w) == n * n // 4
        assert all(kendall_tau(q) >= Fraction(-1, n - 1) for q in mi)


def test_criterion_13_rank_formulas():
    for n in range(1, 11):
        assert entry_sum(frechet_upper(n)) == n * (n + 1) * (2 * n + 1) // 6
        assert m_value(frechet_lower(n)) == (n - 1) * n * (n + 1) // 6


def test_criterion_14_associativity():
    for n in range(1, 6):
        for q in enumerate_copulas(n):
            assert is_associative(q) == (lukasiewicz_decomposition(to_sign_matrix(q)) is not None)
    for n in range(2, 7):
        assoc = [q for q in enumerate_meet_irreducibles(n) if is_associative(q)]
        coxeter = [from_permutation(Permutation(tuple(range(1, k)) + (k + 1, k)
                                                + tuple(range(k + 2, n + 1))))
                   for k in range(1, n)]
        assert sorted(assoc) == sorted(coxeter)
        assert all(upper_covers(q) == [frechet_upper(n)] for q in assoc)


def test_criterion_15_commutativity():
    for n in range(2, 7):
        for p in bigrassmannian_param_tuples(n):
            q = from_permutation(bigrassmannian_from_params(p))
            assert is_commutative(q) == (p.i2 == p.i3)
            assert is_commutative(q) == all(q(i, j) == q(j, i)
                                            for i in range(n + 1) for j in range(n + 1))


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
                print(f"PASS  {name}")
            except AssertionError as exc:
                failed += 1
                print(f"FAIL  {name}  {exc}")
    sys.exit(1 if failed else 0)

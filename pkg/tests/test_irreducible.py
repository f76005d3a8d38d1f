from itertools import combinations

import pytest

from discopula import (
    FinitePoset, Permutation, decompose, dedekind_macneille, enumerate_meet_irreducibles,
    format_decomposition, frechet_lower, frechet_upper, from_permutation, is_bigrassmannian,
    is_meet_irreducible, is_meet_irreducible_bruteforce, leq, m_p_function, meet, to_permutation,
    verify_completion,
)
from discopula.core import DiscopulaError
from discopula.irreducible import bigrassmannian_param_tuples, meet_irreducibles_bruteforce
from discopula.order import lattice_index, meet_all
from discopula.stats import m_value

from helpers import Q3_ELEMENTS, interior


def Q(s):
    return from_permutation(Permutation.parse(s))


def meet_irreducible_by_definition(z, universe):
    """z is not the top and z = x ^ y forces z in {x, y}."""
    top = max(universe, key=lambda q: sum(q.flat))
    if z == top:
        return False
    return all(meet(x, y) != z or z in (x, y) for x in universe for y in universe)


def test_structural_examples():
    assert is_meet_irreducible(Q("231"))
    assert not any(is_meet_irreducible(frechet_upper(n)) for n in range(1, 6))
    assert not is_meet_irreducible(interior(Q3_ELEMENTS["middle"]))


def test_bruteforce_examples(q_all):
    qs = q_all[3]
    assert is_meet_irreducible_bruteforce(interior(Q3_ELEMENTS["coatom_132"]), qs)
    assert is_meet_irreducible_bruteforce(interior(Q3_ELEMENTS["coatom_213"]), qs)
    assert not is_meet_irreducible_bruteforce(frechet_lower(3), qs)
    assert len(meet_irreducibles_bruteforce(qs)) == 4


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bruteforce_matches_definition(q_all, n):
    qs = q_all[n]
    for q in qs:
        assert is_meet_irreducible_bruteforce(q, qs) == meet_irreducible_by_definition(q, qs)


@pytest.mark.parametrize("n", range(1, 6))
def test_structural_equals_lattice_test(q_all, n):
    idx = lattice_index(n)
    for q in q_all[n]:
        assert is_meet_irreducible(q) == is_meet_irreducible_bruteforce(q, idx)


@pytest.mark.parametrize("n", range(1, 9))
def test_enumerate_meet_irreducibles(n):
    mi = enumerate_meet_irreducibles(n)
    assert len(mi) == len(set(mi)) == (n - 1) * n * (n + 1) // 6
    assert all(is_bigrassmannian(to_permutation(q)) for q in mi)
    assert [tuple(p) for p in bigrassmannian_param_tuples(n)] == sorted(
        tuple(p) for p in bigrassmannian_param_tuples(n))


def test_enumerate_meet_irreducible_examples():
    assert enumerate_meet_irreducibles(2) == [frechet_lower(2)]
    assert set(enumerate_meet_irreducibles(3)) == {Q("132"), Q("213"), Q("231"), Q("312")}
    assert Q("13456728") in enumerate_meet_irreducibles(8)


DECOMPOSITION_Q = [[0, 0, 1, 1], [0, 1, 1, 2], [0, 1, 2, 3], [1, 2, 3, 4]]
DECOMPOSITION_PARTS = [
    ((0, 1, 1, 1), (0, 1, 2, 2), (0, 1, 2, 3), (1, 2, 3, 4)),
    ((0, 0, 1, 1), (1, 1, 2, 2), (1, 2, 3, 3), (1, 2, 3, 4)),
    ((1, 1, 1, 1), (1, 1, 1, 2), (1, 2, 2, 3), (1, 2, 3, 4)),
]


def test_decompose_examples():
    parts = decompose(interior(DECOMPOSITION_Q))
    assert sorted(r.interior for r in parts) == sorted(DECOMPOSITION_PARTS)
    assert {str(to_permutation(r)) for r in parts} == {"2341", "3124", "1423"}
    assert decompose(frechet_lower(3)) == [Q("312"), Q("231")]
    for c in ("132", "213"):
        assert decompose(Q(c)) == [Q(c)]
    assert decompose(frechet_upper(4)) == []


@pytest.mark.parametrize("n", range(1, 5))
def test_decompose_properties(q_all, n):
    mi = enumerate_meet_irreducibles(n)
    for q in q_all[n]:
        if q == frechet_upper(n):
            continue
        parts = decompose(q)
        assert parts and all(is_meet_irreducible(r) for r in parts)
        assert not any(leq(a, b) for a in parts for b in parts if a != b)
        assert meet_all(parts, n) == q
        # minimality: swapping a part for a strictly larger meet-irreducible changes the meet
        for k, r in enumerate(parts):
            for s in mi:
                if s != r and leq(r, s):
                    assert meet_all(parts[:k] + [s] + parts[k + 1:], n) != q


@pytest.mark.parametrize("n", [2, 3])
def test_decomposition_unique(q_all, n):
    mi = enumerate_meet_irreducibles(n)
    found = {}
    for k in range(1, len(mi) + 1):
        for sub in combinations(mi, k):
            if any(leq(a, b) for a in sub for b in sub if a != b):
                continue
            found.setdefault(meet_all(sub, n), []).append(sorted(sub))
    for q in q_all[n]:
        if q != frechet_upper(n):
            assert found[q] == [decompose(q)]


def test_format_decomposition():
    text = format_decomposition(decompose(frechet_lower(3)))
    assert text == "0 0 1\n1 1 2\n1 2 3\n^\n0 1 1\n0 1 2\n1 2 3\n"
    assert format_decomposition([]).startswith("#")


def test_m_p_function_examples(q_all):
    qs = q_all[3]
    assert m_p_function(Q("231"), qs) == 3
    assert m_p_function(frechet_upper(3), qs) == 0
    assert m_p_function(frechet_lower(3), qs) == 4


@pytest.mark.parametrize("n", range(1, 6))
def test_m_p_function_equals_m_value(q_all, n):
    idx = lattice_index(n)
    assert all(m_p_function(q, idx) == m_value(q) for q in q_all[n])


BOWTIE = FinitePoset.from_relation(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


def test_bowtie_completion():
    lat = dedekind_macneille(BOWTIE)
    assert len(lat) == 7
    added = {lat.members(k) for k in range(len(lat)) if k not in lat.embedding}
    assert added == {frozenset(), frozenset({0, 1}), frozenset({0, 1, 2, 3})}
    assert lat.meet(lat.embedding[2], lat.embedding[3]) == lat.cuts.index(0b0011)
    assert lat.join(lat.embedding[0], lat.embedding[1]) == lat.cuts.index(0b0011)


def test_chain_and_antichain_completion():
    chain = FinitePoset.from_relation(5, [(k, k + 1) for k in range(4)])
    assert len(dedekind_macneille(chain)) == 5
    anti = FinitePoset.from_relation(2, [])
    lat = dedekind_macneille(anti)
    assert len(lat) == 4
    assert [len(lat.members(k)) for k in range(4)] == [0, 1, 1, 2]


@pytest.mark.parametrize("p", [
    BOWTIE,
    FinitePoset.from_relation(2, []),
    FinitePoset.from_relation(5, [(0, 2), (1, 2), (2, 3), (2, 4)]),
    FinitePoset.from_relation(6, [(0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)]),
])
def test_completion_is_idempotent(p):
    once = dedekind_macneille(p)
    twice = dedekind_macneille(once.as_poset())
    assert len(twice) == len(once)
    assert sorted(twice.embedding) == list(range(len(once)))
    # the embedding of a lattice into its completion is an order isomorphism
    for a in range(len(once)):
        for b in range(len(once)):
            assert once.leq(a, b) == twice.leq(twice.embedding[a], twice.embedding[b])


def test_finite_poset_validation():
    with pytest.raises(DiscopulaError, match="reflexive"):
        FinitePoset(2, ((True, False), (False, False)))
    with pytest.raises(DiscopulaError, match="antisymmetric"):
        FinitePoset(2, ((True, True), (True, True)))
    with pytest.raises(DiscopulaError, match="transitive"):
        FinitePoset(3, ((True, True, False), (False, True, True), (False, False, True)))


@pytest.mark.parametrize("n, cuts", [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429)])
def test_verify_completion(n, cuts):
    from itertools import permutations
    assert verify_completion(n)
    cops = [from_permutation(Permutation(w)) for w in permutations(range(1, n + 1))]
    poset = FinitePoset(len(cops), tuple(tuple(leq(a, b) for b in cops) for a in cops))
    assert len(dedekind_macneille(poset)) == cuts

"""
Filling in the gaps: the Dedekind-MacNeille completion
======================================================

Complete a small poset, then complete the copulas of order n and check
that the result is the lattice of quasi-copulas.
"""

from discopula import FinitePoset, dedekind_macneille, enumerate_copulas, leq, verify_completion

# two minimal and two maximal elements, every cross pair comparable
bowtie = FinitePoset.from_relation(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
lat = dedekind_macneille(bowtie)
print(len(lat), "elements after completion")
for k in range(len(lat)):
    tag = "original" if k in lat.embedding else "added"
    print(sorted(lat.members(k)), tag)

for n in range(2, 6):
    cops = list(enumerate_copulas(n))
    poset = FinitePoset(len(cops), tuple(tuple(leq(a, b) for b in cops) for a in cops))
    print(f"n={n}: {len(cops)} copulas -> {len(dedekind_macneille(poset))} cuts,",
          "matches quasi-copulas:", verify_completion(n))

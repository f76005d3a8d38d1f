"""
The seven quasi-copulas of order three
======================================

Enumerate every irreducible discrete quasi-copula on {0, 1, 2, 3}, sort
them into copulas and proper ones, and draw the cover relation.
"""

from discopula import enumerate_quasi_copulas, format_dot, format_qcm, hasse, positions

# the grids are stored with their zero border; `interior` drops it
qs = list(enumerate_quasi_copulas(3))
print(len(qs), "quasi-copulas")

for q in qs:
    kind = "copula" if q.is_copula() else "proper"
    print(f"{kind}:\n{format_qcm(q)}")

# exactly one of them fails the 2-increasing condition, at a single square
proper = [q for q in qs if not q.is_copula()][0]
print("negative positions of the proper one:", sorted(positions(proper).negative))

# covers raise one entry by one, so the diagram is graded by entry sum
d = hasse(3)
print(len(d.edges), "cover edges")
print(format_dot(d))

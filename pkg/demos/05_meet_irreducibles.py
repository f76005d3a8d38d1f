"""
Meet-irreducibles and decompositions
====================================

The meet-irreducible elements are the copulas of bigrassmannian
permutations. Every other element is the meet of a unique antichain of
them.
"""

from discopula import (
    bigrassmannian_params, decompose, enumerate_meet_irreducibles, format_decomposition,
    frechet_lower, m_value, to_permutation,
)
from discopula.core import QuasiCopula

for n in range(2, 6):
    print(n, len(enumerate_meet_irreducibles(n)), (n - 1) * n * (n + 1) // 6)

for q in enumerate_meet_irreducibles(4):
    w = to_permutation(q)
    print(w, tuple(bigrassmannian_params(w)))

q = QuasiCopula.from_interior([[0, 0, 1, 1], [0, 1, 1, 2], [0, 1, 2, 3], [1, 2, 3, 4]])
parts = decompose(q)
print(format_decomposition(parts))
print("as permutations:", [str(to_permutation(r)) for r in parts])

# the rank counts the meet-irreducibles above an element
print("m(W_4) =", m_value(frechet_lower(4)), "=", len(enumerate_meet_irreducibles(4)))

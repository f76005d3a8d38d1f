"""
Three pictures of the same object
=================================

A quasi-copula, its alternating sign matrix of second differences, and
(for copulas) a permutation. Corner sums take us back.
"""

from discopula import (
    Permutation, QuasiCopula, from_permutation, from_sign_matrix, positions, to_permutation, to_sign_matrix,
)
from discopula.matrixrep import format_asm

w = Permutation.parse("231")
q = from_permutation(w)
print("Q(231) =", q.interior)

# second differences give a permutation matrix here
a = to_sign_matrix(q)
print(format_asm(a))
assert from_sign_matrix(a) == q and to_permutation(q) == w

# a larger example with three -1 entries
big = QuasiCopula.from_interior([[0, 0, 0, 1, 1], [0, 0, 1, 1, 2], [0, 1, 1, 2, 3],
                              [1, 1, 2, 3, 4], [1, 2, 3, 4, 5]])
print(format_asm(to_sign_matrix(big)))
ps = positions(big)
print("positive:", sorted(ps.positive))
print("negative:", sorted(ps.negative))

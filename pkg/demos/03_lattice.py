"""
Meets, joins and a failed lattice
=================================

Quasi-copulas are closed under entrywise min and max. Copulas are not:
the meet of two copulas can be proper.
"""

from discopula import (
    Permutation, check_lattice_laws, enumerate_copulas, enumerate_quasi_copulas,
    from_permutation, join, meet, non_lattice_witness, to_sign_matrix,
)
from discopula.matrixrep import format_asm

p = from_permutation(Permutation.parse("132"))
q = from_permutation(Permutation.parse("213"))
m = meet(p, q)
print("meet:", m.interior, "copula?", m.is_copula())
print("join:", join(p, q).interior)

# all 42 elements of order four, every triple, both distributive laws
print(check_lattice_laws(enumerate_quasi_copulas(4)).message)

# the six copulas of order three already break closure
v = check_lattice_laws(enumerate_copulas(3))
print(v.law, "->", [str(x.interior) for x in v.witness])

# two proper quasi-copulas whose meet is a copula
w = non_lattice_witness(4, "proper")
print(format_asm(to_sign_matrix(w.p)))
print(format_asm(to_sign_matrix(w.q)))
print("their meet is a copula:", w.meet.is_copula())
print(format_asm(to_sign_matrix(w.meet)))

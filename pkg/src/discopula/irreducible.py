"""
Meet-irreducible quasi-copulas, antichain decompositions and the
Dedekind-MacNeille completion of a finite poset.

In the lattice of quasi-copulas the meet-irreducibles are exactly the
copulas of bigrassmannian permutations, so a quasi-copula is decomposed by
filtering those instead of walking the whole lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .core import DiscopulaError, QuasiCopula, format_qcm
from .matrixrep import (
    BigrassmannianParams, Permutation, bigrassmannian_from_params, from_permutation,
    is_bigrassmannian, to_permutation,
)
from .order import LatticeIndex, leq, meet_all

__all__ = [
    "is_meet_irreducible", "is_meet_irreducible_bruteforce", "meet_irreducibles_bruteforce",
    "bigrassmannian_param_tuples", "enumerate_meet_irreducibles",
    "decompose", "format_decomposition",
    "FinitePoset", "CompletionLattice", "dedekind_macneille", "verify_completion",
    "m_p_function",
]


def is_meet_irreducible(q: QuasiCopula) -> bool:
    """Structural test: a copula whose permutation is bigrassmannian."""
    return q.is_copula() and is_bigrassmannian(to_permutation(q))


def _universe_index(universe) -> LatticeIndex:
    return universe if isinstance(universe, LatticeIndex) else LatticeIndex.build(universe)


def is_meet_irreducible_bruteforce(q: QuasiCopula, universe) -> bool:
    """
    Lattice test against an explicit `universe` (elements or a `LatticeIndex`):
    `q` is not the maximum and has exactly one upper cover.
    """
    idx = _universe_index(universe)
    return idx.upper_cover_count(idx.index[q]) == 1


def meet_irreducibles_bruteforce(universe) -> list[QuasiCopula]:
    idx = _universe_index(universe)
    return [q for k, q in enumerate(idx.elements) if idx.upper_cover_count(k) == 1]


def bigrassmannian_param_tuples(n: int) -> list[BigrassmannianParams]:
    """All valid ``(i1, i2, i3, i4)`` summing to `n`, lexicographically."""
    out = []
    for i1 in range(n + 1):
        for i2 in range(1, n - i1 + 1):
            for i3 in range(1, n - i1 - i2 + 1):
                out.append(BigrassmannianParams(i1, i2, i3, n - i1 - i2 - i3))
    return out


def enumerate_meet_irreducibles(n: int) -> list[QuasiCopula]:
    """The ``(n-1)n(n+1)/6`` meet-irreducibles, ordered by parameter tuple."""
    if n <= 1:
        return []
    return [from_permutation(bigrassmannian_from_params(p))
            for p in bigrassmannian_param_tuples(n)]


def decompose(q: QuasiCopula) -> list[QuasiCopula]:
    """
    The minimal meet-irreducibles above `q`, in lexicographic order.

    They form an antichain whose meet is `q`. For the maximum ``M_n`` the
    result is empty, the empty meet being the maximum.
    """
    above = [r for r in enumerate_meet_irreducibles(q.n) if leq(q, r)]
    minimal = [r for r in above if not any(s != r and leq(s, r) for s in above)]
    return sorted(minimal)


def format_decomposition(parts: Sequence[QuasiCopula]) -> str:
    """Matrices in "qcm" format separated by lines holding only ``^``."""
    if not parts:
        return "# maximum element; empty decomposition\n"
    return "^\n".join(format_qcm(r) for r in parts)


def m_p_function(q: QuasiCopula, universe) -> int:
    """Number of lattice meet-irreducibles of `universe` lying above `q`."""
    idx = _universe_index(universe)
    k = idx.index[q]
    return sum(1 for m in range(len(idx)) if idx.up[k] >> m & 1 and idx.upper_cover_count(m) == 1)


# -- Dedekind-MacNeille completion ------------------------------------------

@dataclass(frozen=True)
class FinitePoset:
    """Elements ``0 .. size-1`` with ``leq[a][b]`` meaning ``a <= b``."""
    size: int
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        rel = tuple(tuple(bool(x) for x in row) for row in self.leq)
        s = self.size
        if s < 1 or len(rel) != s or any(len(r) != s for r in rel):
            raise DiscopulaError(f"relation must be {s}x{s} with size >= 1")
        up = [sum(1 << b for b in range(s) if rel[a][b]) for a in range(s)]
        down = [sum(1 << a for a in range(s) if rel[a][b]) for b in range(s)]
        for a in range(s):
            if not rel[a][a]:
                raise DiscopulaError(f"not reflexive at {a}")
            if up[a] & down[a] != 1 << a:
                b = ((up[a] & down[a]) & ~(1 << a)).bit_length() - 1
                raise DiscopulaError(f"not antisymmetric at ({a},{b})")
            for b in range(s):
                if up[a] >> b & 1 and up[b] & ~up[a]:
                    c = (up[b] & ~up[a]).bit_length() - 1
                    raise DiscopulaError(f"not transitive at ({a},{b},{c})")
        object.__setattr__(self, "leq", rel)
        object.__setattr__(self, "_up", tuple(up))
        object.__setattr__(self, "_down", tuple(down))

    @classmethod
    def from_relation(cls, size: int, pairs: Iterable[tuple[int, int]]) -> FinitePoset:
        """Reflexive-transitive closure of the given ``a <= b`` pairs."""
        rel = [[a == b for b in range(size)] for a in range(size)]
        for a, b in pairs:
            rel[a][b] = True
        for k in range(size):
            for a in range(size):
                if rel[a][k]:
                    for b in range(size):
                        if rel[k][b]:
                            rel[a][b] = True
        return cls(size, tuple(map(tuple, rel)))

    def down_mask(self, x: int) -> int:
        return self._down[x]

    def up_mask(self, x: int) -> int:
        return self._up[x]

    def upper_bounds(self, subset: int) -> int:
        """Bitmask of elements above every member of the bitmask `subset`."""
        out = (1 << self.size) - 1
        for a in range(self.size):
            if subset >> a & 1:
                out &= self._up[a]
        return out

    def lower_bounds(self, subset: int) -> int:
        out = (1 << self.size) - 1
        for a in range(self.size):
            if subset >> a & 1:
                out &= self._down[a]
        return out


@dataclass(frozen=True)
class CompletionLattice:
    """
    Cuts of a poset ordered by inclusion. Each cut is a bitmask over the
    original elements; ``embedding[x]`` is the index of the principal cut of
    ``x``. Cuts are sorted by size, then by mask.
    """
    source: FinitePoset
    cuts: tuple[int, ...]
    embedding: tuple[int, ...]

    def __len__(self):
        return len(self.cuts)

    def members(self, k: int) -> frozenset[int]:
        c = self.cuts[k]
        return frozenset(a for a in range(self.source.size) if c >> a & 1)

    def leq(self, a: int, b: int) -> bool:
        return self.cuts[a] & ~self.cuts[b] == 0

    def meet(self, a: int, b: int) -> int:
        return self.cuts.index(self.cuts[a] & self.cuts[b])

    def join(self, a: int, b: int) -> int:
        union = self.cuts[a] | self.cuts[b]
        # smallest cut containing both
        return min((k for k, c in enumerate(self.cuts) if union & ~c == 0),
                   key=lambda k: bin(self.cuts[k]).count("1"))

    def as_poset(self) -> FinitePoset:
        s = len(self.cuts)
        return FinitePoset(s, tuple(tuple(self.leq(a, b) for b in range(s)) for a in range(s)))


def dedekind_macneille(p: FinitePoset) -> CompletionLattice:
    """
    Every cut ``A = lower(upper(A))`` is an intersection of principal ideals
    (the whole set being the empty intersection), so the cuts are the
    intersection-closure of ``{P} + {down(x)}``.
    """
    full = (1 << p.size) - 1
    principal = [p.down_mask(x) for x in range(p.size)]
    cuts = {full, *principal}
    frontier = list(cuts)
    while frontier:
        new = []
        for c in frontier:
            for d in principal:
                e = c & d
                if e not in cuts:
                    cuts.add(e)
                    new.append(e)
        frontier = new
    ordered = tuple(sorted(cuts, key=lambda c: (bin(c).count("1"), c)))
    for c in ordered:
        assert p.lower_bounds(p.upper_bounds(c)) == c
    pos = {c: k for k, c in enumerate(ordered)}
    return CompletionLattice(p, ordered, tuple(pos[c] for c in principal))


def verify_completion(n: int) -> bool:
    """
    Complete the poset of copulas of order `n` and match it with the
    enumerated quasi-copulas through ``cut -> meet of its upper bounds``.
    """
    from .enumeration import enumerate_quasi_copulas

    if n > 5:
        raise DiscopulaError(f"verify_completion is bounded to n <= 5, got {n}")
    cops = [from_permutation(Permutation(w)) for w in permutations(range(1, n + 1))]
    size = len(cops)
    poset = FinitePoset(size, tuple(tuple(leq(a, b) for b in cops) for a in cops))
    lat = dedekind_macneille(poset)
    image = []
    for c in lat.cuts:
        ub = poset.upper_bounds(c)
        image.append(meet_all((cops[u] for u in range(size) if ub >> u & 1), n))
    universe = set(enumerate_quasi_copulas(n))
    if len(set(image)) != len(image) or set(image) != universe:
        return False
    m = len(lat)
    return all(lat.leq(a, b) == leq(image[a], image[b]) for a in range(m) for b in range(m))


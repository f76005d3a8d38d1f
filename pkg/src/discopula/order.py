"""
The concordance order on quasi-copulas: comparison, meet and join, covers,
Hasse diagrams, the Bruhat order on permutations and lattice-law checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .core import DiscopulaError, QuasiCopula, frechet_upper
from .enumeration import DEFAULT_MAX_N, ResourceLimitError, enumerate_quasi_copulas
from .matrixrep import Permutation, SignMatrix, from_permutation, from_sign_matrix

__all__ = [
    "leq", "meet", "join", "meet_all", "upper_covers",
    "HasseDiagram", "hasse", "format_dot", "HASSE_DEFAULT_MAX_N",
    "bruhat_leq", "verify_order_isomorphism",
    "LatticeVerdict", "check_lattice_laws",
    "NonLatticeWitness", "non_lattice_witness",
    "LatticeIndex", "lattice_index",
]

HASSE_DEFAULT_MAX_N = 5


def _same_n(p: QuasiCopula, q: QuasiCopula) -> None:
    if p.n != q.n:
        raise DiscopulaError(f"order mismatch: n={p.n} vs n={q.n}")


def leq(p: QuasiCopula, q: QuasiCopula) -> bool:
    """Entrywise ``P(i, j) <= Q(i, j)``."""
    _same_n(p, q)
    return all(a <= b for ra, rb in zip(p.grid, q.grid) for a, b in zip(ra, rb))


def meet(p: QuasiCopula, q: QuasiCopula) -> QuasiCopula:
    _same_n(p, q)
    return QuasiCopula(p.n, tuple(tuple(map(min, ra, rb)) for ra, rb in zip(p.grid, q.grid)))


def join(p: QuasiCopula, q: QuasiCopula) -> QuasiCopula:
    _same_n(p, q)
    return QuasiCopula(p.n, tuple(tuple(map(max, ra, rb)) for ra, rb in zip(p.grid, q.grid)))


def meet_all(qs: Iterable[QuasiCopula], n: int) -> QuasiCopula:
    """Meet of a family; the empty meet is the maximum ``M_n``."""
    out = frechet_upper(n)
    for q in qs:
        out = meet(out, q)
    return out


def upper_covers(q: QuasiCopula) -> list[QuasiCopula]:
    """
    All quasi-copulas obtained from `q` by raising one interior entry by 1.

    The entry sum grades the lattice, so these are exactly the covers of `q`.
    Returned in lexicographic order.
    """
    n = q.n
    out = []
    g = [list(r) for r in q.grid]
    for i in range(1, n):
        for j in range(1, n):
            v = g[i][j] + 1
            # unit steps towards the already-fixed neighbours
            if (v - g[i - 1][j] in (0, 1) and v - g[i][j - 1] in (0, 1)
                    and g[i + 1][j] - v in (0, 1) and g[i][j + 1] - v in (0, 1)):
                g[i][j] = v
                out.append(QuasiCopula(n, tuple(map(tuple, g))))
                g[i][j] = v - 1
    return sorted(out)


@dataclass(frozen=True)
class HasseDiagram:
    n: int
    nodes: tuple[QuasiCopula, ...]
    edges: frozenset[tuple[int, int]]

    def sources(self) -> list[int]:
        has_lower = {b for _, b in self.edges}
        return [k for k in range(len(self.nodes)) if k not in has_lower]

    def sinks(self) -> list[int]:
        has_upper = {a for a, _ in self.edges}
        return [k for k in range(len(self.nodes)) if k not in has_upper]


def hasse(n: int, *, max_n: int = HASSE_DEFAULT_MAX_N) -> HasseDiagram:
    if n > max_n:
        raise ResourceLimitError(
            f"hasse(n={n}) exceeds the bound {max_n}; pass a larger max_n explicitly")
    nodes = tuple(enumerate_quasi_copulas(n, max_n=max(max_n, DEFAULT_MAX_N)))
    index = {q: k for k, q in enumerate(nodes)}
    edges = frozenset((k, index[c]) for k, q in enumerate(nodes) for c in upper_covers(q))
    return HasseDiagram(n, nodes, edges)


def format_dot(d: HasseDiagram) -> str:
    width = max(3, len(str(len(d.nodes) - 1)))
    ids = [f"q{k:0{width}d}" for k in range(len(d.nodes))]
    lines = [f"digraph Q{d.n} {{", "  rankdir=BT;"]
    for k, q in enumerate(d.nodes):
        label = "/".join(" ".join(map(str, row)) for row in q.interior)
        lines.append(f'  {ids[k]} [label="{label}"];')
    for a, b in sorted(d.edges):
        lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- Bruhat order ------------------------------------------------------------

def bruhat_leq(v: Permutation, w: Permutation, reversed: bool = False) -> bool:
    """
    Bruhat order ``v <= w`` iff ``v(i, j) >= w(i, j)`` for all corner counts;
    ``reversed=True`` gives the reverse Bruhat order.
    """
    if v.n != w.n:
        raise DiscopulaError(f"order mismatch: n={v.n} vs n={w.n}")
    n = v.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            a, b = v.corner_count(i, j), w.corner_count(i, j)
            if (a > b) if reversed else (a < b):
                return False
    return True


def verify_order_isomorphism(n: int) -> bool:
    """Reverse Bruhat on permutations agrees with concordance on their copulas."""
    if n > 6:
        raise ResourceLimitError(f"verify_order_isomorphism is bounded to n <= 6, got {n}")
    perms = [Permutation(w) for w in permutations(range(1, n + 1))]
    cop = {w: from_permutation(w) for w in perms}
    return all(bruhat_leq(v, w, reversed=True) == leq(cop[v], cop[w])
               for v in perms for w in perms)


# -- indexed lattices -------------------------------------------------------

@dataclass
class LatticeIndex:
    """
    Elements in canonical order with bitmask up-sets and down-sets.

    ``up[k]`` has bit ``m`` set iff ``elements[k] <= elements[m]``.
    """
    elements: tuple[QuasiCopula, ...]
    index: dict[QuasiCopula, int] = field(repr=False)
    up: list[int] = field(repr=False)
    down: list[int] = field(repr=False)

    @classmethod
    def build(cls, elements: Iterable[QuasiCopula]) -> LatticeIndex:
        elems = tuple(sorted(set(elements)))
        flats = [q.flat for q in elems]
        size = len(elems)
        up = [0] * size
        down = [0] * size
        for a in range(size):
            fa = flats[a]
            for b in range(size):
                if all(x <= y for x, y in zip(fa, flats[b])):
                    up[a] |= 1 << b
                    down[b] |= 1 << a
        return cls(elems, {q: k for k, q in enumerate(elems)}, up, down)

    def __len__(self):
        return len(self.elements)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def upper_cover_count(self, a: int) -> int:
        strict = self.up[a] & ~(1 << a)
        count = 0
        b = strict
        while b:
            low = b & -b
            k = low.bit_length() - 1
            if not (strict & self.down[k] & ~low):
                count += 1
            b ^= low
        return count


@lru_cache(maxsize=None)
def lattice_index(n: int) -> LatticeIndex:
    """Indexed form of all quasi-copulas of order n (cached)."""
    return LatticeIndex.build(enumerate_quasi_copulas(n))


# -- lattice laws -------------------------------------------------------------

@dataclass(frozen=True)
class LatticeVerdict:
    ok: bool
    law: str | None = None
    witness: tuple[QuasiCopula, ...] = ()
    message: str = ""

    def __bool__(self):
        return self.ok


_LAWS = [
    # name, arity, check(m, j, x, y, z) -> bool on index tables
    ("meet idempotence", 1, lambda m, j, x, y, z: m[x][x] == x),
    ("join idempotence", 1, lambda m, j, x, y, z: j[x][x] == x),
    ("meet commutativity", 2, lambda m, j, x, y, z: m[x][y] == m[y][x]),
    ("join commutativity", 2, lambda m, j, x, y, z: j[x][y] == j[y][x]),
    ("absorption (meet over join)", 2, lambda m, j, x, y, z: m[x][j[x][y]] == x),
    ("absorption (join over meet)", 2, lambda m, j, x, y, z: j[x][m[x][y]] == x),
    ("meet associativity", 3, lambda m, j, x, y, z: m[x][m[y][z]] == m[m[x][y]][z]),
    ("join associativity", 3, lambda m, j, x, y, z: j[x][j[y][z]] == j[j[x][y]][z]),
    ("join distributes over meet", 3,
     lambda m, j, x, y, z: j[x][m[y][z]] == m[j[x][y]][j[x][z]]),
    ("meet distributes over join", 3,
     lambda m, j, x, y, z: m[x][j[y][z]] == j[m[x][y]][m[x][z]]),
]


def check_lattice_laws(elements: Iterable[QuasiCopula], *, samples: int | None = None,
                       seed: int = 0) -> LatticeVerdict:
    """
    Check closure under entrywise meet/join, then the lattice and both
    distributive laws.

    Closure is checked for meets first, then joins, over pairs in canonical
    order, so the reported failure is the lexicographically least one. The
    laws are checked on every tuple, or on `samples` random ones.
    """
    elems = tuple(sorted(set(elements)))
    size = len(elems)
    if size == 0:
        raise DiscopulaError("empty element set")
    if len({q.n for q in elems}) != 1:
        raise DiscopulaError("elements of mixed order")
    flats = [q.flat for q in elems]
    index = {f: k for k, f in enumerate(flats)}
    mt = [[0] * size for _ in range(size)]
    jt = [[0] * size for _ in range(size)]
    for op, table, name in ((min, mt, "meet"), (max, jt, "join")):
        for a in range(size):
            fa, row = flats[a], table[a]
            for b in range(size):
                k = index.get(tuple(map(op, fa, flats[b])))
                if k is None:
                    return LatticeVerdict(
                        False, f"closure under {name}", (elems[a], elems[b]),
                        f"{name} of elements {a} and {b} leaves the set")
                row[b] = k

    rng = random.Random(seed)
    for name, arity, law in _LAWS:
        if samples is None:
            tuples = _all_tuples(size, arity)
        else:
            tuples = (tuple(rng.randrange(size) for _ in range(arity)) for _ in range(samples))
        for t in tuples:
            x, y, z = (t + (0, 0))[:3]
            if not law(mt, jt, x, y, z):
                return LatticeVerdict(False, name, tuple(elems[k] for k in t),
                                      f"{name} fails at {t}")
    return LatticeVerdict(True, message=f"{size} elements satisfy all laws")


def _all_tuples(size: int, arity: int):
    r = range(size)
    if arity == 1:
        return ((x,) for x in r)
    if arity == 2:
        return ((x, y) for x in r for y in r)
    return ((x, y, z) for x in r for y in r for z in r)


# -- non-lattice witnesses -------------------------------------------------

# the two proper sign matrices of order 4 whose meet is a copula
_PROPER_WITNESS_A = ((0, 0, 0, 1), (0, 1, 0, 0), (1, -1, 1, 0), (0, 1, 0, 0))
_PROPER_WITNESS_B = ((0, 0, 1, 0), (0, 1, -1, 1), (0, 0, 1, 0), (1, 0, 0, 0))

MEET_ESCAPES = "meet escapes subset"


@dataclass(frozen=True)
class NonLatticeWitness:
    p: QuasiCopula
    q: QuasiCopula
    verdict: str = MEET_ESCAPES

    @property
    def meet(self) -> QuasiCopula:
        return meet(self.p, self.q)

    def __iter__(self):
        return iter((self.p, self.q))


def _pad(rows: Sequence[Sequence[int]], n: int) -> SignMatrix:
    k = len(rows)
    out = [tuple(r) + (0,) * (n - k) for r in rows]
    out += [(0,) * i + (1,) + (0,) * (n - i - 1) for i in range(k, n)]
    return SignMatrix(tuple(out))


def non_lattice_witness(n: int, subset: str = "copulas") -> NonLatticeWitness:
    """
    A pair from `subset` (``"copulas"`` or ``"proper"``) whose meet in the
    full lattice lies outside the subset.
    """
    if subset == "copulas":
        if n < 3:
            raise DiscopulaError(f"copulas of order {n} form a lattice or are trivially small")
        rest = tuple(range(4, n + 1))
        return NonLatticeWitness(from_permutation(Permutation((1, 3, 2) + rest)),
                                 from_permutation(Permutation((2, 1, 3) + rest)))
    if subset == "proper":
        if n < 4:
            raise DiscopulaError(
                f"proper quasi-copulas of order {n} form a lattice or are trivially small")
        return NonLatticeWitness(from_sign_matrix(_pad(_PROPER_WITNESS_A, n)),
                                 from_sign_matrix(_pad(_PROPER_WITNESS_B, n)))
    raise DiscopulaError(f"unknown subset {subset!r}; expected 'copulas' or 'proper'")


"""
Matrix representations: sign matrices, permutations and the bijections

    quasi-copula <-> alternating sign matrix (corner sums / second differences)
    copula       <-> permutation matrix

Permutations are 1-based words in one-line notation, so ``Permutation((2, 3, 1))``
is the permutation ``231`` with ``w(1) = 2``.

>>> q = from_permutation(Permutation.parse("231"))
>>> q.interior
((0, 1, 1), (0, 1, 2), (1, 2, 3))
>>> bigrassmannian_params(Permutation.parse("13456728"))
BigrassmannianParams(i1=1, i2=5, i3=1, i4=1)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from .core import (
    DiscopulaError, NotCopulaError, QuasiCopula, StructuralError,
    _parse_int_rows, positions,
)

__all__ = [
    "Permutation", "SignMatrix", "BigrassmannianParams", "InvalidSignMatrixError",
    "to_sign_matrix", "from_sign_matrix", "to_permutation", "from_permutation",
    "left_descents", "right_descents", "inversion_count", "is_bigrassmannian",
    "bigrassmannian_params", "bigrassmannian_from_params",
    "lukasiewicz", "ordinal_sum", "lukasiewicz_decomposition",
    "parse_asm", "format_asm", "parse_perm", "format_perm",
]


class InvalidSignMatrixError(DiscopulaError):
    """Raised with the first violated ASM constraint."""


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise StructuralError(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Accept ``"2 3 1"`` or, for n <= 9, the compact ``"231"``."""
        s = text.strip()
        toks = s.split() if any(c.isspace() for c in s) else list(s)
        try:
            return cls(tuple(int(t) for t in toks))
        except ValueError as exc:
            raise StructuralError(f"bad permutation {text!r}") from exc

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reverse(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, wi in enumerate(self.word, 1):
            inv[wi - 1] = i
        return Permutation(tuple(inv))

    def corner_count(self, i: int, j: int) -> int:
        """``w(i, j) = |{k <= i : w(k) <= j}|``."""
        return sum(1 for k in range(i) if self.word[k] <= j)

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.word))
        return " ".join(map(str, self.word))


@dataclass(frozen=True)
class SignMatrix:
    """An alternating sign matrix; validated on construction."""
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise StructuralError("sign matrix must be square and non-empty")
        for i, r in enumerate(rows, 1):
            for j, x in enumerate(r, 1):
                if x not in (-1, 0, 1):
                    raise InvalidSignMatrixError(f"entry ({i},{j}) = {x} not in {{-1,0,1}}")
        for i, r in enumerate(rows, 1):
            _check_line(r, f"row {i}")
        for j in range(n):
            _check_line([r[j] for r in rows], f"column {j + 1}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def is_permutation_matrix(self) -> bool:
        return all(x >= 0 for r in self.rows for x in r)

    def __str__(self):
        return format_asm(self)


def _check_line(line: Sequence[int], what: str) -> None:
    for k, s in enumerate(accumulate(line), 1):
        if s not in (0, 1):
            raise InvalidSignMatrixError(f"{what}: prefix sum through entry {k} is {s}")
    if sum(line) != 1:
        raise InvalidSignMatrixError(f"{what}: sum is {sum(line)}, expected 1")


@dataclass(frozen=True)
class BigrassmannianParams:
    i1: int
    i2: int
    i3: int
    i4: int

    def __post_init__(self):
        if min(self.i1, self.i4) < 0 or min(self.i2, self.i3) < 1:
            raise DiscopulaError(
                f"need i1, i4 >= 0 and i2, i3 >= 1, got {tuple(self)}")

    def __iter__(self):
        return iter((self.i1, self.i2, self.i3, self.i4))

    @property
    def n(self) -> int:
        return self.i1 + self.i2 + self.i3 + self.i4


# -- bijections ------------------------------------------------------------

def to_sign_matrix(q: QuasiCopula) -> SignMatrix:
    n = q.n
    return SignMatrix(tuple(tuple(q.second_difference(i, j) for j in range(1, n + 1))
                            for i in range(1, n + 1)))


def _corner_sums(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(rows)
    grid = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            grid[i][j] = (rows[i - 1][j - 1] + grid[i - 1][j]
                          + grid[i][j - 1] - grid[i - 1][j - 1])
    return tuple(map(tuple, grid))


def from_sign_matrix(a: SignMatrix) -> QuasiCopula:
    return QuasiCopula(a.n, _corner_sums(a.rows))


def to_permutation(q: QuasiCopula) -> Permutation:
    """The permutation whose matrix is the sign matrix of the copula `q`."""
    pos = positions(q)
    if pos.negative:
        i, j = min(pos.negative)
        raise NotCopulaError(f"not a copula: negative position at ({i},{j})")
    word = [0] * q.n
    for i, j in pos.positive:
        word[i - 1] = j
    return Permutation(tuple(word))


def from_permutation(w: Permutation) -> QuasiCopula:
    n = w.n
    grid = [[0] * (n + 1) for _ in range(n + 1)]
    for r in range(1, n + 1):
        wr = w(r)
        for s in range(1, n + 1):
            grid[r][s] = grid[r - 1][s] + (wr <= s)
    return QuasiCopula(n, tuple(map(tuple, grid)))


# -- descents, inversions, bigrassmannians ---------------------------------

def right_descents(w: Permutation) -> frozenset[int]:
    return frozenset(i for i in range(1, w.n) if w(i) > w(i + 1))


def left_descents(w: Permutation) -> frozenset[int]:
    return right_descents(w.inverse())


def inversion_count(w: Permutation) -> int:
    x = w.word
    return sum(1 for i in range(len(x)) for j in range(i + 1, len(x)) if x[i] > x[j])


def is_bigrassmannian(w: Permutation) -> bool:
    return len(left_descents(w)) == 1 and len(right_descents(w)) == 1


def bigrassmannian_params(w: Permutation) -> BigrassmannianParams:
    """
    Recover ``(i1, i2, i3, i4)`` from the unique right descent ``k``.

    The word splits into increasing runs ``w(1..k)`` and ``w(k+1..n)``; at
    most one jump larger than 1 occurs inside each run, marking the end of
    the first block and the start of the fourth.
    """
    dl, dr = left_descents(w), right_descents(w)
    if len(dl) != 1 or len(dr) != 1:
        raise DiscopulaError(
            f"{w} is not bigrassmannian: {len(dl)} left and {len(dr)} right descents")
    n = w.n
    (k,) = dr
    gaps_front = [i for i in range(1, k) if w(i + 1) - w(i) > 1]
    gaps_back = [i for i in range(k + 2, n + 1) if w(i) - w(i - 1) > 1]
    # a second jump in either run would create a second left descent
    assert len(gaps_front) <= 1 and len(gaps_back) <= 1, (gaps_front, gaps_back)
    i1 = gaps_front[0] if gaps_front else 0
    # index c opens the fourth block, which therefore holds n - c + 1 entries
    i4 = n - gaps_back[0] + 1 if gaps_back else 0
    i2 = k - i1
    return BigrassmannianParams(i1, i2, n - i1 - i2 - i4, i4)


def bigrassmannian_from_params(p: BigrassmannianParams) -> Permutation:
    """Swap the second and third blocks of ``1..n`` cut into sizes i1..i4."""
    i1, i2, i3, _ = p
    word = []
    for i in range(1, p.n + 1):
        if i <= i1:
            word.append(i)
        elif i <= i1 + i2:
            word.append(i + i3)
        elif i <= i1 + i2 + i3:
            word.append(i - i2)
        else:
            word.append(i)
    return Permutation(tuple(word))


# -- Lukasiewicz blocks and ordinal sums -----------------------------------

def lukasiewicz(n: int) -> SignMatrix:
    """The anti-diagonal permutation matrix of size `n`."""
    if n < 1:
        raise DiscopulaError("n must be positive")
    return SignMatrix(tuple(tuple(int(i + j == n + 1) for j in range(1, n + 1))
                            for i in range(1, n + 1)))


def ordinal_sum(blocks: Sequence[SignMatrix]) -> SignMatrix:
    """Block-diagonal sum along the main diagonal."""
    if not blocks:
        raise DiscopulaError("ordinal sum of no blocks")
    size = sum(b.n for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for r in b.rows:
            rows.append((0,) * offset + r + (0,) * (size - offset - b.n))
        offset += b.n
    return SignMatrix(tuple(rows))


def lukasiewicz_decomposition(a: SignMatrix) -> tuple[int, ...] | None:
    """
    Block sizes ``(k1, ..., km)`` with ``a = L_k1 + ... + L_km``, or None.

    Greedy: a block starting at row ``s`` must have its 1 at column
    ``s + k - 1``, which fixes ``k``; the remaining rows of the block must
    follow the anti-diagonal.
    """
    if not a.is_permutation_matrix():
        raise DiscopulaError("lukasiewicz_decomposition expects a permutation matrix")
    word = [r.index(1) + 1 for r in a.rows]
    sizes = []
    s = 1
    while s <= a.n:
        k = word[s - 1] - s + 1
        if k < 1 or s + k - 1 > a.n:
            return None
        if any(word[s - 1 + t] != s + k - 1 - t for t in range(k)):
            return None
        sizes.append(k)
        s += k
    return tuple(sizes)


# -- "asm" and "perm" text formats -----------------------------------------

def parse_asm(text: str) -> SignMatrix:
    rows = _parse_int_rows(text)
    if not rows:
        raise StructuralError("empty matrix")
    if any(len(r) != len(rows) for r in rows):
        raise StructuralError("sign matrix is not square")
    return SignMatrix(tuple(map(tuple, rows)))


def format_asm(a: SignMatrix) -> str:
    return "".join(" ".join(map(str, r)) + "\n" for r in a.rows)


def parse_perm(text: str) -> Permutation:
    lines = [s.strip() for s in text.splitlines()
             if s.strip() and not s.strip().startswith("#")]
    if len(lines) != 1:
        raise StructuralError("perm format expects exactly one line")
    try:
        return Permutation(tuple(int(t) for t in lines[0].split()))
    except ValueError as exc:
        raise StructuralError(f"non-integer token in {lines[0]!r}") from exc


def format_perm(w: Permutation) -> str:
    return " ".join(map(str, w.word)) + "\n"

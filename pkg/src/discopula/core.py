"""
Irreducible discrete quasi-copulas on ``L_n = {0, 1, ..., n}``.

A quasi-copula is stored as its full ``(n+1) x (n+1)`` integer grid,
zero-th row and column included, so that ``q[i, j]`` is ``Q(i, j)`` for
``0 <= i, j <= n``. Text formats drop the zero border.

>>> q = QuasiCopula.from_interior([[0, 1, 1], [1, 1, 2], [1, 2, 3]])
>>> classify(q.grid)
<Classification.PROPER_QUASI_COPULA: 'ProperQuasiCopula'>
>>> sorted(positions(q).negative)
[(2, 2)]
"""

from __future__ import annotations

import enum
import numbers
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DiscopulaError", "StructuralError", "NotQuasiCopulaError", "NotCopulaError",
    "Classification", "QuasiCopula", "PositionSets",
    "classify", "frechet_lower", "frechet_upper", "positions",
    "is_commutative", "is_associative",
    "parse_qcm", "parse_qcm_rows", "format_qcm",
]

Grid = tuple[tuple[int, ...], ...]


class DiscopulaError(ValueError):
    pass


class StructuralError(DiscopulaError):
    """Malformed input: wrong shape or non-integer entries."""


class NotQuasiCopulaError(DiscopulaError):
    """A well-formed grid that violates the quasi-copula axioms."""


class NotCopulaError(DiscopulaError):
    """A proper quasi-copula was given where a copula is required."""


class Classification(enum.Enum):
    NOT_QUASI_COPULA = "NotQuasiCopula"
    PROPER_QUASI_COPULA = "ProperQuasiCopula"
    COPULA = "Copula"

    def __str__(self):
        return self.value


def _as_grid(rows: Iterable[Iterable[int]]) -> Grid:
    grid = []
    for row in rows:
        out = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, numbers.Integral):
                raise StructuralError(f"non-integer entry {x!r}")
            out.append(int(x))
        grid.append(tuple(out))
    side = len(grid)
    if side == 0 or any(len(r) != side for r in grid):
        raise StructuralError(
            f"grid is not square: row lengths {[len(r) for r in grid]}")
    return tuple(grid)


def _quasi_violation(grid: Grid) -> str | None:
    """First failure of the boundary or unit-step conditions, or None."""
    n = len(grid) - 1
    for i in range(n + 1):
        if grid[i][0] != 0 or grid[0][i] != 0:
            return f"Q({i},0) and Q(0,{i}) must be 0"
        if grid[i][n] != i or grid[n][i] != i:
            return f"Q({i},{n}) and Q({n},{i}) must be {i}"
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if grid[i][j] - grid[i - 1][j] not in (0, 1):
                return f"Q({i},{j}) - Q({i - 1},{j}) not in {{0, 1}}"
            if grid[i][j] - grid[i][j - 1] not in (0, 1):
                return f"Q({i},{j}) - Q({i},{j - 1}) not in {{0, 1}}"
    return None


def _second_difference(grid: Grid, i: int, j: int) -> int:
    return grid[i][j] + grid[i - 1][j - 1] - grid[i][j - 1] - grid[i - 1][j]


def classify(grid: Sequence[Sequence[int]]) -> Classification:
    """
    Classify a full ``(n+1) x (n+1)`` grid, zero border included.

    Raises `StructuralError` for non-square grids, ``n < 1`` or non-integer
    entries; a well-formed grid that fails the axioms is reported as
    ``NOT_QUASI_COPULA``.
    """
    g = _as_grid(grid)
    if len(g) < 2:
        raise StructuralError("grid side must be at least 2 (n >= 1)")
    if _quasi_violation(g) is not None:
        return Classification.NOT_QUASI_COPULA
    n = len(g) - 1
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if _second_difference(g, i, j) < 0:
                return Classification.PROPER_QUASI_COPULA
    return Classification.COPULA


@dataclass(frozen=True, order=True)
class QuasiCopula:
    """
    An irreducible discrete quasi-copula of order `n`.

    Construction validates the boundary and unit-step conditions, which
    together characterize irreducible quasi-copulas. Instances order and
    hash by their grid, so sorting is lexicographic on the interior.
    """
    n: int
    grid: Grid

    def __post_init__(self):
        grid = _as_grid(self.grid)
        if self.n < 1 or len(grid) != self.n + 1:
            raise StructuralError(
                f"expected a {self.n + 1}x{self.n + 1} grid for n={self.n}")
        problem = _quasi_violation(grid)
        if problem is not None:
            raise NotQuasiCopulaError(problem)
        object.__setattr__(self, "grid", grid)

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[int]]) -> QuasiCopula:
        g = _as_grid(grid)
        return cls(len(g) - 1, g)

    @classmethod
    def from_interior(cls, rows: Sequence[Sequence[int]]) -> QuasiCopula:
        """Build from the n x n block ``Q(i, j)``, ``1 <= i, j <= n``."""
        inner = _as_grid(rows)
        n = len(inner)
        return cls(n, ((0,) * (n + 1),) + tuple((0,) + r for r in inner))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.grid[i][j]

    def __call__(self, i: int, j: int) -> int:
        return self.grid[i][j]

    @property
    def interior(self) -> Grid:
        return tuple(row[1:] for row in self.grid[1:])

    @property
    def flat(self) -> tuple[int, ...]:
        """Interior entries, row-major."""
        return tuple(x for row in self.grid[1:] for x in row[1:])

    def second_difference(self, i: int, j: int) -> int:
        """``a_ij``, the entry of the associated sign matrix (1-based)."""
        return _second_difference(self.grid, i, j)

    def classification(self) -> Classification:
        return classify(self.grid)

    def is_copula(self) -> bool:
        return not positions(self).negative

    def __str__(self):
        return format_qcm(self)


@dataclass(frozen=True)
class PositionSets:
    positive: frozenset[tuple[int, int]]
    negative: frozenset[tuple[int, int]]


def frechet_lower(n: int) -> QuasiCopula:
    """``W_n(i, j) = max(i + j - n, 0)``, the minimum of the lattice."""
    if n < 1:
        raise DiscopulaError("n must be positive")
    return QuasiCopula(n, tuple(tuple(max(i + j - n, 0) for j in range(n + 1))
                                for i in range(n + 1)))


def frechet_upper(n: int) -> QuasiCopula:
    """``M_n(i, j) = min(i, j)``, the maximum of the lattice."""
    if n < 1:
        raise DiscopulaError("n must be positive")
    return QuasiCopula(n, tuple(tuple(min(i, j) for j in range(n + 1))
                                for i in range(n + 1)))


def positions(q: QuasiCopula) -> PositionSets:
    pos, neg = set(), set()
    for i in range(1, q.n + 1):
        for j in range(1, q.n + 1):
            a = q.second_difference(i, j)
            if a > 0:
                pos.add((i, j))
            elif a < 0:
                neg.add((i, j))
    return PositionSets(frozenset(pos), frozenset(neg))


def is_commutative(q: QuasiCopula) -> bool:
    g = q.grid
    return all(g[i][j] == g[j][i] for i in range(q.n + 1) for j in range(i))


def is_associative(q: QuasiCopula) -> bool:
    """Exhaustive check of ``Q(i, Q(j, k)) == Q(Q(i, j), k)`` over ``L_n``."""
    g = q.grid
    r = range(q.n + 1)
    return all(g[i][g[j][k]] == g[g[i][j]][k] for i in r for j in r for k in r)


# -- "qcm" text format: n lines of n integers, Q(i, 1..n) on line i ---------

def _parse_int_rows(text: str) -> list[list[int]]:
    rows = []
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            rows.append([int(tok) for tok in s.split()])
        except ValueError as exc:
            raise StructuralError(f"non-integer token in line {line!r}") from exc
    return rows


def parse_qcm(text: str) -> QuasiCopula:
    """
    Parse a single quasi-copula in "qcm" format.

    Raises `StructuralError` for malformed text and `NotQuasiCopulaError`
    when the numbers do not form a quasi-copula.
    """
    rows = _parse_int_rows(text)
    if not rows:
        raise StructuralError("empty matrix")
    return QuasiCopula.from_interior(rows)


def parse_qcm_rows(text: str) -> list[list[int]]:
    """Interior rows of a "qcm" file, without any validation beyond integers."""
    return _parse_int_rows(text)


def format_qcm(q: QuasiCopula) -> str:
    return "".join(" ".join(map(str, row)) + "\n" for row in q.interior)

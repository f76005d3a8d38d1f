"""
Exhaustive generators for the quasi-copulas and copulas of order n, and the
Robbins numbers that count the former.

Quasi-copulas are produced row by row: row ``i`` of the grid dominates row
``i - 1`` by 0 or 1 entrywise, climbs by 0 or 1 left to right and ends at
``i``. Trying the smaller value first gives lexicographic order on the
flattened interior.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import islice, permutations
from math import factorial, prod
from typing import Iterator

from .core import DiscopulaError, QuasiCopula
from .matrixrep import Permutation, from_permutation

__all__ = [
    "ResourceLimitError", "DEFAULT_MAX_N", "DEFAULT_MAX_COPULA_N",
    "robbins", "enumerate_quasi_copulas", "enumerate_copulas",
]

DEFAULT_MAX_N = 6
DEFAULT_MAX_COPULA_N = 8


class ResourceLimitError(DiscopulaError):
    pass


def robbins(n: int) -> int:
    """``A_n = prod_{i<n} (3i+1)! / (n+i)!``, the number of n x n ASMs."""
    if n < 1:
        raise DiscopulaError("n must be positive")
    num = prod(factorial(3 * i + 1) for i in range(n))
    den = prod(factorial(n + i) for i in range(n))
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def _next_rows(prev: tuple[int, ...], i: int) -> Iterator[tuple[int, ...]]:
    # prev and the produced rows carry Q(i, 0) = 0 in slot 0
    n = len(prev) - 1
    row = [0] * (n + 1)

    def fill(j):
        if j > n:
            if row[n] == i:
                yield tuple(row)
            return
        for v in (prev[j], prev[j] + 1):
            if v - row[j - 1] in (0, 1) and v <= i:
                # row must still be able to reach i by unit steps
                if i - v <= n - j:
                    row[j] = v
                    yield from fill(j + 1)

    yield from fill(1)


def _extend(n: int, rows: list[tuple[int, ...]]) -> Iterator[QuasiCopula]:
    i = len(rows)
    if i > n:
        yield QuasiCopula(n, tuple(rows))
        return
    for r in _next_rows(rows[-1], i):
        rows.append(r)
        yield from _extend(n, rows)
        rows.pop()


def _first_rows(n: int) -> list[tuple[int, ...]]:
    return list(_next_rows((0,) * (n + 1), 1))


def _from_first_row(n: int, first: tuple[int, ...]) -> list[QuasiCopula]:
    return list(_extend(n, [(0,) * (n + 1), first]))


def enumerate_quasi_copulas(n: int, *, max_n: int = DEFAULT_MAX_N,
                            parallel: bool = False) -> Iterator[QuasiCopula]:
    """
    Yield every irreducible quasi-copula of order `n`, lexicographically.

    ``parallel=True`` partitions the work by first row across processes;
    the output order is unchanged.
    """
    if n < 1:
        raise DiscopulaError("n must be positive")
    if n > max_n:
        raise ResourceLimitError(
            f"n={n} exceeds the enumeration bound {max_n} "
            f"(projected {robbins(n)} quasi-copulas)")
    if not parallel:
        yield from _extend(n, [(0,) * (n + 1)])
        return
    firsts = _first_rows(n)
    with ProcessPoolExecutor() as pool:
        for chunk in pool.map(_from_first_row, [n] * len(firsts), firsts):
            yield from chunk


def enumerate_copulas(n: int, *, max_n: int = DEFAULT_MAX_COPULA_N) -> Iterator[QuasiCopula]:
    """Yield the copula of every permutation of ``1..n`` in lexicographic word order."""
    if n < 1:
        raise DiscopulaError("n must be positive")
    if n > max_n:
        raise ResourceLimitError(
            f"n={n} exceeds the enumeration bound {max_n} (projected {factorial(n)} copulas)")
    for word in permutations(range(1, n + 1)):
        yield from_permutation(Permutation(word))


def take(stream: Iterator[QuasiCopula], limit: int | None = None) -> list[QuasiCopula]:
    """Collect a stream, optionally truncated to `limit` items."""
    return list(stream if limit is None else islice(stream, limit))

"""Gelfand-Tsetlin patterns and the degenerations of Schubert and Richardson varieties.

A pattern has rows g[i] of length n+1-i with g_ij >= g_(i+1)j >= g_i(j+1).
The criteria for a monomial chi^g to survive read pipe dreams off the
equalities in g and compare Demazure products in Bruhat order.

>>> g = GTPattern.parse("3210/211/21/1")
>>> g(2, 1), g.row_sums()
(2, (6, 4, 3, 1))
>>> nonzero_in_richardson_strict(g, Permutation.parse("1324"), Permutation.parse("4231"))
True
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perm_core import Permutation, bruhat_leq, demazure_product, longest
from .tableaux_smt import Tableau


@dataclass(frozen=True)
class GTPattern:
    """Jagged integer rows; row i (1-based) has n+1-i entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if any(len(r) != n - i for i, r in enumerate(rows)):
            raise ValueError("row i must have n+1-i entries")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __call__(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    @classmethod
    def parse(cls, text: str) -> "GTPattern":
        """Rows separated by '/'; digits, or comma-separated entries."""
        rows = []
        for part in text.strip().split("/"):
            part = part.strip()
            rows.append(tuple(int(x) for x in part.split(",")) if "," in part else tuple(int(c) for c in part))
        return cls(tuple(rows))

    def __str__(self) -> str:
        sep = "," if any(x > 9 or x < 0 for r in self.rows for x in r) else ""
        return "/".join(sep.join(map(str, r)) for r in self.rows)

    @classmethod
    def zero(cls, n: int) -> "GTPattern":
        return cls(tuple((0,) * (n - i) for i in range(n)))

    def is_valid(self) -> bool:
        n = self.n
        for i in range(1, n):
            for j in range(1, n + 1 - i):
                if not self(i, j) >= self(i + 1, j) >= self(i, j + 1):
                    return False
        return True

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def top(self) -> tuple[int, ...]:
        return self.rows[0] if self.rows else ()

    def __add__(self, other: "GTPattern") -> "GTPattern":
        return GTPattern(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "GTPattern") -> "GTPattern":
        return GTPattern(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))


@dataclass(frozen=True)
class PipeDream:
    """A set of cells (i, j) with i + j <= n; cell (i, j) carries s_{i+j-1}."""

    n: int
    cells: frozenset[tuple[int, int]]

    def __post_init__(self):
        cells = frozenset((int(i), int(j)) for i, j in self.cells)
        if any(i < 1 or j < 1 or i + j > self.n for i, j in cells):
            raise ValueError("pipe dream cells must satisfy i, j >= 1 and i + j <= n")
        object.__setattr__(self, "cells", cells)

    def reading_word(self) -> list[int]:
        """Simple reflection indices, bottom row first, each row left to right."""
        return [i + j - 1 for i in range(self.n - 1, 0, -1) for j in range(1, self.n + 1 - i) if (i, j) in self.cells]


def staircase(n: int) -> PipeDream:
    return PipeDream(n, frozenset((i, j) for i in range(1, n) for j in range(1, n + 1 - i)))


def ubar(P: PipeDream) -> Permutation:
    """Demazure product of the reading word of P.

    >>> str(ubar(PipeDream(3, frozenset({(1, 1)})))), str(ubar(staircase(3)))
    ('213', '321')
    """
    return demazure_product(P.reading_word(), P.n)


def exponent_matrix(columns: Iterable[Sequence[int]], n: int) -> list[list[int]]:
    """Exponent matrix of the antidiagonal initial term of a product of Pluecker coordinates.

    In(Delta_I) for I = {i_1 < ... < i_k} is z_{i_1 k} z_{i_2 (k-1)} ... z_{i_k 1}.

    >>> exponent_matrix([(2, 3), (1,)], 3)
    [[1, 0, 0], [0, 1, 0], [1, 0, 0]]
    """
    A = [[0] * n for _ in range(n)]
    for I in columns:
        I = sorted(I)
        k = len(I)
        for p, i in enumerate(I, start=1):
            A[i - 1][k - p] += 1
    return A


def gamma(A: Sequence[Sequence[int]]) -> GTPattern | None:
    """gamma(A)_ij = A_ij + A_(i+1)j + ... + A_nj, if it is a GT pattern supported on i+j <= n+1.

    >>> str(gamma([[1, 0, 0], [0, 1, 0], [1, 0, 0]])), str(gamma([[0, 1, 0], [1, 0, 0], [1, 0, 0]]))
    ('210/11/1', '210/20/1')
    """
    n = len(A)
    G = [[sum(A[r][j] for r in range(i, n)) for j in range(n)] for i in range(n)]
    if any(G[i][j] != 0 for i in range(n) for j in range(n) if i + j + 2 > n + 1):
        return None
    g = GTPattern(tuple(tuple(G[i][: n - i]) for i in range(n)))
    return g if g.is_valid() else None


def gt_from_reverse_ssyt(T: Tableau, n: int | None = None) -> GTPattern:
    """Row k of the pattern is the shape of the entries >= k.

    >>> str(gt_from_reverse_ssyt(Tableau.parse("31/2", reverse=True), 3))
    '210/11/1'
    """
    if not T.reverse or not T.is_valid():
        raise ValueError(f"not a reverse semistandard tableau: {T}")
    n = T.max_entry() if n is None else n
    if T.max_entry() > n:
        raise ValueError("entries exceed n")
    rows = []
    for k in range(1, n + 1):
        lam = [sum(1 for x in r if x >= k) for r in T.rows]
        lam = lam + [0] * (n + 1 - k - len(lam))
        if any(lam[n + 1 - k:]):
            raise ValueError("tableau has too many rows for n")
        rows.append(tuple(lam[: n + 1 - k]))
    return GTPattern(tuple(rows))


def content_row_sums(alpha: Sequence[int]) -> tuple[int, ...]:
    """Row sums of the pattern of a reverse SSYT of content alpha."""
    return tuple(sum(alpha[i:]) for i in range(len(alpha)))


def enumerate_gt(lam: Sequence[int], row_sums: Sequence[int] | None = None) -> list[GTPattern]:
    """All integer GT patterns with top row lam, optionally with prescribed row sums.

    >>> len(enumerate_gt((2, 1, 0), content_row_sums((1, 1, 1))))
    2
    """
    lam = tuple(int(x) for x in lam)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("top row must weakly decrease")
    n = len(lam)
    if row_sums is not None and (len(row_sums) != n or row_sums[0] != sum(lam)):
        return []
    out = []

    def rows_below(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        def rec(j: int, acc: list[int]):
            if j == len(row) - 1:
                yield tuple(acc)
                return
            for v in range(row[j + 1], row[j] + 1):
                acc.append(v)
                yield from rec(j + 1, acc)
                acc.pop()

        yield from rec(0, [])

    def rec(rows: list[tuple[int, ...]]):
        if len(rows) == n:
            out.append(GTPattern(tuple(rows)))
            return
        i = len(rows)
        for r in rows_below(rows[-1]):
            if row_sums is not None and sum(r) != row_sums[i]:
                continue
            rows.append(r)
            rec(rows)
            rows.pop()

    if n:
        rec([lam])
    return out


def pipe_P(g: GTPattern) -> PipeDream:
    """Cells (i, j) with g_ij = g_(i+1)j."""
    n = g.n
    return PipeDream(n, frozenset((i, j) for i in range(1, n) for j in range(1, n + 1 - i) if g(i, j) == g(i + 1, j)))


def pipe_Q(g: GTPattern) -> PipeDream:
    """Cells (i, j) with g_i(n+2-i-j) = g_(i+1)(n+1-i-j)."""
    n = g.n
    return PipeDream(n, frozenset(
        (i, j) for i in range(1, n) for j in range(1, n + 1 - i) if g(i, n + 2 - i - j) == g(i + 1, n + 1 - i - j)
    ))


def ubar_of(g: GTPattern) -> Permutation:
    return ubar(pipe_P(g))


def wbar_of(g: GTPattern) -> Permutation:
    return ubar(pipe_Q(g)) * longest(g.n)


def nonzero_in_schubert(g: GTPattern, u: Permutation) -> bool:
    """chi^g survives in the degeneration of the Schubert variety X_u.

    >>> s1 = Permutation.parse("213")
    >>> nonzero_in_schubert(GTPattern.parse("210/20/1"), s1), nonzero_in_schubert(GTPattern.parse("210/11/1"), s1)
    (True, False)
    """
    return bruhat_leq(u, ubar_of(g))


def nonzero_in_opposite(g: GTPattern, w: Permutation) -> bool:
    """chi^g survives in the degeneration of the opposite Schubert variety X^w."""
    return bruhat_leq(wbar_of(g), w)


def nonzero_in_richardson_strict(g: GTPattern, u: Permutation, w: Permutation) -> bool:
    """Both criteria; only valid for a strictly decreasing top row."""
    top = g.top()
    if any(a <= b for a, b in zip(top, top[1:])):
        raise ValueError("top row must strictly decrease")
    return nonzero_in_schubert(g, u) and nonzero_in_opposite(g, w)


def richardson_gt_count(lam: Sequence[int], alpha: Sequence[int], u: Permutation, w: Permutation) -> int:
    """Number of patterns of top row lam and weight alpha passing the strict criterion."""
    return sum(1 for g in enumerate_gt(lam, content_row_sums(alpha)) if nonzero_in_richardson_strict(g, u, w))


def tau0(g: GTPattern) -> GTPattern:
    """tau0(g)_ij = g_11 - g_i(n+2-i-j), defined when g_1n = 0.

    >>> str(tau0(GTPattern.parse("210/11/1")))
    '210/11/1'
    """
    n = g.n
    if n and g(1, n) != 0:
        raise ValueError("tau0 needs g_1n = 0")
    return GTPattern(tuple(tuple(g(1, 1) - g(i, n + 2 - i - j) for j in range(1, n + 2 - i)) for i in range(1, n + 1)))


__all__ = [
    "GTPattern",
    "PipeDream",
    "staircase",
    "ubar",
    "exponent_matrix",
    "gamma",
    "gt_from_reverse_ssyt",
    "content_row_sums",
    "enumerate_gt",
    "pipe_P",
    "pipe_Q",
    "ubar_of",
    "wbar_of",
    "nonzero_in_schubert",
    "nonzero_in_opposite",
    "nonzero_in_richardson_strict",
    "richardson_gt_count",
    "tau0",
]

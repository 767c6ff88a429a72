"""Tableaux, Pluecker monomials and standard monomials on Richardson varieties.

A tableau is stored by rows.  Its columns, read top to bottom, are the index
sets of the Pluecker monomial.  Standardness for (u, w) asks for a Bruhat chain
u <= v_1 <= ... <= v_m <= w with v_j[k_j] = I_j; it is decided greedily with
minimal lifts.

>>> T = Tableau.parse("1123/23/4")
>>> T.columns()
[(1, 2, 4), (1, 3), (2,), (3,)]
>>> str(minimal_lift(Permutation.parse("1324"), (1, 2, 4)))
'1423'
>>> is_standard(Tableau.from_columns([(1, 2, 4), (3,)]), Permutation.parse("1324"), Permutation.parse("4231"))
False
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .perm_core import (
    Permutation,
    all_permutations,
    bruhat_leq,
    k_chains,
    longest,
    subset_leq,
)


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    >>> Partition.parse("2,1,1,0")
    Partition(parts=(2, 1, 1))
    >>> Partition((3, 1)).conjugate()
    Partition(parts=(2, 1, 1))
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        return cls(tuple(int(t) for t in text.replace(" ", ",").split(",") if t))

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part, zero past the end."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def is_strict(self, n: int) -> bool:
        """True if the zero-padded n-vector strictly decreases."""
        padded = list(self.parts) + [0] * (n - len(self.parts))
        return len(padded) == n and all(a > b for a, b in zip(padded, padded[1:]))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram, stored by rows (English convention).

    ``reverse`` marks a reverse tableau: rows weakly and columns strictly
    decrease.
    """

    rows: tuple[tuple[int, ...], ...]
    reverse: bool = False

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
            raise ValueError("row lengths must weakly decrease")

    @classmethod
    def parse(cls, text: str, reverse: bool = False) -> "Tableau":
        """Rows separated by '/'; digits, or comma-separated entries.

        >>> Tableau.parse("31/2", reverse=True).columns()
        [(3, 2), (1,)]
        """
        text = text.strip()
        if not text:
            return cls((), reverse)
        rows = []
        for part in text.split("/"):
            part = part.strip()
            rows.append(tuple(int(x) for x in part.split(",")) if "," in part else tuple(int(c) for c in part))
        return cls(tuple(rows), reverse)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], reverse: bool = False) -> "Tableau":
        """Build a tableau from its columns; each column is sorted to fit the orientation."""
        cols = [sorted(c, reverse=reverse) for c in columns]
        if any(len(a) < len(b) for a, b in zip(cols, cols[1:])):
            raise ValueError("column lengths must weakly decrease")
        height = len(cols[0]) if cols else 0
        rows = tuple(tuple(c[i] for c in cols if len(c) > i) for i in range(height))
        return cls(rows, reverse)

    def __str__(self) -> str:
        sep = "," if any(x > 9 for r in self.rows for x in r) else ""
        return "/".join(sep.join(map(str, r)) for r in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def columns(self) -> list[tuple[int, ...]]:
        if not self.rows:
            return []
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))]

    def content(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for r in self.rows:
            for x in r:
                counts[x - 1] += 1
        return tuple(counts)

    def max_entry(self) -> int:
        return max((x for r in self.rows for x in r), default=0)

    def is_valid(self) -> bool:
        """Check the (reverse) semistandard conditions."""
        sign = -1 if self.reverse else 1
        for r in self.rows:
            if any(x < 1 for x in r):
                return False
            if any(sign * (b - a) < 0 for a, b in zip(r, r[1:])):
                return False
        for c in self.columns():
            if any(sign * (b - a) <= 0 for a, b in zip(c, c[1:])):
                return False
        return True

    def reflected(self, n: int) -> "Tableau":
        """Apply i -> n+1-i to every entry; swaps SSYT and reverse SSYT."""
        return Tableau(tuple(tuple(n + 1 - x for x in r) for r in self.rows), not self.reverse)


def pluecker_monomial(T: Tableau) -> list[tuple[int, ...]]:
    """Column index sets of T, each read top to bottom.

    >>> pluecker_monomial(Tableau.parse("1123/23/4"))
    [(1, 2, 4), (1, 3), (2,), (3,)]
    """
    if not T.is_valid():
        raise ValueError(f"not a {'reverse ' if T.reverse else ''}semistandard tableau: {T}")
    return T.columns()


def format_monomial(columns: Sequence[Sequence[int]]) -> str:
    """Render a Pluecker monomial.

    >>> format_monomial([(1, 2, 4), (3,)])
    'D124*D3'
    """
    if not columns:
        return "1"
    sep = "," if any(x > 9 for c in columns for x in c) else ""
    return "*".join("D" + sep.join(map(str, c)) for c in columns)


def _horizontal_strips(outer: tuple[int, ...], inner: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Shapes nu with inner <= nu <= outer, nu/inner a horizontal strip of the given size."""
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))

    def rec(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                yield tuple(acc)
            return
        cap = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for v in range(inner[i], min(cap, inner[i] + left) + 1):
            acc.append(v)
            yield from rec(i + 1, left - (v - inner[i]), acc)
            acc.pop()

    yield from rec(0, size, [])


def ssyt(shape: Partition | Sequence[int], content: Sequence[int]) -> list[Tableau]:
    """All SSYT of the given shape and content, in a fixed order.

    >>> [str(T) for T in ssyt((2, 1), (1, 1, 1))]
    ['13/2', '12/3']
    """
    shape = shape if isinstance(shape, Partition) else Partition(tuple(shape))
    if shape.size != sum(content):
        return []
    outer = shape.parts
    out = []

    def rec(v: int, inner: tuple[int, ...], fills: list[tuple[int, ...]]):
        if v > len(content):
            rows = [[] for _ in outer]
            prev = (0,) * len(outer)
            for val, nu in enumerate(fills, start=1):
                for i in range(len(outer)):
                    rows[i].extend([val] * (nu[i] - prev[i]))
                prev = nu
            out.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        for nu in _horizontal_strips(outer, inner, content[v - 1]):
            fills.append(nu)
            rec(v + 1, nu, fills)
            fills.pop()

    rec(1, (0,) * len(outer), [])
    return out


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of total into the given number of parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def all_ssyt(shape: Partition | Sequence[int], n: int) -> list[Tableau]:
    """All SSYT of the given shape with entries in [n]."""
    shape = shape if isinstance(shape, Partition) else Partition(tuple(shape))
    return [T for alpha in compositions(shape.size, n) for T in ssyt(shape, alpha)]


def reverse_ssyt(shape: Partition | Sequence[int], content: Sequence[int]) -> list[Tableau]:
    """All reverse SSYT of the given shape and content."""
    n = len(content)
    return [T.reflected(n) for T in ssyt(shape, tuple(reversed(content)))]


def kostka(shape: Partition | Sequence[int], content: Sequence[int]) -> int:
    """Number of SSYT of the given shape and content.

    >>> kostka((2, 1), (1, 1, 1))
    2
    """
    return len(ssyt(shape, content))


def _meet_above(J: Sequence[int], lower: Sequence[int]) -> tuple[int, ...] | None:
    """Least r-subset K of J with K >= lower (componentwise on sorted tuples)."""
    pool = sorted(J)
    out, pos = [], 0
    for a in sorted(lower):
        while pos < len(pool) and pool[pos] < a:
            pos += 1
        if pos == len(pool):
            return None
        out.append(pool[pos])
        pos += 1
    return tuple(out)


def _join_below(C: Sequence[int], upper: Sequence[int]) -> tuple[int, ...] | None:
    """Greatest subset K of C with K <= upper (componentwise on sorted tuples)."""
    pool = sorted(C, reverse=True)
    out, pos = [], 0
    for a in sorted(upper, reverse=True):
        while pos < len(pool) and pool[pos] > a:
            pos += 1
        if pos == len(pool):
            return None
        out.append(pool[pos])
        pos += 1
    return tuple(sorted(out))


def minimal_lift(u: Permutation, J: Sequence[int]) -> Permutation | None:
    """The Bruhat-minimal x with x >= u and x[k] = J, or None if u[k] is not <= J.

    For r <= k the prefix x[r] is the least r-subset of J lying above u[r].
    For r > k its complement is the greatest (n-r)-subset of [n] \\ J lying
    below [n] \\ u[r].

    >>> str(minimal_lift(Permutation.parse("1423"), (3,)))
    '3412'
    >>> minimal_lift(Permutation.parse("3124"), (1, 2)) is None
    True
    """
    n, J = u.n, tuple(sorted(J))
    k = len(J)
    if len(set(J)) != k or any(not 1 <= j <= n for j in J):
        raise ValueError(f"not a subset of [{n}]: {J}")
    if not subset_leq(u.prefix(k), J):
        return None
    rest = tuple(sorted(set(range(1, n + 1)) - set(J)))
    prefixes: list[tuple[int, ...]] = [()]
    for r in range(1, n + 1):
        if r <= k:
            K = _meet_above(J, u.prefix(r))
        else:
            comp = _join_below(rest, sorted(set(range(1, n + 1)) - set(u.prefix(r))))
            K = None if comp is None else tuple(sorted(set(range(1, n + 1)) - set(comp)))
        if K is None or not set(prefixes[-1]) <= set(K):
            raise AssertionError(f"minimal lift prefixes not nested at r={r}")
        prefixes.append(K)
    images = tuple((set(prefixes[r]) - set(prefixes[r - 1])).pop() for r in range(1, n + 1))
    return Permutation(images)


def _columns_of(T: Tableau | Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    if isinstance(T, Tableau):
        return T.columns()
    return [tuple(c) for c in T]


def standard_lift(T: Tableau | Sequence[Sequence[int]], u: Permutation) -> list[Permutation] | None:
    """Greedy chain x_1 <= ... <= x_m of minimal lifts starting above u, or None."""
    cols = _columns_of(T)
    if any(len(a) < len(b) for a, b in zip(cols, cols[1:])):
        raise ValueError("column sizes must weakly decrease")
    chain, x = [], u
    for I in cols:
        x = minimal_lift(x, I)
        if x is None:
            return None
        chain.append(x)
    return chain


def is_standard(T: Tableau | Sequence[Sequence[int]], u: Permutation, w: Permutation) -> bool:
    """Whether the columns of T lift to a chain u <= v_1 <= ... <= v_m <= w.

    >>> u, w = Permutation.parse("1324"), Permutation.parse("4231")
    >>> is_standard([(1, 3, 4), (2,)], u, w), is_standard([(1, 2, 3), (4,)], u, w)
    (True, True)
    """
    chain = standard_lift(T, u)
    if chain is None:
        return False
    return bruhat_leq(chain[-1] if chain else u, w) and bruhat_leq(u, w)


def is_standard_reverse(T: Tableau | Sequence[Sequence[int]], u: Permutation, w: Permutation) -> bool:
    """Whether the columns lift to a chain w >= v_1 >= ... >= v_m >= u.

    Reflecting i -> n+1-i and multiplying by w0 on the left turns this into
    the ordinary condition for (w0 w, w0 u).
    """
    n = u.n
    w0 = longest(n)
    cols = [tuple(n + 1 - i for i in c) for c in _columns_of(T)]
    return is_standard(cols, w0 * w, w0 * u)


_leq = lru_cache(maxsize=1 << 16)(bruhat_leq)


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[Permutation, ...]:
    return tuple(all_permutations(n))


def is_standard_bruteforce(T: Tableau | Sequence[Sequence[int]], u: Permutation, w: Permutation) -> bool:
    """Search all of S_n for a lifting chain; an oracle for small n."""
    cols = _columns_of(T)
    if not bruhat_leq(u, w):
        return False
    frontier = [u]
    for I in cols:
        S = set(I)
        frontier = [v for v in _perms(u.n) if set(v.prefix(len(I))) == S and _leq(v, w)
                    and any(_leq(x, v) for x in frontier)]
        if not frontier:
            return False
    return True


def standard_count(shape: Partition | Sequence[int], content: Sequence[int], u: Permutation, w: Permutation) -> int:
    """Number of SSYT of the given shape and content that are standard for (u, w).

    >>> standard_count((2, 1, 1, 0), (1, 1, 1, 1), Permutation.parse("1324"), Permutation.parse("4231"))
    2
    """
    return sum(1 for T in ssyt(shape, content) if is_standard(T, u, w))


def mountain(I: Sequence[int], n: int) -> Permutation:
    """The mountain permutation a_1 < ... < a_{j-1} < n > b_1 > ... whose a-part is I \\ {n}.

    >>> str(mountain((2, 4), 4)), str(mountain((1, 3), 4))
    ('2431', '1342')
    """
    a = sorted(set(I) - {n})
    b = sorted(set(range(1, n)) - set(a), reverse=True)
    return Permutation(tuple(a + [n] + b))


def delta_k_facets(u: Permutation, w: Permutation, k: int) -> list[tuple[tuple[int, ...], ...]]:
    """Facets of Delta_k(u, w): the k-prefixes along saturated k-Bruhat chains.

    >>> delta_k_facets(Permutation.parse("2143"), Permutation.parse("3412"), 2)
    [((1, 2), (1, 3), (3, 4)), ((1, 2), (2, 4), (3, 4))]
    """
    facets = set()
    for perms, _ in k_chains(u, w, k):
        facets.add(tuple(sorted({v.prefix(k) for v in perms})))
    return sorted(facets)


__all__ = [
    "Partition",
    "Tableau",
    "pluecker_monomial",
    "format_monomial",
    "ssyt",
    "all_ssyt",
    "reverse_ssyt",
    "compositions",
    "kostka",
    "minimal_lift",
    "standard_lift",
    "is_standard",
    "is_standard_reverse",
    "is_standard_bruteforce",
    "standard_count",
    "mountain",
    "delta_k_facets",
]

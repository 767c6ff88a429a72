"""Finite symmetric groups: one-line permutations, words, Bruhat orders.

Conventions: everything is 1-based.  ``Permutation((2, 3, 1))`` is the map
1 -> 2, 2 -> 3, 3 -> 1, and ``u * v`` is the composite ``j -> u(v(j))``.

>>> s1, s2 = simple(1, 3), simple(2, 3)
>>> str(s1 * s2)
'231'
>>> length(Permutation.parse("3241"))
4
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of [n] in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of [n]: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(x) for x in self.images)
        return ",".join(str(x) for x in self.images)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read ``"2143"`` or ``"10,2,3,..."``.

        >>> Permutation.parse("2143").images
        (2, 1, 4, 3)
        """
        text = text.strip().strip("[]()")
        if "," in text or " " in text.strip():
            parts = [p for p in text.replace(",", " ").split()]
            return cls(tuple(int(p) for p in parts))
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for j, x in enumerate(self.images, start=1):
            inv[x - 1] = j
        return Permutation(tuple(inv))

    def prefix(self, i: int) -> tuple[int, ...]:
        """The sorted set w[i] = {w(1), ..., w(i)}."""
        return tuple(sorted(self.images[:i]))

    def is_identity(self) -> bool:
        return all(x == j for j, x in enumerate(self.images, start=1))


@dataclass(frozen=True)
class Word:
    """A word s_{i_1} ... s_{i_a} in the simple generators of S_n."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for i in letters:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"letter {i} out of range for S_{self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, j):
        return self.letters[j]

    def __str__(self) -> str:
        return " ".join(f"s{i}" for i in self.letters)

    def __add__(self, other: "Word") -> "Word":
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return Word(self.n, self.letters + other.letters)

    def reversed(self) -> "Word":
        return Word(self.n, self.letters[::-1])

    def product(self) -> Permutation:
        """Ordinary product s_{i_1} s_{i_2} ... in S_n."""
        w = Permutation.identity(self.n)
        for i in self.letters:
            w = right_mult_simple(w, i)
        return w

    @classmethod
    def parse(cls, text: str, n: int) -> "Word":
        """Read ``"s2 s1 s2"`` (the ``s`` is optional)."""
        letters = [int(tok.lstrip("sS")) for tok in text.replace(",", " ").split()]
        return cls(n, tuple(letters))


def simple(i: int, n: int) -> Permutation:
    """The simple transposition s_i in S_n."""
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def longest(n: int) -> Permutation:
    """w_0 : j -> n + 1 - j."""
    return Permutation(tuple(range(n, 0, -1)))


def transposition(a: int, b: int, n: int) -> Permutation:
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
    return Permutation(tuple(images))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """The permutation j -> u(v(j)).

    >>> str(compose(simple(1, 3), simple(2, 3)))
    '231'
    """
    if u.n != v.n:
        raise ValueError(f"rank mismatch: S_{u.n} vs S_{v.n}")
    return Permutation(tuple(u.images[x - 1] for x in v.images))


def right_mult_simple(w: Permutation, i: int) -> Permutation:
    """w s_i: swap the entries in positions i and i+1."""
    images = list(w.images)
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def left_mult_simple(i: int, w: Permutation) -> Permutation:
    """s_i w: swap the values i and i+1."""
    return Permutation(tuple(i + 1 if x == i else i if x == i + 1 else x for x in w.images))


def length(w: Permutation) -> int:
    """Number of inversions."""
    im = w.images
    return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])


def inversions(w: Permutation) -> list[tuple[int, int]]:
    im = w.images
    return [(a + 1, b + 1) for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b]]


def subset_leq(I: Sequence[int], J: Sequence[int]) -> bool:
    """Componentwise comparison of two equal-size sets after sorting."""
    if len(I) != len(J):
        raise ValueError("subsets of different sizes are incomparable")
    return all(a <= b for a, b in zip(sorted(I), sorted(J)))


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat order via u[i] <= v[i] for all i.

    >>> bruhat_leq(Permutation.parse("231"), Permutation.parse("312"))
    False
    >>> bruhat_leq(Permutation.parse("1324"), Permutation.parse("4231"))
    True
    """
    if u.n != v.n:
        raise ValueError("rank mismatch")
    for i in range(1, u.n):
        if not subset_leq(u.prefix(i), v.prefix(i)):
            return False
    return True


def bruhat_covers(u: Permutation) -> list[tuple[Permutation, int, int]]:
    """Upper Bruhat covers of u as (v, a, b): v swaps positions a < b of u."""
    out = []
    im = u.images
    n = u.n
    for a in range(n):
        for b in range(a + 1, n):
            if im[a] < im[b] and not any(im[a] < im[c] < im[b] for c in range(a + 1, b)):
                new = list(im)
                new[a], new[b] = new[b], new[a]
                out.append((Permutation(tuple(new)), a + 1, b + 1))
    return out


def demazure_step(w: Permutation, i: int) -> Permutation:
    """w * s_i in the Demazure monoid."""
    if w.images[i - 1] < w.images[i]:
        return right_mult_simple(w, i)
    return w


def demazure_product(word: Word | Iterable[int], n: int | None = None) -> Permutation:
    """Left-to-right Demazure product of a word.

    >>> str(demazure_product(Word(3, (1, 2, 1, 2))))
    '321'
    """
    if isinstance(word, Word):
        n, letters = word.n, word.letters
    else:
        letters = tuple(word)
        if n is None:
            raise ValueError("n is required for a bare letter sequence")
    w = Permutation.identity(n)
    for i in letters:
        w = demazure_step(w, i)
    return w


def is_reduced(word: Word) -> bool:
    return length(word.product()) == len(word)


def right_descents(w: Permutation) -> list[int]:
    return [i for i in range(1, w.n) if w.images[i - 1] > w.images[i]]


def _reduced_words_iter(w: Permutation) -> Iterator[tuple[int, ...]]:
    if w.is_identity():
        yield ()
        return
    for i in right_descents(w):
        for prefix in _reduced_words_iter(right_mult_simple(w, i)):
            yield prefix + (i,)


def iter_reduced_words(w: Permutation) -> Iterator[Word]:
    """All reduced words of w, lazily (recursion on right descents)."""
    for letters in _reduced_words_iter(w):
        yield Word(w.n, letters)


def reduced_words(w: Permutation) -> list[Word]:
    """All reduced words of w, sorted lexicographically.

    >>> [str(x) for x in reduced_words(longest(3))]
    ['s1 s2 s1', 's2 s1 s2']
    """
    if length(w) > 12:
        raise ValueError("too many reduced words; use iter_reduced_words")
    return sorted(iter_reduced_words(w), key=lambda x: x.letters)


def some_reduced_word(w: Permutation) -> Word:
    """The lexicographically smallest reduced word, without enumerating the rest."""
    letters: list[int] = []
    while not w.is_identity():
        i = right_descents(w)[-1]
        letters.append(i)
        w = right_mult_simple(w, i)
    return Word(w.n, tuple(reversed(letters)))


def rank_matrix(w: Permutation) -> list[list[int]]:
    """r[i][j] = #([i] ∩ w[j]) for 0 <= i, j <= n."""
    n = w.n
    r = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            r[i][j] = r[i][j - 1] + (1 if w(j) <= i else 0)
    return r


def permutation_from_rank_matrix(r: Sequence[Sequence[int]]) -> Permutation:
    """Invert rank_matrix; raises if the table is not a rank matrix."""
    n = len(r) - 1
    images = [0] * n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            jump = r[i][j] - r[i - 1][j] - r[i][j - 1] + r[i - 1][j - 1]
            if jump == 1:
                if images[j - 1]:
                    raise ValueError("two ones in a column")
                images[j - 1] = i
            elif jump != 0:
                raise ValueError("not a rank matrix")
    w = Permutation(tuple(images))
    if rank_matrix(w) != [list(row) for row in r]:
        raise ValueError("not a rank matrix")
    return w


def is_rank_matrix(r: Sequence[Sequence[int]]) -> bool:
    """Check conditions (a), (b), (c) for an (n+1) x (n+1) table.

    (a) steps along rows and columns are 0 or 1; (b) the border is 0 on the
    top and left and 0..n on the bottom and right; (c) if r[i+1][j],
    r[i+1][j+1] and r[i][j+1] are all equal then r[i][j] equals them too.

    >>> is_rank_matrix(rank_matrix(Permutation.parse("2143")))
    True
    >>> is_rank_matrix([[0, 0, 0], [0, 1, 1], [0, 1, 1]])
    False
    """
    n = len(r) - 1
    if any(len(row) != n + 1 for row in r):
        return False
    if any(r[k][0] != 0 or r[0][k] != 0 or r[k][n] != k or r[n][k] != k for k in range(n + 1)):
        return False
    for i in range(n + 1):
        for j in range(n + 1):
            if i < n and r[i + 1][j] - r[i][j] not in (0, 1):
                return False
            if j < n and r[i][j + 1] - r[i][j] not in (0, 1):
                return False
            if i < n and j < n and r[i + 1][j] == r[i + 1][j + 1] == r[i][j + 1] != r[i][j]:
                return False
    return True


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def bruhat_interval(u: Permutation, w: Permutation) -> list[Permutation]:
    return [v for v in all_permutations(u.n) if bruhat_leq(u, v) and bruhat_leq(v, w)]


def is_grassmannian(w: Permutation, k: int) -> bool:
    """True when w has no descent except possibly at k."""
    return all(i == k for i in right_descents(w))


def k_covers(u: Permutation, k: int) -> list[tuple[Permutation, int, int]]:
    """P-covers u ⋖ v with v[k] != u[k], as (v, a, b) with v = (a b) u, a < b values."""
    out = []
    for v, pa, pb in bruhat_covers(u):
        if pa <= k < pb:
            a, b = sorted((u(pa), u(pb)))
            out.append((v, a, b))
    return out


def k_bruhat_leq(u: Permutation, w: Permutation, k: int) -> bool:
    """k-Bruhat order: a chain of Bruhat covers, each changing the k-prefix set.

    >>> k_bruhat_leq(Permutation.parse("123"), Permutation.parse("312"), 1)
    True
    >>> k_bruhat_leq(Permutation.parse("123"), Permutation.parse("321"), 1)
    False
    """
    if not 1 <= k <= u.n - 1:
        raise ValueError("k must lie in [1, n-1]")
    return _k_reach(u, w, k)


@lru_cache(maxsize=None)
def _k_reach(u: Permutation, w: Permutation, k: int) -> bool:
    if u == w:
        return True
    if length(u) >= length(w) or not bruhat_leq(u, w):
        return False
    return any(_k_reach(v, w, k) for v, _, _ in k_covers(u, k))


def k_chains(u: Permutation, w: Permutation, k: int) -> list[tuple[tuple[Permutation, ...], tuple[int, ...]]]:
    """Saturated k-Bruhat chains from u to w with their labels.

    Each chain is returned as (perms, labels) where perms = (v_0, ..., v_m) and
    v_i = (a_i b_i) v_{i-1} with label b_i.

    >>> [labels for _, labels in k_chains(Permutation.parse("2143"), Permutation.parse("3412"), 2)]
    [(3, 4), (4, 3)]
    """
    if not _k_reach(u, w, k):
        return []
    out = []

    def walk(v: Permutation, perms: list[Permutation], labels: list[int]):
        if v == w:
            out.append((tuple(perms), tuple(labels)))
            return
        for nxt, _, b in sorted(k_covers(v, k), key=lambda t: t[0]):
            if _k_reach(nxt, w, k):
                perms.append(nxt)
                labels.append(b)
                walk(nxt, perms, labels)
                perms.pop()
                labels.pop()

    walk(u, [u], [])
    return sorted(out, key=lambda c: (c[1], c[0]))


def k_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(1, n + 1), k))

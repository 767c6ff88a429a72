"""Bounded affine permutations and the other positroid indexings.

An affine permutation is stored by its window ``[f(1), ..., f(n)]`` and
extended by ``f(i + r n) = f(i) + r n``.  Bound(k, n) consists of those with
``i <= f(i) <= i + n`` and displacement k.

>>> f = from_pair(Permutation.parse("2143"), Permutation.parse("3412"), 2)
>>> f
BoundedAffinePermutation([4,3,6,5])
>>> format_necklace(necklace_from_f(f))
'12|24|34|24'
>>> positroid_dim(f)
2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Mapping, Sequence

from .perm_core import Permutation, k_bruhat_leq


@dataclass(frozen=True, order=True)
class AffinePermutation:
    """A bijection f of Z with f(i + n) = f(i) + n, given by its window."""

    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if n == 0:
            raise ValueError("empty window")
        if len({x % n for x in window}) != n:
            raise ValueError(f"window values not distinct mod {n}: {window}")

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def displacement(self) -> int:
        return (sum(self.window) - self.n * (self.n + 1) // 2) // self.n

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def inverse_at(self, b: int) -> int:
        n = self.n
        for j, x in enumerate(self.window, start=1):
            if (x - b) % n == 0:
                return j + (b - x)
        raise AssertionError("unreachable")

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        if other.n != self.n:
            raise ValueError("period mismatch")
        return AffinePermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def shift(self, c: int) -> "AffinePermutation":
        """zeta_c^{-1} f when c > 0: subtract c from every value."""
        return AffinePermutation(tuple(x - c for x in self.window))

    def __str__(self) -> str:
        return format_window(self.window)

    def __repr__(self) -> str:
        return f"AffinePermutation({self})"


class BoundedAffinePermutation(AffinePermutation):
    """An affine permutation with i <= f(i) <= i + n for all i."""

    def __post_init__(self):
        super().__post_init__()
        for i, x in enumerate(self.window, start=1):
            if not i <= x <= i + self.n:
                raise ValueError(f"not bounded at {i}: f({i}) = {x}")

    @property
    def k(self) -> int:
        return self.displacement

    def __repr__(self) -> str:
        return f"BoundedAffinePermutation({self})"

    @classmethod
    def parse(cls, text: str) -> "BoundedAffinePermutation":
        return cls(parse_window(text))


def parse_window(text: str) -> tuple[int, ...]:
    """``"[4,3,6,5]"`` or the compact ``"[243]"`` for single-digit windows."""
    body = text.strip().strip("[]").strip()
    if "," in body or " " in body:
        return tuple(int(x) for x in body.replace(",", " ").split())
    return tuple(int(c) for c in body)


def format_window(window: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in window) + "]"


def omega(k: int, n: int) -> BoundedAffinePermutation:
    """omega_k: i -> i + n for i = 1..k (mod n), fixed otherwise."""
    return BoundedAffinePermutation(tuple(i + n if i <= k else i for i in range(1, n + 1)))


def from_pair(u: Permutation, w: Permutation, k: int, check: bool = True) -> BoundedAffinePermutation:
    """f = u omega_k w^{-1}.

    >>> from_pair(Permutation.parse("123"), Permutation.parse("213"), 1)
    BoundedAffinePermutation([2,4,3])
    """
    n = u.n
    if check and not k_bruhat_leq(u, w, k):
        raise ValueError(f"{u} is not below {w} in {k}-Bruhat order")
    winv = w.inverse()
    out = []
    for i in range(1, n + 1):
        a = winv(i)
        out.append(u(a) + n if a <= k else u(a))
    return BoundedAffinePermutation(tuple(out))


def pair_from_f(f: BoundedAffinePermutation) -> tuple[Permutation, Permutation]:
    """The unique (u, w) with w Grassmannian, u <=_k w and u omega_k w^{-1} = f."""
    n, k = f.n, f.k
    for S in combinations(range(1, n + 1), k):
        rest = [x for x in range(1, n + 1) if x not in S]
        w = Permutation(tuple(S) + tuple(rest))
        images = [f(w(i)) - n if i <= k else f(w(i)) for i in range(1, n + 1)]
        if sorted(images) != list(range(1, n + 1)):
            continue
        u = Permutation(tuple(images))
        if k_bruhat_leq(u, w, k) if 0 < k < n else u == w:
            return u, w
    raise AssertionError(f"no Grassmannian pair for {f}")


def bounded_from_decorated_colors(perm: Sequence[int], colors: Mapping[int, int]) -> BoundedAffinePermutation:
    n = len(perm)
    out = []
    for i, x in enumerate(perm, start=1):
        if x > i:
            out.append(x)
        elif x < i:
            out.append(x + n)
        else:
            out.append(i if colors[i] < 0 else i + n)
    return BoundedAffinePermutation(tuple(out))


def all_bounded(n: int, k: int | None = None) -> list[BoundedAffinePermutation]:
    """Every element of Bound(k, n), or of all Bound(k, n) when k is None."""
    out = []
    for perm in permutations(range(1, n + 1)):
        fixed = [i for i in range(1, n + 1) if perm[i - 1] == i]
        for cols in product((-1, 1), repeat=len(fixed)):
            f = bounded_from_decorated_colors(perm, dict(zip(fixed, cols)))
            if k is None or f.k == k:
                out.append(f)
    return sorted(out)


# ---------------------------------------------------------------- cyclic rank matrices


@dataclass(frozen=True)
class CyclicRankMatrix:
    """r[i][j] for i in [n] and i - 1 <= j <= i + n - 1; other entries by periodicity."""

    n: int
    k: int
    entries: dict = field(compare=True)

    def __call__(self, i: int, j: int) -> int:
        if j < i - 1:
            raise ValueError(f"r({i},{j}) is undefined for j < i - 1")
        q = (i - 1) // self.n
        i0, j0 = i - q * self.n, j - q * self.n
        if j0 > i0 + self.n - 1:
            return self.k
        return self.entries[(i0, j0)]

    def format(self) -> str:
        lines = []
        for i in range(1, self.n + 1):
            vals = " ".join(str(self.entries[(i, j)]) for j in range(i - 1, i + self.n))
            lines.append(f"{i}: {vals}")
        return "\n".join(lines)


def cyclic_rank_matrix(f: BoundedAffinePermutation) -> CyclicRankMatrix:
    """r_ij = k - #{a < i : f(a) > j}."""
    n, k = f.n, f.k
    entries = {}
    for i in range(1, n + 1):
        for j in range(i - 1, i + n):
            count = sum(1 for a in range(j - n + 1, i) if f(a) > j)
            entries[(i, j)] = k - count
    return CyclicRankMatrix(n, k, entries)


def f_from_cyclic_rank_table(table: Mapping[tuple[int, int], int], n: int, k: int) -> BoundedAffinePermutation:
    """Recover f from r: f(i) is the least j >= i with r(i+1, j) = r(i, j)."""
    R = CyclicRankMatrix(n, k, dict(table))
    out = []
    for i in range(1, n + 1):
        j = next(j for j in range(i, i + n + 1) if R(i + 1, j) == R(i, j))
        out.append(j)
    try:
        f = BoundedAffinePermutation(tuple(out))
    except ValueError as exc:
        raise ValueError(f"not a cyclic rank matrix: {exc}") from None
    if f.k != k or cyclic_rank_matrix(f).entries != R.entries:
        raise ValueError("not a cyclic rank matrix")
    return f


def f_from_cyclic_rank(R: CyclicRankMatrix) -> BoundedAffinePermutation:
    return f_from_cyclic_rank_table(R.entries, R.n, R.k)


def affine_bruhat_leq(f: BoundedAffinePermutation, g: BoundedAffinePermutation) -> bool:
    """f <= g iff r_ij(f) >= r_ij(g) everywhere."""
    if (f.n, f.k) != (g.n, g.k):
        raise ValueError("different (k, n)")
    rf, rg = cyclic_rank_matrix(f).entries, cyclic_rank_matrix(g).entries
    return all(rf[key] >= rg[key] for key in rf)


# ---------------------------------------------------------------- necklaces

Necklace = tuple[tuple[int, ...], ...]


def lifted_necklace(f: BoundedAffinePermutation) -> list[tuple[int, ...]]:
    """Ĩ_i = {f(a) : a < i <= f(a)} for i in [n]."""
    n = f.n
    return [tuple(sorted(f(a) for a in range(i - n, i) if f(a) >= i)) for i in range(1, n + 1)]


def _mod(x: int, n: int) -> int:
    return (x - 1) % n + 1


def necklace_from_f(f: BoundedAffinePermutation) -> Necklace:
    """Grassmann necklace I_i = Ĩ_i reduced mod n."""
    n = f.n
    return tuple(tuple(sorted(_mod(x, n) for x in I)) for I in lifted_necklace(f))


def reverse_necklace_from_f(f: BoundedAffinePermutation) -> Necklace:
    """Reverse necklace J_i = {a : a <= i < f(a)} reduced mod n."""
    n = f.n
    return tuple(tuple(sorted(_mod(a, n) for a in range(i - n + 1, i + 1) if f(a) > i)) for i in range(1, n + 1))


def is_necklace(N: Sequence[Sequence[int]], n: int) -> bool:
    if len(N) != n:
        return False
    sizes = {len(I) for I in N}
    if len(sizes) != 1:
        return False
    for i in range(1, n + 1):
        I, J = set(N[i - 1]), set(N[i % n])
        if not all(1 <= x <= n for x in I):
            return False
        if not (I - {i}) <= J:
            return False
        if i not in I and I != J:
            return False
    return True


def f_from_necklace(N: Sequence[Sequence[int]]) -> BoundedAffinePermutation:
    """Inverse of necklace_from_f.

    >>> f_from_necklace([(1, 2, 4), (2, 3, 4), (3, 4, 6), (4, 5, 6), (2, 5, 6), (1, 2, 6)])
    BoundedAffinePermutation([3,6,5,8,7,10])
    """
    n = len(N)
    if not is_necklace(N, n):
        raise ValueError("not a Grassmann necklace")
    out = []
    for i in range(1, n + 1):
        I, J = set(N[i - 1]), set(N[i % n])
        if i not in I:
            out.append(i)
            continue
        new = J - (I - {i})
        (j,) = new
        out.append(i + n if j == i else (j if j > i else j + n))
    f = BoundedAffinePermutation(tuple(out))
    if necklace_from_f(f) != tuple(tuple(sorted(I)) for I in N):
        raise ValueError("not a Grassmann necklace")
    return f


def format_necklace(N: Sequence[Sequence[int]]) -> str:
    sep = "," if any(x > 9 for I in N for x in I) else ""
    return "|".join(sep.join(str(x) for x in I) for I in N)


def parse_necklace(text: str) -> Necklace:
    out = []
    for part in text.strip().split("|"):
        part = part.strip()
        if "," in part:
            out.append(tuple(sorted(int(x) for x in part.split(","))))
        else:
            out.append(tuple(sorted(int(c) for c in part)))
    return tuple(out)


# ---------------------------------------------------------------- decorated permutations


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of [n] with a color in {-1, +1} on each fixed point."""

    perm: Permutation
    colors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        colors = tuple(sorted((int(i), int(c)) for i, c in dict(self.colors).items()))
        object.__setattr__(self, "colors", colors)
        fixed = {i for i in range(1, self.perm.n + 1) if self.perm(i) == i}
        if {i for i, _ in colors} != fixed:
            raise ValueError("colors must be given exactly on fixed points")
        if any(c not in (-1, 1) for _, c in colors):
            raise ValueError("colors are -1 or +1")

    @property
    def n(self) -> int:
        return self.perm.n

    def anti_exceedances(self) -> int:
        """Positions with perm(i) < i, plus fixed points colored +1."""
        col = dict(self.colors)
        return sum(1 for i in range(1, self.n + 1) if self.perm(i) < i or (self.perm(i) == i and col[i] > 0))

    def __str__(self) -> str:
        col = dict(self.colors)
        parts = []
        for i in range(1, self.n + 1):
            x = self.perm(i)
            parts.append(f"{x}{'+' if col.get(i, 0) > 0 else '-' if i in col else ''}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "DecoratedPermutation":
        """Space or comma separated images; fixed points carry ``+`` or ``-``.

        >>> str(DecoratedPermutation.parse("3 2+ 1 4-"))
        '3 2+ 1 4-'
        """
        images, colors = [], {}
        for i, tok in enumerate(text.replace(",", " ").split(), start=1):
            sign = tok[-1] if tok[-1] in "+-" else ""
            x = int(tok.rstrip("+-"))
            images.append(x)
            if x == i:
                if not sign:
                    raise ValueError(f"fixed point {i} needs a + or - decoration")
                colors[i] = 1 if sign == "+" else -1
            elif sign:
                raise ValueError(f"position {i} is not a fixed point but is decorated")
        return cls(Permutation(tuple(images)), tuple(colors.items()))


def decorated_from_f(f: BoundedAffinePermutation) -> DecoratedPermutation:
    n = f.n
    perm = Permutation(tuple(_mod(x, n) for x in f.window))
    colors = {i: (-1 if f(i) == i else 1) for i in range(1, n + 1) if perm(i) == i}
    return DecoratedPermutation(perm, tuple(colors.items()))


def f_from_decorated(d: DecoratedPermutation, k: int | None = None) -> BoundedAffinePermutation:
    f = bounded_from_decorated_colors(d.perm.images, dict(d.colors))
    if k is not None and f.k != k:
        raise ValueError(f"decorated permutation has {f.k} anti-exceedances, not {k}")
    return f


# ---------------------------------------------------------------- length and dimension


def affine_inversions(g: AffinePermutation) -> int:
    """#{(i, j) : i in [n], j > i, g(i) > g(j)}."""
    n = g.n
    total = 0
    for i in range(1, n + 1):
        for j0 in range(1, n + 1):
            diff = g(i) - g(j0)
            rmin = 0 if j0 > i else 1
            # r >= rmin with r n < diff
            rmax = (diff - 1) // n if diff > 0 else -1
            if rmax >= rmin:
                total += rmax - rmin + 1
    return total


def affine_length(f: BoundedAffinePermutation) -> int:
    """Inversion count of zeta_k^{-1} f (subtract k from every value)."""
    return affine_inversions(f.shift(f.k))


def shi_length(g: AffinePermutation) -> int:
    """Independent length formula: sum over i < j in [n] of |floor((g(j) - g(i)) / n)|."""
    n = g.n
    return sum(abs((g(j) - g(i)) // n) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def positroid_dim(f: BoundedAffinePermutation) -> int:
    return f.k * (f.n - f.k) - affine_length(f)


__all__ = [
    "AffinePermutation", "BoundedAffinePermutation", "parse_window", "format_window", "omega",
    "from_pair", "pair_from_f", "all_bounded", "CyclicRankMatrix", "cyclic_rank_matrix",
    "f_from_cyclic_rank_table", "f_from_cyclic_rank", "affine_bruhat_leq", "lifted_necklace",
    "necklace_from_f", "reverse_necklace_from_f", "is_necklace", "f_from_necklace",
    "format_necklace", "parse_necklace", "DecoratedPermutation", "decorated_from_f",
    "f_from_decorated", "affine_inversions", "affine_length", "shi_length", "positroid_dim",
]

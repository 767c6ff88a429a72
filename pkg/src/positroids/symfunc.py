"""Symmetric polynomials, affine Stanley functions and positroid classes.

Polynomials in x_1..x_N are dicts from exponent tuples to integers.  A
symmetric polynomial is stored by its monomial-basis coefficients and can be
converted to the Schur basis.

>>> f = affine_stanley(AffinePermutation((-1, 4, 1, 6)), 4)
>>> format_basis(f.monomial(), "m")
'4*m1111 + 2*m211 + m22'
>>> format_basis(f.schur(), "s")
'-s1111 + s211 + s22'
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .affine_positroid import (
    AffinePermutation,
    BoundedAffinePermutation,
    affine_inversions,
    pair_from_f,
    positroid_dim,
)
from .perm_core import Permutation, k_chains
from .tableaux_smt import compositions, kostka

Poly = dict[tuple[int, ...], int]
Part = tuple[int, ...]


def partitions(d: int, max_len: int | None = None, max_part: int | None = None) -> list[Part]:
    """Partitions of d in reverse lexicographic order.

    >>> partitions(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    max_len = d if max_len is None else max_len
    max_part = d if max_part is None else max_part
    out: list[Part] = []

    def rec(left: int, cap: int, acc: list[int]):
        if left == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_len:
            return
        for p in range(min(left, cap), 0, -1):
            acc.append(p)
            rec(left - p, p, acc)
            acc.pop()

    rec(d, max_part, [])
    return out


def _pad(lam: Sequence[int], N: int) -> tuple[int, ...]:
    return tuple(lam) + (0,) * (N - len(lam))


def _strip(alpha: Sequence[int]) -> Part:
    return tuple(sorted((a for a in alpha if a), reverse=True))


def poly_mul(a: Mapping[tuple[int, ...], int], b: Mapping[tuple[int, ...], int]) -> Poly:
    out: Poly = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


def poly_add(a: Mapping[tuple[int, ...], int], b: Mapping[tuple[int, ...], int], scale: int = 1) -> Poly:
    out: Poly = defaultdict(int, a)
    for e, c in b.items():
        out[e] += scale * c
    return {e: c for e, c in out.items() if c}


def poly_eval(p: Mapping[tuple[int, ...], int], xs: Sequence) -> Fraction:
    total = Fraction(0)
    for e, c in p.items():
        term = Fraction(c)
        for x, k in zip(xs, e):
            term *= Fraction(x) ** k
        total += term
    return total


def complete_homogeneous(m: int, N: int) -> Poly:
    """h_m(x_1..x_N) as a sum of all monomials of degree m."""
    if m < 0:
        return {}
    return {alpha: 1 for alpha in compositions(m, N)}


def schur_polynomial(lam: Sequence[int], N: int) -> Poly:
    """s_lambda(x_1..x_N) by the Jacobi-Trudi determinant det(h_{lam_i - i + j}).

    >>> sorted(schur_polynomial((2, 1), 2).items())
    [((1, 2), 1), ((2, 1), 1)]
    """
    lam = [p for p in lam if p]
    L = len(lam)
    if L == 0:
        return {(0,) * N: 1}
    M = [[complete_homogeneous(lam[i] - i + j, N) for j in range(L)] for i in range(L)]

    def det(rows: list[int], cols: list[int]) -> Poly:
        if not rows:
            return {(0,) * N: 1}
        r, acc = rows[0], {}
        for idx, c in enumerate(cols):
            if not M[r][c]:
                continue
            minor = det(rows[1:], cols[:idx] + cols[idx + 1:])
            acc = poly_add(acc, poly_mul(M[r][c], minor), -1 if idx % 2 else 1)
        return acc

    return det(list(range(L)), list(range(L)))


@dataclass(frozen=True)
class SymFunc:
    """A symmetric polynomial in N variables, stored in the monomial basis."""

    N: int
    coeffs: tuple[tuple[Part, int], ...]

    def __post_init__(self):
        clean = {}
        for lam, c in dict(self.coeffs).items():
            lam = _strip(lam)
            if len(lam) > self.N:
                raise ValueError(f"partition {lam} is longer than {self.N} variables")
            if c:
                clean[lam] = clean.get(lam, 0) + int(c)
        object.__setattr__(self, "coeffs", tuple(sorted((k, v) for k, v in clean.items() if v)))

    @classmethod
    def from_monomial(cls, coeffs: Mapping[Part, int], N: int) -> "SymFunc":
        return cls(N, tuple((_strip(k), v) for k, v in coeffs.items() if len(_strip(k)) <= N))

    @classmethod
    def from_polynomial(cls, p: Mapping[tuple[int, ...], int], N: int) -> "SymFunc":
        """Read off monomial coefficients; raises if p is not symmetric."""
        mono: dict[Part, int] = {}
        for e, c in p.items():
            lam = _strip(e)
            if lam in mono and mono[lam] != c:
                raise ValueError("polynomial is not symmetric")
            mono[lam] = c
        f = cls.from_monomial(mono, N)
        if f.polynomial() != {e: c for e, c in p.items() if c}:
            raise ValueError("polynomial is not symmetric")
        return f

    @classmethod
    def from_schur(cls, coeffs: Mapping[Part, int], N: int) -> "SymFunc":
        mono: dict[Part, int] = defaultdict(int)
        for lam, c in coeffs.items():
            lam = _strip(lam)
            if len(lam) > N:
                continue
            for mu in partitions(sum(lam), N):
                mono[mu] += c * kostka(lam, _pad(mu, max(len(mu), 1)))
        return cls.from_monomial(mono, N)

    def monomial(self) -> dict[Part, int]:
        return dict(self.coeffs)

    def polynomial(self) -> Poly:
        out: Poly = {}
        for lam, c in self.coeffs:
            for alpha in set(_distinct_perms(_pad(lam, self.N))):
                out[alpha] = c
        return out

    def degree(self) -> int | None:
        degs = {sum(lam) for lam, _ in self.coeffs}
        return degs.pop() if len(degs) == 1 else (None if not degs else max(degs))

    def schur(self) -> dict[Part, int]:
        """Expansion in s_lambda(x_1..x_N), ell(lambda) <= N, by Kostka triangularity."""
        rest = dict(self.coeffs)
        out: dict[Part, int] = {}
        while rest:
            lam = max(rest, key=lambda p: (sum(p), p))
            c = rest[lam]
            out[lam] = c
            for mu in partitions(sum(lam), self.N):
                K = kostka(lam, _pad(mu, max(len(mu), 1)))
                if K:
                    rest[mu] = rest.get(mu, 0) - c * K
                    if rest[mu] == 0:
                        del rest[mu]
        return out

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.N != other.N:
            raise ValueError("variable count mismatch")
        d = dict(self.coeffs)
        for lam, c in other.coeffs:
            d[lam] = d.get(lam, 0) + c
        return SymFunc.from_monomial(d, self.N)

    def __call__(self, *xs) -> Fraction:
        return poly_eval(self.polynomial(), xs)


def _distinct_perms(t: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    if not t:
        yield ()
        return
    for v in sorted(set(t)):
        i = t.index(v)
        for rest in _distinct_perms(t[:i] + t[i + 1:]):
            yield (v,) + rest


def part_label(lam: Sequence[int]) -> str:
    lam = _strip(lam)
    if not lam:
        return "0"
    return "".join(map(str, lam)) if max(lam) < 10 else "(" + ",".join(map(str, lam)) + ")"


def format_basis(coeffs: Mapping[Part, int], letter: str = "s") -> str:
    """Render coefficients as e.g. 's2 + s11'.  Ordered by partition, lexicographically.

    >>> format_basis({(2,): 1, (1, 1): 1})
    's11 + s2'
    """
    terms = []
    for lam in sorted(coeffs):
        c = coeffs[lam]
        if not c:
            continue
        body = f"{letter}{part_label(lam)}"
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        terms.append(("-" if c < 0 else "+", mag + body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return " ".join([head] + [f"{s} {t}" for s, t in terms[1:]])


def format_coeffs(coeffs: Mapping[Part, int]) -> str:
    """One 'lambda:coeff' line per nonzero term; the empty partition prints as 0."""
    return "\n".join(f"{','.join(map(str, lam)) or '0'}:{c}" for lam, c in sorted(coeffs.items()) if c)


def parse_coeffs(text: str) -> dict[Part, int]:
    out = {}
    for line in text.strip().splitlines():
        lam, c = line.split(":")
        lam = () if lam.strip() == "0" else tuple(int(x) for x in lam.split(","))
        out[lam] = int(c)
    return out


def affine_simple(i: int, n: int) -> AffinePermutation:
    """s_i in the affine symmetric group, i in 1..n; s_n swaps n and n+1."""
    window = list(range(1, n + 1))
    if i < n:
        window[i - 1], window[i] = i + 1, i
    else:
        window[0], window[n - 1] = 0, n + 1
    return AffinePermutation(tuple(window))


def affine_inverse(g: AffinePermutation) -> AffinePermutation:
    return AffinePermutation(tuple(g.inverse_at(i) for i in range(1, g.n + 1)))


def affine_word_product(word: Sequence[int], n: int) -> AffinePermutation:
    g = AffinePermutation(tuple(range(1, n + 1)))
    for i in word:
        g = g * affine_simple(i, n)
    return g


def cyclic_decreasing_word(S: Iterable[int], n: int) -> tuple[int, ...]:
    """Order a proper subset of [n] so s_{i+1} precedes s_i (s_1 precedes s_n).

    >>> cyclic_decreasing_word({1, 2, 4}, 4)
    (2, 1, 4)
    """
    S = set(S)
    if len(S) >= n:
        raise ValueError("cyclically decreasing elements use a proper subset")
    missing = min(set(range(1, n + 1)) - S)
    order = [((missing - 1 - t - 1) % n) + 1 for t in range(n)]
    return tuple(i for i in order if i in S)


@lru_cache(maxsize=None)
def cyclically_decreasing(n: int) -> tuple[tuple[AffinePermutation, int, tuple[int, ...]], ...]:
    """All 2^n - 1 cyclically decreasing elements as (element, length, word).

    >>> len(cyclically_decreasing(2)), len(cyclically_decreasing(4))
    (3, 15)
    """
    if n < 2:
        raise ValueError("n >= 2")
    out = []
    for mask in range(2 ** n - 1):
        S = {i + 1 for i in range(n) if mask >> i & 1}
        word = cyclic_decreasing_word(S, n)
        out.append((affine_word_product(word, n), len(word), word))
    return tuple(out)


def affine_stanley_polynomial(g: AffinePermutation, N: int) -> Poly:
    """Sum of x_1^{l(c_1)} ... x_N^{l(c_N)} over cyclically decreasing factorizations g = c_1 ... c_N."""
    if g.displacement != 0:
        raise ValueError("affine Stanley functions need displacement 0")
    n = g.n
    cds = cyclically_decreasing(n)

    @lru_cache(maxsize=None)
    def rec(window: tuple[int, ...], left: int) -> tuple[tuple[tuple[int, ...], int], ...]:
        h = AffinePermutation(window)
        L = affine_inversions(h)
        if left == 0:
            return (((), 1),) if L == 0 else ()
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for c, lc, _ in cds:
            if lc > L:
                continue
            rest = affine_inverse(c) * h
            if affine_inversions(rest) != L - lc:
                continue
            for e, coef in rec(rest.window, left - 1):
                acc[(lc,) + e] += coef
        return tuple(acc.items())

    return dict(rec(g.window, N))


def affine_stanley(g: AffinePermutation, N: int | None = None) -> SymFunc:
    """Affine Stanley symmetric function F_g in N variables (default: its degree).

    >>> format_basis(affine_stanley(AffinePermutation((2, 3, 1))).schur())
    's11'
    """
    d = affine_inversions(g)
    N = max(d, 1) if N is None else N
    return SymFunc.from_polynomial(affine_stanley_polynomial(g, N), N)


def positroid_class(f: BoundedAffinePermutation) -> dict[Part, int]:
    """Schur coefficients of the class of the positroid variety in H*(G(k,n)).

    Uses F_g for g = f with k subtracted from every value, in k variables, and
    drops partitions outside the k x (n-k) box.

    >>> format_basis(positroid_class(BoundedAffinePermutation((4, 3, 6, 5))))
    's11 + s2'
    """
    k, n = f.k, f.n
    g = f.shift(k)
    if k == 0:
        return {(): 1} if affine_inversions(g) == 0 else {}
    exp = affine_stanley(g, k).schur()
    return {lam: c for lam, c in exp.items() if c and (not lam or lam[0] <= n - k)}


def quasi_q_polynomial(labels: Sequence[int], N: int) -> Poly:
    """Q_{b_1..b_m}: sum over i_1 <= ... <= i_m with i_j < i_{j+1} whenever b_j > b_{j+1}.

    >>> sorted(quasi_q_polynomial((4, 3), 2).items())
    [((1, 1), 1)]
    """
    m = len(labels)
    out: Poly = {}

    def rec(j: int, lo: int, acc: list[int]):
        if j == m:
            e = [0] * N
            for i in acc:
                e[i - 1] += 1
            key = tuple(e)
            out[key] = out.get(key, 0) + 1
            return
        start = lo
        if j > 0 and labels[j - 1] > labels[j]:
            start = lo + 1
        for i in range(max(start, 1), N + 1):
            acc.append(i)
            rec(j + 1, i, acc)
            acc.pop()

    rec(0, 1, [])
    return out


def bergeron_sottile(u: Permutation, w: Permutation, k: int, N: int | None = None) -> SymFunc:
    """Sum of Q_{b_1..b_m} over saturated k-Bruhat chains from u to w.

    >>> P = Permutation.parse
    >>> format_basis(bergeron_sottile(P("2134"), P("3412"), 2).schur())
    's21'
    """
    chains = k_chains(u, w, k)
    m = len(chains[0][1]) if chains else 0
    N = max(m, 1) if N is None else N
    total: Poly = {}
    for _, labels in chains:
        total = poly_add(total, quasi_q_polynomial(labels, N))
    return SymFunc.from_polynomial(total, N)


def box_complement(lam: Sequence[int], k: int, m: int) -> Part:
    """(m - lam_k, ..., m - lam_1) for lam inside the k x m box."""
    padded = _pad(_strip(lam), k)
    if len(padded) > k or (padded and padded[0] > m):
        raise ValueError("partition not inside the box")
    return _strip(m - p for p in reversed(padded))


def duality_check(f: BoundedAffinePermutation) -> bool:
    """Bergeron-Sottile coefficient of s_lam equals the class coefficient of the box complement.

    >>> duality_check(BoundedAffinePermutation((3, 4, 6, 5)))
    True
    """
    k, n = f.k, f.n
    u, w = pair_from_f(f)
    d = positroid_dim(f)
    bs = bergeron_sottile(u, w, k, max(d, 1)).schur()
    cls = positroid_class(f)
    if any(sum(lam) != k * (n - k) - d for lam in cls):
        return False
    return all(bs.get(lam, 0) == cls.get(box_complement(lam, k, n - k), 0) for lam in partitions(d, k, n - k))


__all__ = [
    "SymFunc",
    "partitions",
    "schur_polynomial",
    "complete_homogeneous",
    "poly_mul",
    "poly_add",
    "poly_eval",
    "format_basis",
    "format_coeffs",
    "parse_coeffs",
    "affine_simple",
    "affine_inverse",
    "affine_word_product",
    "cyclic_decreasing_word",
    "cyclically_decreasing",
    "affine_stanley_polynomial",
    "affine_stanley",
    "positroid_class",
    "quasi_q_polynomial",
    "bergeron_sottile",
    "box_complement",
    "duality_check",
]

"""Bott-Samelson chains, Deodhar masks, Marsh-Rietsch matrices, R-polynomials.

Two families of 2 x 2 blocks are embedded in rows/columns i, i+1 by ``rho``:

* ``z_i(t) = [[t, 1], [1, 0]]`` parametrizes open Bott-Samelson chains;
* ``sdot_i = [[0, -1], [1, 0]]``, ``zdot_i(u) = [[u, 1], [-1, 0]]``,
  ``y_i(t) = [[1, 0], [t, 1]]`` build the signed Marsh-Rietsch chains.

A mask on a word records, for each letter, whether the Schubert cell of the
running flag stays put (EQUAL), goes up (UP) or comes down (DOWN).

>>> w = Word(3, (1, 2, 1))
>>> [str(m) for m in distinguished_masks(w, Permutation.identity(3))]
['. . .', 's1 . s1']
>>> r_polynomial(Permutation.identity(3), Permutation.parse("321"))
Polynomial((-1, 2, -2, 1))
"""

from __future__ import annotations

import enum
from itertools import combinations
from dataclasses import dataclass
from itertools import product
from typing import Any, Iterable, Iterator, Sequence

import sympy

from .exact_linalg import (
    QQ,
    Field,
    FlagPoint,
    Matrix,
    ModP,
    column_span_basis,
    minor,
    mul,
    opposite_schubert_cell,
    rank,
    schubert_cell,
)
from .perm_core import (
    Permutation,
    Word,
    all_permutations,
    bruhat_leq,
    length,
    right_mult_simple,
)

# ---------------------------------------------------------------- polynomials


class Polynomial:
    """A univariate integer polynomial in q, stored as a coefficient tuple.

    >>> p = Polynomial((0, -1, 1))
    >>> p(3), str(p)
    (6, 'q^2 - q')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def q(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        other = _poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Polynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self.coeffs})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mono = "" if e == 0 else "q" if e == 1 else f"q^{e}"
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def reciprocal_twist(self, d: int) -> "Polynomial":
        """(-q)^d P(1/q); requires deg P <= d."""
        if self.degree > d:
            raise ValueError("degree exceeds the twist exponent")
        c = self.coeffs + (0,) * (d + 1 - len(self.coeffs))
        return Polynomial(((-1) ** d) * c[d - e] for e in range(d + 1))


def _poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial((x,))


# ---------------------------------------------------------------- matrices


def rho(i: int, block: Sequence[Sequence[Any]], n: int, field: Field = QQ) -> Matrix:
    """Embed a 2 x 2 block into the identity at rows/columns i, i+1."""
    rows = [[field.one if a == b else field.zero for b in range(n)] for a in range(n)]
    for a in range(2):
        for b in range(2):
            rows[i - 1 + a][i - 1 + b] = block[a][b]
    return Matrix(rows)


def z_matrix(i: int, t, n: int, field: Field = QQ) -> Matrix:
    return rho(i, [[t, field.one], [field.one, field.zero]], n, field)


def sdot(i: int, n: int, field: Field = QQ) -> Matrix:
    return rho(i, [[field.zero, -field.one], [field.one, field.zero]], n, field)


def zdot(i: int, u, n: int, field: Field = QQ) -> Matrix:
    return rho(i, [[u, field.one], [-field.one, field.zero]], n, field)


def zddot(i: int, t, n: int, field: Field = QQ) -> Matrix:
    return rho(i, [[t, -field.one], [field.one, field.zero]], n, field)


def y_matrix(i: int, t, n: int, field: Field = QQ) -> Matrix:
    return rho(i, [[field.one, field.zero], [t, field.one]], n, field)


def _field_of(values: Sequence[Any], default: Field = QQ) -> Field:
    for v in values:
        if isinstance(v, ModP):
            return Field(v.p)
    return default


# ---------------------------------------------------------------- chains


@dataclass(frozen=True)
class BSChain:
    """Matrices g^0 = I, g^1, ..., g^a; the flags are g^j B_+."""

    word: Word
    matrices: tuple[Matrix, ...]
    params: tuple | None = None

    @property
    def flags(self) -> list[FlagPoint]:
        return [FlagPoint(g, check=False) for g in self.matrices]

    @property
    def final(self) -> Matrix:
        return self.matrices[-1]

    def is_open(self) -> bool:
        """Consecutive flags differ exactly in the subspace of index i_j."""
        n = self.word.n
        for j, i in enumerate(self.word.letters, start=1):
            g0, g1 = self.matrices[j - 1], self.matrices[j]
            for k in range(1, n):
                same = rank(Matrix([r0 + r1 for r0, r1 in zip(g0.leading(k).rows, g1.leading(k).rows)])) == k
                if same == (k == i):
                    return False
        return True


def bs_parametrize(word: Word, t: Sequence[Any], field: Field | None = None) -> BSChain:
    """F^j = z_{i_1}(t_1) ... z_{i_j}(t_j) B_+."""
    if len(t) != len(word):
        raise ValueError("need one parameter per letter")
    field = field or _field_of(t)
    n = word.n
    g = Matrix.identity(n, field)
    mats = [g]
    for i, tj in zip(word.letters, t):
        g = mul(g, z_matrix(i, field(tj), n, field))
        mats.append(g)
    return BSChain(word, tuple(mats), tuple(t))


# ---------------------------------------------------------------- masks


class Status(enum.Enum):
    EQUAL = "="
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class Mask:
    """Statuses per letter plus the Schubert-cell sequence v^0 = e, ..., v^a."""

    word: Word
    statuses: tuple[Status, ...]
    perms: tuple[Permutation, ...]

    def __post_init__(self):
        if len(self.statuses) != len(self.word) or len(self.perms) != len(self.word) + 1:
            raise ValueError("mask length mismatch")
        if not self.perms[0].is_identity():
            raise ValueError("masks start at the identity")
        for j, (i, st) in enumerate(zip(self.word.letters, self.statuses), start=1):
            if _status(self.perms[j - 1], self.perms[j], i) != st:
                raise ValueError(f"position {j} violates the distinguished condition")

    @property
    def end(self) -> Permutation:
        return self.perms[-1]

    def count(self, status: Status) -> int:
        return sum(1 for s in self.statuses if s == status)

    @property
    def m_equal(self) -> int:
        return self.count(Status.EQUAL)

    @property
    def m_up(self) -> int:
        return self.count(Status.UP)

    @property
    def m_down(self) -> int:
        return self.count(Status.DOWN)

    def __str__(self) -> str:
        return " ".join("." if s == Status.EQUAL else f"s{i}" for i, s in zip(self.word.letters, self.statuses))

    @classmethod
    def parse(cls, text: str, word: Word) -> "Mask":
        """Read ``"s1 . s1"``; a dot keeps the cell, s_i multiplies by s_i."""
        toks = text.split()
        if len(toks) != len(word):
            raise ValueError("mask length mismatch")
        return mask_from_perms(word, _perms_from_tokens(word, toks))

    @classmethod
    def from_statuses(cls, word: Word, statuses: Sequence[Status]) -> "Mask":
        v = Permutation.identity(word.n)
        perms = [v]
        for i, st in zip(word.letters, statuses):
            if st != Status.EQUAL:
                v = right_mult_simple(v, i)
            perms.append(v)
        return cls(word, tuple(statuses), tuple(perms))


def _perms_from_tokens(word: Word, toks: Sequence[str]) -> list[Permutation]:
    v = Permutation.identity(word.n)
    perms = [v]
    for i, tok in zip(word.letters, toks):
        if tok not in (".", "•"):
            if int(tok.lstrip("s")) != i:
                raise ValueError(f"mask letter {tok} does not match s{i}")
            v = right_mult_simple(v, i)
        perms.append(v)
    return perms


def _status(prev: Permutation, cur: Permutation, i: int) -> Status | None:
    up = prev.images[i - 1] < prev.images[i]
    if cur == prev:
        return Status.EQUAL if up else None
    if cur == right_mult_simple(prev, i):
        return Status.UP if up else Status.DOWN
    return None


def mask_from_perms(word: Word, perms: Sequence[Permutation]) -> Mask:
    statuses = []
    for j, i in enumerate(word.letters, start=1):
        st = _status(perms[j - 1], perms[j], i)
        if st is None:
            raise ValueError(f"position {j} violates the distinguished condition")
        statuses.append(st)
    return Mask(word, tuple(statuses), tuple(perms))


def iter_all_masks(word: Word) -> Iterator[Mask]:
    """Every distinguished mask on the word (any endpoint)."""
    n = word.n

    def rec(j: int, v: Permutation, sts: list, perms: list):
        if j == len(word):
            yield Mask(word, tuple(sts), tuple(perms))
            return
        i = word.letters[j]
        if v.images[i - 1] < v.images[i]:
            for st, nv in ((Status.EQUAL, v), (Status.UP, right_mult_simple(v, i))):
                yield from rec(j + 1, nv, sts + [st], perms + [nv])
        else:
            nv = right_mult_simple(v, i)
            yield from rec(j + 1, nv, sts + [Status.DOWN], perms + [nv])

    yield from rec(0, Permutation.identity(n), [], [Permutation.identity(n)])


def distinguished_masks(word: Word, u: Permutation) -> list[Mask]:
    """All distinguished masks ending at u, sorted by their text form."""
    return sorted((m for m in iter_all_masks(word) if m.end == u), key=lambda m: (str(m), [st.value for st in m.statuses]))


def positive_mask(word: Word, u: Permutation) -> Mask:
    """The unique mask with no DOWN steps ending at u (rightmost reduced subword)."""
    v = u
    perms = [v]
    for i in reversed(word.letters):
        if v.images[i - 1] > v.images[i]:
            v = right_mult_simple(v, i)
        perms.append(v)
    if not v.is_identity():
        raise ValueError(f"{u} is not below the product of the word")
    return mask_from_perms(word, list(reversed(perms)))


# ---------------------------------------------------------------- Marsh-Rietsch


def mr_parametrize(mask: Mask, params: Sequence[Any], field: Field | None = None) -> BSChain:
    """g^j = h_1 ... h_j with h = y(t) at EQUAL, sdot at UP, zdot(u) at DOWN.

    ``params`` has one entry per letter, ``None`` at UP slots.
    """
    word = mask.word
    if len(params) != len(word):
        raise ValueError("need one parameter slot per letter")
    field = field or _field_of([p for p in params if p is not None])
    n = word.n
    g = Matrix.identity(n, field)
    mats = [g]
    for i, st, p in zip(word.letters, mask.statuses, params):
        if st == Status.EQUAL:
            if p is None or not field(p):
                raise ValueError("EQUAL slots need a nonzero parameter")
            h = y_matrix(i, field(p), n, field)
        elif st == Status.UP:
            if p is not None:
                raise ValueError("UP slots take no parameter")
            h = sdot(i, n, field)
        else:
            if p is None:
                raise ValueError("DOWN slots need a parameter")
            h = zdot(i, field(p), n, field)
        g = mul(g, h)
        mats.append(g)
    return BSChain(word, tuple(mats), tuple(params))


def mr_parameter_space(mask: Mask, field: Field) -> Iterator[tuple]:
    """Every parameter tuple of the Deodhar piece over a finite field."""
    elems = field.elements()
    nonzero = [x for x in elems if x]
    slots = []
    for st in mask.statuses:
        slots.append(nonzero if st == Status.EQUAL else [None] if st == Status.UP else elems)
    return product(*slots)


def classify_bs_point(chain: BSChain) -> Mask:
    """Read v^j = schubert_cell(F^j) along an open Bott-Samelson chain."""
    perms = [schubert_cell(g) for g in chain.matrices]
    return mask_from_perms(chain.word, perms)


def left_justified_minors_are_one(chain: BSChain, mask: Mask) -> bool:
    """Δ_{v^j[k]}(g^j) = 1 for all j, k (signed Marsh-Rietsch normalization)."""
    n = chain.word.n
    for g, v in zip(chain.matrices, mask.perms):
        for k in range(1, n + 1):
            if minor(g, v.prefix(k), list(range(1, k + 1))) != 1:
                return False
    return True


# ---------------------------------------------------------------- chamber minors


def prefix_products(word: Word) -> list[Permutation]:
    w = Permutation.identity(word.n)
    out = [w]
    for i in word.letters:
        w = right_mult_simple(w, i)
        out.append(w)
    return out


def chamber_minors(chain: BSChain, mask: Mask) -> list[list[Any]]:
    """Φ^j_k = Δ_{v^j[k]}(g^j) / Δ_{w^j[k]}(g^j), with Φ^j_0 = Φ^j_n = 1."""
    n = chain.word.n
    ws = prefix_products(chain.word)
    table = []
    for g, v, w in zip(chain.matrices, mask.perms, ws):
        row = []
        for k in range(0, n + 1):
            if k in (0, n):
                row.append(g.rows[0][0] * 0 + 1)
                continue
            cols = list(range(1, k + 1))
            den = minor(g, w.prefix(k), cols)
            if not den:
                raise ZeroDivisionError(f"Δ_{w.prefix(k)} vanishes on g^{len(table)}")
            row.append(minor(g, v.prefix(k), cols) / den)
        table.append(row)
    return table


def recover_equal_parameters(chain: BSChain, mask: Mask) -> dict[int, Any]:
    """t_j = Φ^j_{k+1} Φ^j_{k-1} / (Φ^{j-1}_k Φ^j_k) at EQUAL slots, k = i_j."""
    phi = chamber_minors(chain, mask)
    out = {}
    for j, (i, st) in enumerate(zip(chain.word.letters, mask.statuses), start=1):
        if st == Status.EQUAL:
            out[j] = phi[j][i + 1] * phi[j][i - 1] / (phi[j - 1][i] * phi[j][i])
    return out


def verify_mr_formula(chain: BSChain, mask: Mask) -> bool:
    if chain.params is None:
        raise ValueError("chain carries no parameters")
    rec = recover_equal_parameters(chain, mask)
    return all(rec[j] == chain.params[j - 1] for j in rec)


# ---------------------------------------------------------------- R-polynomials


def mask_weight(mask: Mask) -> Polynomial:
    """(q - 1)^{m_=} q^{m_down}."""
    q = Polynomial.q()
    return (q - 1) ** mask.m_equal * q ** mask.m_down


def r_polynomial(u: Permutation, w: Permutation, word: Word | None = None) -> Polynomial:
    """Sum over distinguished masks of a reduced word of w ending at u."""
    if word is None:
        word = unipeak_word(w)
    elif word.product() != w or len(word) != length(w):
        raise ValueError("word is not a reduced word for w")
    if not bruhat_leq(u, w):
        return Polynomial()
    total = Polynomial()
    for m in iter_all_masks(word):
        if m.end == u:
            total = total + mask_weight(m)
    return total


# ---------------------------------------------------------------- unipeak words


def wire_heights(word: Word) -> list[list[int]]:
    """heights[x][j]: height of the wire starting at height x after j letters."""
    n = word.n
    pos = list(range(1, n + 1))  # pos[h-1] = wire at height h
    heights = [[x] for x in range(1, n + 1)]
    for i in word.letters:
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
        where = {x: h for h, x in enumerate(pos, start=1)}
        for x in range(1, n + 1):
            heights[x - 1].append(where[x])
    return heights


def is_unipeak(word: Word) -> bool:
    """Every wire makes all its upward crossings before its downward ones."""
    for hs in wire_heights(word):
        falling = False
        for a, b in zip(hs, hs[1:]):
            if b < a:
                falling = True
            elif b > a and falling:
                return False
    return True


def unipeak_word(w: Permutation) -> Word:
    """The lexicographically first unipeak reduced word of w.

    >>> str(unipeak_word(Permutation.parse("321"))), str(unipeak_word(Permutation.parse("3241")))
    ('s2 s1 s2', 's2 s1 s2 s3')
    """
    n = w.n
    target = length(w)

    def rec(sigma: Permutation, letters: list[int], falling: frozenset) -> list[int] | None:
        if len(letters) == target:
            return letters if sigma == w else None
        rest = compose_inv(sigma, w)
        for i in range(1, n):
            # s_i must be a left descent of sigma^{-1} w to stay reduced
            if rest.images.index(i) < rest.images.index(i + 1):
                continue
            up, down = sigma.images[i - 1], sigma.images[i]
            if up in falling:
                continue
            found = rec(right_mult_simple(sigma, i), letters + [i], falling | {down})
            if found is not None:
                return found
        return None

    found = rec(Permutation.identity(n), [], frozenset())
    if found is None:
        raise AssertionError(f"no unipeak word found for {w}")
    return Word(n, tuple(found))


def compose_inv(sigma: Permutation, w: Permutation) -> Permutation:
    """sigma^{-1} w."""
    inv = sigma.inverse()
    return Permutation(tuple(inv(x) for x in w.images))


def chambers(word: Word) -> list[tuple[int, int, int]]:
    """Chambers as (height h, first flag index, last flag index) along the word.

    The chamber at height h between consecutive letters s_h carries the
    subspace F^j_h for every j in its range.
    """
    n = word.n
    a = len(word)
    out = []
    for h in range(1, n):
        cuts = [j for j, i in enumerate(word.letters, start=1) if i == h]
        start = 0
        for c in cuts:
            out.append((h, start, c - 1))
            start = c
        out.append((h, start, a))
    return out


def chamber_roof(word: Word, chamber: tuple[int, int, int]) -> tuple[int, int] | None:
    """Wires (i, j) rising into and falling out of a bounded chamber.

    Wires are labelled by their starting height on the left.  Unbounded
    chambers return None.
    """
    h, lo, hi = chamber
    if lo == 0 or hi == len(word):
        return None
    heights = wire_heights(word)
    rising = next(x for x, hs in enumerate(heights, start=1) if hs[lo - 1] == h and hs[lo] == h + 1)
    falling = next(x for x, hs in enumerate(heights, start=1) if hs[hi] == h + 1 and hs[hi + 1] == h)
    return rising, falling


def unipeak_chamber_subspace(w: Permutation, roof: tuple[int, int], F: Matrix) -> Matrix:
    """Span(e_1, ..., e_{i-1}) + F_b with b = w^{-1}(j) - 1, for a chamber with roof (i, j).

    Wire j ends at height w^{-1}(j), so F_b is the subspace of the unbounded
    chamber on the right just below it.
    """
    i, j = roof
    n = w.n
    one = F.rows[0][0] * 0 + 1
    cols = [[one if r == c else one * 0 for r in range(n)] for c in range(i - 1)]
    cols += [list(F.col(c)) for c in range(1, w.inverse()(j))]
    return column_span_basis(Matrix(list(zip(*cols)))) if cols else Matrix([[] for _ in range(n)])


def unipeak_rank_profile(F: Matrix) -> tuple[int, ...]:
    """Ranks of g in rows [i, i'] and columns [1, j] for all i <= i' and j."""
    n = F.nrows
    out = []
    for i in range(1, n + 1):
        for i2 in range(i, n + 1):
            for j in range(1, n + 1):
                out.append(rank(F.submatrix(range(i, i2 + 1), range(1, j + 1))))
    return tuple(out)


# ---------------------------------------------------------------- finite-field oracles


# ---------------------------------------------------------------- positivity


def pluecker_support(u: Permutation, w: Permutation, J: Sequence[int]) -> bool:
    """Whether some v with u <= v <= w has v[|J|] = J.

    >>> pluecker_support(Permutation.identity(3), Permutation.parse("213"), (2,))
    True
    >>> pluecker_support(Permutation.identity(3), Permutation.parse("213"), (3,))
    False
    """
    J = tuple(sorted(J))
    k = len(J)
    return any(bruhat_leq(u, v) and bruhat_leq(v, w) and tuple(sorted(v.images[:k])) == J
               for v in all_permutations(u.n))


def flag_minors(g: Matrix) -> dict[tuple[int, ...], Any]:
    """Δ_J(g) on the leading |J| columns, for all proper nonempty J."""
    n = g.nrows
    return {J: minor(g, J, list(range(1, k + 1))) for k in range(1, n) for J in combinations(range(1, n + 1), k)}


def symbolic_suffix_minors(mask: Mask, j: int = 1) -> dict[tuple[int, ...], sympy.Expr]:
    """Flag minors of h_j ... h_a with a symbol t_m at every EQUAL slot m, expanded.

    >>> m = positive_mask(Word(3, (1, 2, 1)), Permutation.identity(3))
    >>> symbolic_suffix_minors(m)[(2,)], symbolic_suffix_minors(m)[(2, 3)]
    (t1 + t3, t1*t2)
    """
    if any(st not in (Status.EQUAL, Status.UP) for st in mask.statuses):
        raise ValueError("symbolic minors need a mask without DOWN steps")
    n = mask.word.n
    g = sympy.eye(n)
    for m, (i, st) in enumerate(zip(mask.word.letters, mask.statuses), start=1):
        if m < j:
            continue
        h = sympy.eye(n)
        if st == Status.EQUAL:
            h[i, i - 1] = sympy.Symbol(f"t{m}")
        else:
            h[i - 1, i - 1], h[i - 1, i], h[i, i - 1], h[i, i] = 0, -1, 1, 0
        g = g * h
    return {J: sympy.expand(g.extract([x - 1 for x in J], list(range(len(J)))).det())
            for k in range(1, n) for J in combinations(range(1, n + 1), k)}


def has_nonnegative_coefficients(expr) -> bool:
    """Every coefficient of the expanded polynomial is >= 0.

    >>> t = sympy.Symbol("t")
    >>> has_nonnegative_coefficients(t**2 + 2*t), has_nonnegative_coefficients(t - 1)
    (True, False)
    """
    expr = sympy.expand(expr)
    if expr == 0:
        return True
    return all(c >= 0 for c in sympy.Poly(expr, *sorted(expr.free_symbols, key=str) or [sympy.Symbol("t")]).coeffs())


def flag_key(g: Matrix) -> tuple:
    """A canonical representative of gB_+.

    Column j is reduced by the earlier columns until it vanishes at their
    pivot rows, then scaled so its topmost nonzero entry is 1.
    """
    n = g.nrows
    cols: list[list] = []
    pivots: list[int] = []
    for j in range(n):
        c = [g.rows[i][j] for i in range(n)]
        for p, col in zip(pivots, cols):
            if c[p]:
                f = c[p]
                c = [a - f * b for a, b in zip(c, col)]
        piv = next(i for i in range(n) if c[i])
        inv = 1 / c[piv]
        cols.append([a * inv for a in c])
        pivots.append(piv)
    return tuple(tuple(col) for col in cols)


def all_flags(n: int, field: Field) -> Iterator[Matrix]:
    """Every flag over F_q as a column-echelon matrix, cell by cell."""
    elems = field.elements()
    one, zero = field.one, field.zero
    for v in all_permutations(n):
        free = []
        for j in range(1, n + 1):
            earlier = set(v.images[: j - 1])
            free.extend((i, j) for i in range(v(j) + 1, n + 1) if i not in earlier)
        for vals in product(elems, repeat=len(free)):
            rows = [[zero] * n for _ in range(n)]
            for j in range(1, n + 1):
                rows[v(j) - 1][j - 1] = one
            for (i, j), x in zip(free, vals):
                rows[i - 1][j - 1] = x
            yield Matrix(rows)


def count_open_richardson_bruteforce(u: Permutation, w: Permutation, field: Field) -> int:
    """|R̊_u^w(F_q)| by scanning every flag of GL_n(F_q)/B_+."""
    return sum(1 for g in all_flags(u.n, field) if schubert_cell(g) == u and opposite_schubert_cell(g) == w)


def enumerate_open_richardson(u: Permutation, w: Permutation, q: int, word: Word | None = None,
                              max_work: int = 10**7) -> list[Matrix]:
    """All F_q points of R̊_u^w, by sweeping z-parametrized chains of a reduced word of w."""
    field = Field(q)
    if word is None:
        word = unipeak_word(w)
    if q ** len(word) > max_work:
        raise ValueError(f"q^l(w) = {q ** len(word)} exceeds the work bound {max_work}")
    if not bruhat_leq(u, w):
        return []
    out = []
    for t in product(field.elements(), repeat=len(word)):
        g = bs_parametrize(word, t, field).final
        if schubert_cell(g) == u:
            out.append(g)
    return sorted(out, key=flag_key)


def deodhar_pieces(word: Word, u: Permutation, q: int) -> dict[str, set]:
    """Final flags (as canonical keys) of each distinguished mask's Marsh-Rietsch image."""
    field = Field(q)
    out = {}
    for m in distinguished_masks(word, u):
        out[str(m)] = {flag_key(mr_parametrize(m, p, field).final) for p in mr_parameter_space(m, field)}
    return out


def bs_fibers(word: Word, q: int) -> dict[str, set]:
    """Final flags of all open z-chains over F_q grouped by their mask."""
    field = Field(q)
    out: dict[str, set] = {}
    for t in product(field.elements(), repeat=len(word)):
        ch = bs_parametrize(word, t, field)
        m = classify_bs_point(ch)
        out.setdefault(str(m) + "|" + str(m.end), set()).add(flag_key(ch.final))
    return out


__all__ = [
    "Polynomial", "rho", "z_matrix", "sdot", "zdot", "zddot", "y_matrix", "BSChain",
    "bs_parametrize", "Status", "Mask", "mask_from_perms", "iter_all_masks",
    "distinguished_masks", "positive_mask", "mr_parametrize", "mr_parameter_space",
    "classify_bs_point", "left_justified_minors_are_one", "prefix_products", "chamber_minors",
    "recover_equal_parameters", "verify_mr_formula", "mask_weight", "r_polynomial",
    "wire_heights", "is_unipeak", "unipeak_word", "chambers", "chamber_roof",
    "unipeak_chamber_subspace", "unipeak_rank_profile", "flag_key", "all_flags",
    "count_open_richardson_bruteforce", "pluecker_support", "flag_minors",
    "symbolic_suffix_minors", "has_nonnegative_coefficients", "enumerate_open_richardson", "deodhar_pieces",
    "bs_fibers",
]

"""Exact linear algebra over Q and F_p: minors, Plücker vectors, flags, cells.

Scalars are ``fractions.Fraction`` or :class:`ModP`.  Entries of other
commutative rings (sympy expressions, integers) are accepted by the
operations that never divide (``mul``, ``minor`` via cofactor expansion).

A flag is stored as an invertible n x n matrix g; its k-th subspace is the
span of the leftmost k columns.  A k-plane is an n x k matrix whose columns
span it; Plücker coordinates are its maximal minors in rows I.

>>> M = Matrix.parse("1,0;0,1;1,1")
>>> pluecker(M)[(1, 2)], pluecker(M)[(2, 3)]
(Fraction(1, 1), Fraction(-1, 1))
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Iterable, Sequence

from .perm_core import Permutation

# ---------------------------------------------------------------- scalars


@dataclass(frozen=True)
class ModP:
    """An element of the prime field F_p, stored as its residue in [0, p)."""

    v: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "v", self.v % self.p)

    def _coerce(self, other) -> "ModP":
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixing different prime fields")
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        if isinstance(other, Fraction):
            return ModP(other.numerator, self.p) / ModP(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "ModP":
        if self.v == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return ModP(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModP(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __lt__(self, other: "ModP") -> bool:
        # residue order, only for deterministic sorting
        return self.v < self._coerce(other).v

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} mod {self.p}"

    def __str__(self):
        return str(self.v)


class Field:
    """A field of exact scalars: ``QQ`` or ``GF(p)``."""

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p is not None and p >= 2**31:
            raise ValueError("prime fields are limited to p < 2^31")
        self.p = p

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __call__(self, x) -> Any:
        if self.p is None:
            if isinstance(x, ModP):
                raise TypeError("cannot coerce F_p element into Q")
            return Fraction(x)
        if isinstance(x, ModP):
            return x
        x = Fraction(x)
        return ModP(x.numerator, self.p) / ModP(x.denominator, self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self) -> list:
        if self.p is None:
            raise ValueError("Q is infinite")
        return [ModP(a, self.p) for a in range(self.p)]

    def random(self, rng: random.Random, nonzero: bool = False, bound: int = 10):
        """Random element; over Q a ratio of integers bounded by ``bound``."""
        while True:
            if self.p is None:
                x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            else:
                x = ModP(rng.randrange(self.p), self.p)
            if x or not nonzero:
                return x

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def parse_field(text: str) -> Field:
    """``"q"`` for the rationals, ``"p7"`` for F_7."""
    text = text.strip().lower()
    if text in ("q", "qq"):
        return QQ
    if text.startswith("p"):
        return GF(int(text[1:]))
    raise ValueError(f"unknown field {text!r}")


def _is_field_scalar(x) -> bool:
    return isinstance(x, (Fraction, ModP, int))


def _to_field(x):
    return Fraction(x) if isinstance(x, int) else x


# ---------------------------------------------------------------- matrices


class Matrix:
    """An immutable dense matrix; indices in the public API are 1-based.

    >>> Matrix.parse("1,2;3,4").det()
    Fraction(-2, 1)
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Any]]):
        rows = tuple(tuple(_to_field(x) for x in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def entry(self, i: int, j: int):
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> tuple:
        return self.rows[i - 1]

    def col(self, j: int) -> tuple:
        return tuple(r[j - 1] for r in self.rows)

    def columns(self, js: Iterable[int]) -> "Matrix":
        js = list(js)
        return Matrix([[r[j - 1] for j in js] for r in self.rows])

    def submatrix(self, I: Sequence[int], J: Sequence[int]) -> "Matrix":
        return Matrix([[self.rows[i - 1][j - 1] for j in J] for i in I])

    def leading(self, k: int) -> "Matrix":
        """The n x k matrix of the first k columns."""
        return self.columns(range(1, k + 1))

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    T = property(transpose)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix.parse({format_matrix(self)!r})"

    def __str__(self):
        return format_matrix(self)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mul(self, other)
        return Matrix([[x * other for x in r] for r in self.rows])

    def __rmul__(self, other):
        return Matrix([[other * x for x in r] for r in self.rows])

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-x for x in r] for r in self.rows])

    def map(self, fn: Callable[[Any], Any]) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows])

    def det(self):
        return det(self)

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> "Matrix":
        return inverse(self)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        return cls([[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int, field: Field = QQ) -> "Matrix":
        return cls([[field.zero] * n for _ in range(m)])

    @classmethod
    def parse(cls, text: str, field: Field = QQ) -> "Matrix":
        """Rows separated by ';', entries by ','; rationals as ``a/b``."""
        rows = [r for r in text.strip().split(";") if r.strip()]
        return cls([[field(Fraction(x.strip())) for x in r.split(",")] for r in rows])

    @classmethod
    def from_permutation(cls, w: Permutation, field: Field = QQ) -> "Matrix":
        """The permutation matrix with ones at (w(j), j)."""
        n = w.n
        return cls([[field.one if w(j) == i else field.zero for j in range(1, n + 1)] for i in range(1, n + 1)])


def format_matrix(M: Matrix) -> str:
    return ";".join(",".join(str(x) for x in r) for r in M.rows)


def mul(A: Matrix, B: Matrix) -> Matrix:
    if A.ncols != B.nrows:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    cols = list(zip(*B.rows))
    out = []
    for r in A.rows:
        row = []
        for c in cols:
            acc = r[0] * c[0] if r else 0
            for a, b in zip(r[1:], c[1:]):
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return Matrix(out)


def _echelon(rows: list[list[Any]]) -> tuple[list[list[Any]], list[int], int]:
    """Row-reduce a copy; returns (rows, pivot columns, sign of row swaps)."""
    rows = [list(r) for r in rows]
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    sign = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        inv = 1 / rows[r][c]
        for i in range(r + 1, m):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots, sign


def det(M: Matrix):
    """Determinant; Gaussian elimination over fields, cofactors otherwise."""
    n = M.nrows
    if n != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    if all(_is_field_scalar(x) for r in M.rows for x in r):
        rows, pivots, sign = _echelon([list(r) for r in M.rows])
        if len(pivots) < n:
            return rows[0][0] * 0
        acc = rows[0][0] if sign == 1 else -rows[0][0]
        for i in range(1, n):
            acc = acc * rows[i][i]
        return acc
    return _cofactor_det(M.rows)


def _cofactor_det(rows: Sequence[Sequence[Any]]):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j in range(n):
        a = rows[0][j]
        if a == 0:
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _cofactor_det(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def rank(M: Matrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return len(_echelon([list(r) for r in M.rows])[1])


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and 1-based pivot columns."""
    rows, pivots, _ = _echelon([list(r) for r in M.rows])
    for idx in range(len(pivots) - 1, -1, -1):
        c = pivots[idx]
        inv = 1 / rows[idx][c]
        rows[idx] = [x * inv for x in rows[idx]]
        for i in range(idx):
            if rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[idx])]
    return Matrix(rows), [c + 1 for c in pivots]


def inverse(M: Matrix) -> Matrix:
    n = M.nrows
    if n != M.ncols:
        raise ValueError("inverse of a non-square matrix")
    zero = M.rows[0][0] * 0
    one = zero + 1
    aug = Matrix([list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(M.rows)])
    R, piv = rref(aug)
    if piv[:n] != list(range(1, n + 1)):
        raise ZeroDivisionError("singular matrix")
    return Matrix([r[n:] for r in R.rows])


def solve(A: Matrix, b: Sequence[Any]) -> list:
    """The unique x with A x = b for square invertible A."""
    n = A.nrows
    if n != A.ncols:
        raise ValueError("solve needs a square matrix")
    aug = Matrix([list(r) + [b[i]] for i, r in enumerate(A.rows)])
    R, piv = rref(aug)
    if piv != list(range(1, n + 1)):
        raise ZeroDivisionError("singular system")
    return [r[n] for r in R.rows]


def nullspace(M: Matrix) -> list[list]:
    """A basis of {x : M x = 0}."""
    R, piv = rref(M)
    n = M.ncols
    zero = M.rows[0][0] * 0 if M.rows else Fraction(0)
    free = [j for j in range(1, n + 1) if j not in piv]
    basis = []
    for f in free:
        x = [zero] * n
        x[f - 1] = zero + 1
        for r, p in enumerate(piv):
            x[p - 1] = -R.rows[r][f - 1]
        basis.append(x)
    return basis


def column_span_basis(M: Matrix) -> Matrix:
    """Columns of M forming a basis of its column span (first pivots)."""
    _, piv = rref(M)
    return M.columns(piv)


def minor(M: Matrix, I: Sequence[int], J: Sequence[int]):
    """Signed minor in rows I and columns J (1-based).

    Unsorted index lists give the determinant of the rows/columns in the
    order listed; a repeated index gives 0.

    >>> M = Matrix.parse("1,0;0,1")
    >>> minor(M, [1, 2], [1, 2]), minor(M, [2, 1], [1, 2]), minor(M, [1, 1], [1, 2])
    (Fraction(1, 1), Fraction(-1, 1), Fraction(0, 1))
    """
    if len(I) != len(J):
        raise ValueError("minor needs |I| = |J|")
    for i in I:
        if not 1 <= i <= M.nrows:
            raise IndexError(f"row {i} out of range")
    for j in J:
        if not 1 <= j <= M.ncols:
            raise IndexError(f"column {j} out of range")
    if len(set(I)) < len(I) or len(set(J)) < len(J):
        return (M.rows[0][0] * 0) if M.rows else Fraction(0)
    return det(M.submatrix(I, J))


# ---------------------------------------------------------------- Plücker vectors


def sort_sign(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """(sign of the sorting permutation, sorted tuple); sign 0 on repeats."""
    if len(set(seq)) < len(seq):
        return 0, tuple(sorted(seq))
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return (-1) ** inv, tuple(sorted(seq))


@dataclass(frozen=True)
class PlueckerVector:
    """Coordinates Δ_I indexed by sorted k-subsets of [n], taken projectively."""

    n: int
    k: int
    coords: dict

    def __post_init__(self):
        full = {}
        for I in combinations(range(1, self.n + 1), self.k):
            full[I] = self.coords.get(I, 0)
        extra = set(self.coords) - set(full)
        if extra:
            raise ValueError(f"bad index sets {sorted(extra)}")
        object.__setattr__(self, "coords", full)

    def __getitem__(self, I) -> Any:
        if isinstance(I, str):
            I = tuple(int(c) for c in I)
        sign, key = sort_sign(tuple(I))
        if sign == 0:
            return self.coords[next(iter(self.coords))] * 0
        v = self.coords[key]
        return v if sign == 1 else -v

    def items(self):
        return self.coords.items()

    def support(self) -> list[tuple[int, ...]]:
        return [I for I, v in self.coords.items() if v != 0]

    def is_zero(self) -> bool:
        return not self.support()

    def normalized(self) -> "PlueckerVector":
        """Divide by the lexicographically first nonzero coordinate."""
        supp = self.support()
        if not supp:
            raise ValueError("the zero vector is not a projective point")
        c = self.coords[supp[0]]
        return PlueckerVector(self.n, self.k, {I: v / c for I, v in self.coords.items()})

    def projectively_equal(self, other: "PlueckerVector") -> bool:
        if (self.n, self.k) != (other.n, other.k):
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.normalized().coords == other.normalized().coords

    def __eq__(self, other):
        return isinstance(other, PlueckerVector) and self.projectively_equal(other)

    def __hash__(self):
        return hash((self.n, self.k, tuple(self.normalized().coords.items())))

    def format(self) -> str:
        return "\n".join(f"{''.join(map(str, I))}:{v}" for I, v in self.coords.items())

    @classmethod
    def parse(cls, text: str, field: Field = QQ) -> "PlueckerVector":
        """Read ``I:value`` lines, I a digit string."""
        coords = {}
        for line in text.strip().splitlines():
            if not line.strip():
                continue
            key, val = line.split(":")
            coords[tuple(int(c) for c in key.strip())] = field(Fraction(val.strip()))
        k = len(next(iter(coords)))
        n = max(max(I) for I in coords)
        return cls(n, k, coords)


def pluecker(M: Matrix) -> PlueckerVector:
    """Maximal minors of an n x k matrix, indexed by row sets."""
    n, k = M.shape
    cols = list(range(1, k + 1))
    return PlueckerVector(n, k, {I: minor(M, I, cols) for I in combinations(range(1, n + 1), k)})


def pluecker_to_matrix(D: PlueckerVector) -> Matrix:
    """An n x k matrix whose Plücker vector is D/Δ_I, I the lex-first support set.

    Entry (r, a) is Δ(I with i_a replaced by r) / Δ_I, read with signs for the
    unsorted index list.
    """
    supp = D.support()
    if not supp:
        raise ValueError("the zero vector is not a projective point")
    I = supp[0]
    base = D.coords[I]
    rows = []
    for r in range(1, D.n + 1):
        row = []
        for a in range(D.k):
            seq = list(I)
            seq[a] = r
            row.append(D[tuple(seq)] / base)
        rows.append(row)
    return Matrix(rows)


def on_grassmannian(D: PlueckerVector) -> bool:
    """Whether D is the Plücker vector of a k-plane (reconstruct and compare).

    >>> on_grassmannian(PlueckerVector(4, 2, {(1, 2): Fraction(1), (3, 4): Fraction(1)}))
    False
    """
    if D.is_zero():
        return False
    return pluecker(pluecker_to_matrix(D)).projectively_equal(D)


# ---------------------------------------------------------------- flags and cells


class FlagPoint:
    """A complete flag gB_+; the k-th subspace is spanned by the first k columns."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix, check: bool = True):
        if matrix.nrows != matrix.ncols:
            raise ValueError("a flag needs a square matrix")
        if check and not det(matrix):
            raise ValueError("flag matrix is singular")
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("FlagPoint is immutable")

    @property
    def n(self) -> int:
        return self.matrix.nrows

    def subspace(self, k: int) -> Matrix:
        return self.matrix.leading(k)

    def pluecker(self, k: int) -> PlueckerVector:
        return pluecker(self.subspace(k))

    def same_flag(self, other: "FlagPoint") -> bool:
        """Equality of flags: g^{-1} g' is upper triangular."""
        h = mul(inverse(self.matrix), other.matrix)
        return all(not h.rows[i][j] for i in range(self.n) for j in range(i))

    def __repr__(self):
        return f"FlagPoint({format_matrix(self.matrix)!r})"

    @classmethod
    def from_permutation(cls, w: Permutation, field: Field = QQ) -> "FlagPoint":
        return cls(Matrix.from_permutation(w, field))


def _as_matrix(F) -> Matrix:
    return F.matrix if isinstance(F, FlagPoint) else F


def _pivot_rows(g: Matrix, topmost: bool) -> list[int]:
    """Column-reduce left to right; record each column's extreme nonzero row."""
    n = g.nrows
    reduced: list[tuple[int, list]] = []
    out = []
    order = range(n) if topmost else range(n - 1, -1, -1)
    for j in range(g.ncols):
        c = [g.rows[i][j] for i in range(n)]
        for p, col in sorted(reduced, key=lambda t: t[0] if topmost else -t[0]):
            if c[p]:
                f = c[p] / col[p]
                c = [a - f * b for a, b in zip(c, col)]
        piv = next((i for i in order if c[i]), None)
        if piv is None:
            raise ValueError("flag matrix is singular")
        reduced.append((piv, c))
        out.append(piv + 1)
    return out


def schubert_cell(F) -> Permutation:
    """The v with gB_+ in B_- v B_+ (upper-left ranks #([i] ∩ v[j]))."""
    return Permutation(tuple(_pivot_rows(_as_matrix(F), topmost=True)))


def opposite_schubert_cell(F) -> Permutation:
    """The w with gB_+ in B_+ w B_+ (lower-left ranks #([i+1,n] ∩ w[j]))."""
    return Permutation(tuple(_pivot_rows(_as_matrix(F), topmost=False)))


def relative_position(E, F) -> Permutation:
    """The w with dim(E_i ∩ F_j) = #([i] ∩ w[j])."""
    return opposite_schubert_cell(mul(inverse(_as_matrix(E)), _as_matrix(F)))


def in_open_richardson(F, u: Permutation, w: Permutation) -> bool:
    return schubert_cell(F) == u and opposite_schubert_cell(F) == w


# ---------------------------------------------------------------- positroid envelope


def interval_rank(M: Matrix, i: int, j: int) -> int:
    """Rank of the projection of the column span onto e_i, ..., e_j (cyclic, j >= i-1)."""
    n = M.nrows
    if j < i:
        return 0
    rows = [((a - 1) % n) + 1 for a in range(i, j + 1)]
    rows = sorted(set(rows))
    return rank(M.submatrix(rows, range(1, M.ncols + 1)))


def positroid_envelope(M: Matrix):
    """The bounded affine permutation of the open positroid cell containing span(M)."""
    from .affine_positroid import f_from_cyclic_rank_table

    n, k = M.shape
    if rank(M) != k:
        raise ValueError("positroid_envelope needs a full-rank n x k matrix")
    table = {(i, j): interval_rank(M, i, j) for i in range(1, n + 1) for j in range(i - 1, i + n)}
    return f_from_cyclic_rank_table(table, n, k)


# ---------------------------------------------------------------- total nonnegativity


def _require_rational(M: Matrix):
    if any(isinstance(x, ModP) for r in M.rows for x in r):
        raise TypeError("positivity tests need rational entries")


def _sign_consistent(values: Iterable[Any]) -> bool:
    pos = neg = False
    for v in values:
        if v > 0:
            pos = True
        elif v < 0:
            neg = True
    return not (pos and neg)


def is_tnn_subspace(M: Matrix) -> bool:
    """All maximal minors nonnegative up to one global sign.

    >>> is_tnn_subspace(Matrix.parse("1,0;0,1;0,0"))
    True
    >>> is_tnn_subspace(Matrix.parse("1,0;0,1;1,1"))
    False
    """
    _require_rational(M)
    return _sign_consistent(pluecker(M).coords.values())


def is_tnn_flag(F) -> bool:
    g = _as_matrix(F)
    _require_rational(g)
    return all(is_tnn_subspace(g.leading(k)) for k in range(1, g.nrows + 1))


def _alt(v: Sequence[Any]) -> list:
    return [x if i % 2 == 0 else -x for i, x in enumerate(v)]


def _basis_columns(vectors: list[list]) -> Matrix:
    return Matrix(list(zip(*vectors)))


def _peel_down(V: Matrix) -> Matrix:
    """V ∩ {x_j = 0} for the last coordinate j not identically zero on V."""
    n, k = V.shape
    j = max(i for i in range(n) if any(V.rows[i]))
    cols = [list(V.col(a)) for a in range(1, k + 1)]
    a0 = next(a for a in range(k) if cols[a][j])
    piv = cols[a0]
    out = []
    for a in range(k):
        if a == a0:
            continue
        f = cols[a][j] / piv[j]
        out.append([x - f * y for x, y in zip(cols[a], piv)])
    return _basis_columns(out) if out else Matrix([[] for _ in range(n)])


def _orth_alt(V: Matrix) -> Matrix:
    """alt(V^⊥) as an n x (n-k) matrix; it has Δ_I = ±Δ_{[n]∖I}(V)."""
    basis = nullspace(V.transpose())
    return _basis_columns([_alt(b) for b in basis])


def _peel_up(V: Matrix) -> Matrix:
    """A TNN (k+1)-plane containing the TNN k-plane V, via the dual peel."""
    n, k = V.shape
    W = _orth_alt(V)
    Wp = _peel_down(W)
    if Wp.ncols == 0:
        return Matrix.identity(n)
    return _orth_alt(Wp)


def tnn_completion(M: Matrix) -> FlagPoint:
    """Extend the TNN k-plane span(M) to a TNN complete flag with F_k = span(M)."""
    _require_rational(M)
    n, k = M.shape
    if rank(M) != k:
        raise ValueError("tnn_completion needs a full-rank matrix")
    if not is_tnn_subspace(M):
        raise ValueError("input subspace is not totally nonnegative")
    down = [M]
    while down[-1].ncols > 1:
        down.append(_peel_down(down[-1]))
    # build an adapted basis: column a of the flag lies in F_a
    chain = list(reversed(down))
    up = M
    while up.ncols < n:
        up = _peel_up(up)
        chain.append(up)
    cols: list[list] = []
    for sub in chain:
        for a in range(1, sub.ncols + 1):
            v = list(sub.col(a))
            if rank(_basis_columns(cols + [v])) > len(cols):
                cols.append(v)
                break
    g = _basis_columns(cols)
    F = FlagPoint(g)
    if not is_tnn_flag(F):
        raise AssertionError("completion is not totally nonnegative")
    return F


def partial_flag_is_tnn(subspaces: Sequence[Matrix]) -> bool:
    return all(is_tnn_subspace(V) for V in subspaces)


def search_middle_completion(V_low: Matrix, V_high: Matrix, bound: int = 50) -> Matrix | None:
    """Grid search for a TNN V with V_low ⊂ V ⊂ V_high and dim V = dim V_low + 1.

    V_high / V_low must be 2-dimensional; candidates are V_low + span(a x + b y)
    for a fixed complement basis x, y and integers |a|, |b| <= bound.
    """
    k = V_low.ncols
    if V_high.ncols != k + 2:
        raise ValueError("the quotient V_high / V_low must be a plane")
    base = [list(V_low.col(a)) for a in range(1, k + 1)]
    comp = []
    for a in range(1, V_high.ncols + 1):
        v = list(V_high.col(a))
        if rank(_basis_columns(base + comp + [v])) > len(base) + len(comp):
            comp.append(v)
    x, y = comp
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a == 0 and b == 0:
                continue
            v = [a * p + b * q for p, q in zip(x, y)]
            V = _basis_columns(base + [v])
            if is_tnn_subspace(V):
                return V
    return None


def random_matrix(m: int, n: int, field: Field, rng: random.Random, bound: int = 10) -> Matrix:
    return Matrix([[field.random(rng, bound=bound) for _ in range(n)] for _ in range(m)])


def random_flag(n: int, field: Field, rng: random.Random) -> FlagPoint:
    while True:
        g = random_matrix(n, n, field, rng)
        if det(g):
            return FlagPoint(g)


__all__ = [
    "ModP", "Field", "QQ", "GF", "parse_field", "Matrix", "format_matrix", "mul", "det", "rank",
    "rref", "inverse", "solve", "nullspace", "minor", "sort_sign", "PlueckerVector", "pluecker",
    "pluecker_to_matrix", "on_grassmannian", "FlagPoint", "schubert_cell", "opposite_schubert_cell",
    "relative_position", "in_open_richardson", "interval_rank",
    "positroid_envelope", "is_tnn_subspace", "is_tnn_flag", "tnn_completion",
    "search_middle_completion", "random_matrix", "random_flag",
]

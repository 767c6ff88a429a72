import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from positroids import exact_linalg as el
from positroids.cli import random_tnn_matrix
from positroids.exact_linalg import GF, QQ, Matrix, ModP
from positroids.perm_core import all_permutations

F7 = GF(7)
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=5)
mod7 = st.integers(0, 6).map(lambda a: ModP(a, 7))


def matrices(m, n, elements=fractions):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=m, max_size=m).map(Matrix)


def leibniz(M):
    n = M.nrows
    total = M.rows[0][0] * 0
    for p in permutations(range(n)):
        sign = (-1) ** sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])
        term = M.rows[0][0] * 0 + sign
        for i in range(n):
            term = term * M.rows[i][p[i]]
        total = total + term
    return total


@given(mod7, mod7, mod7)
def test_mod_p_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a - b + b == a
    if b:
        assert a / b * b == a
        assert b ** 6 == 1


def test_mod_p_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ModP(3, 7) / ModP(0, 7)


@pytest.mark.parametrize("text,p", [("q", None), ("QQ", None), ("p7", 7), ("p2", 2)])
def test_parse_field(text, p):
    assert el.parse_field(text).p == p


@pytest.mark.parametrize("bad", ["p4", "z", "p1"])
def test_parse_field_rejects(bad):
    with pytest.raises(ValueError):
        el.parse_field(bad)


@given(matrices(4, 4))
def test_det_matches_leibniz(M):
    assert el.det(M) == leibniz(M)


@given(matrices(3, 3, mod7))
def test_det_matches_leibniz_mod_p(M):
    assert el.det(M) == leibniz(M)


@given(matrices(3, 3), matrices(3, 3))
def test_det_is_multiplicative(A, B):
    assert el.det(el.mul(A, B)) == el.det(A) * el.det(B)


@given(matrices(3, 5))
def test_rank_nullity(M):
    null = el.nullspace(M)
    assert el.rank(M) + len(null) == M.ncols
    for v in null:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M.rows)


@given(matrices(4, 4))
def test_inverse_and_solve(M):
    if el.det(M):
        assert el.mul(M, el.inverse(M)) == Matrix.identity(4)
        b = [Fraction(i) for i in range(4)]
        x = el.solve(M, b)
        assert [sum(a * y for a, y in zip(row, x)) for row in M.rows] == b
    else:
        with pytest.raises(ZeroDivisionError):
            el.inverse(M)


@given(matrices(5, 2))
def test_pluecker_round_trip(M):
    D = el.pluecker(M)
    if el.rank(M) == 2:
        assert el.on_grassmannian(D)
        assert el.pluecker(el.pluecker_to_matrix(D)).projectively_equal(D)
        assert el.rank(Matrix([a + b for a, b in zip(M.rows, el.pluecker_to_matrix(D).rows)])) == 2
    else:
        assert D.is_zero()


@given(matrices(5, 3), matrices(3, 3))
def test_pluecker_scales_by_det(M, g):
    D, E = el.pluecker(M), el.pluecker(el.mul(M, g))
    assert all(E[I] == D[I] * el.det(g) for I in combinations(range(1, 6), 3))


def test_pluecker_vector_text_round_trip():
    D = el.pluecker(Matrix.parse("1,0;2,1;0,3;1,1"))
    assert el.PlueckerVector.parse(D.format()).coords == D.coords
    assert D["21"] == -D[(1, 2)]


def test_on_grassmannian_rejects_non_decomposable():
    D = el.PlueckerVector(4, 2, {(1, 2): Fraction(1), (3, 4): Fraction(1), (1, 3): Fraction(1)})
    assert not el.on_grassmannian(D)


@pytest.mark.parametrize("w", all_permutations(4))
def test_cells_of_permutation_flags(w):
    F = el.FlagPoint.from_permutation(w)
    assert el.schubert_cell(F) == w
    assert el.opposite_schubert_cell(F) == w


@pytest.mark.parametrize("field", [QQ, F7])
def test_cells_match_rank_conditions(field):
    rng = random.Random(1)
    n = 4
    for _ in range(30):
        g = el.random_flag(n, field, rng).matrix
        v, w = el.schubert_cell(g), el.opposite_schubert_cell(g)
        for i in range(n + 1):
            for j in range(1, n + 1):
                upper = el.rank(g.submatrix(range(1, i + 1), range(1, j + 1))) if i else 0
                lower = el.rank(g.submatrix(range(i + 1, n + 1), range(1, j + 1))) if i < n else 0
                assert upper == sum(1 for x in v.prefix(j) if x <= i)
                assert lower == sum(1 for x in w.prefix(j) if x > i)


@pytest.mark.parametrize("field", [QQ, F7])
def test_relative_position_by_intersection_dimensions(field):
    rng = random.Random(2)
    n = 4
    for _ in range(20):
        E, F = el.random_flag(n, field, rng), el.random_flag(n, field, rng)
        w = el.relative_position(E, F)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                both = Matrix([a + b for a, b in zip(E.subspace(i).rows, F.subspace(j).rows)])
                assert i + j - el.rank(both) == sum(1 for x in w.prefix(j) if x <= i)


def test_positroid_envelope_of_coordinate_plane():
    M = Matrix.parse("1,0;0,0;0,1;0,0")
    f = el.positroid_envelope(M)
    assert f.window == (5, 2, 7, 4)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_tnn_completion(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    k = rng.randint(1, n - 1)
    M = random_tnn_matrix(n, k, rng)
    assert el.is_tnn_subspace(M)
    F = el.tnn_completion(M)
    assert el.is_tnn_flag(F)
    assert el.rank(Matrix([a + b for a, b in zip(M.rows, F.subspace(k).rows)])) == k


def test_tnn_completion_rejects_non_tnn():
    with pytest.raises(ValueError):
        el.tnn_completion(Matrix.parse("1,0;0,1;1,1"))


def test_tnn_tests_refuse_finite_fields():
    with pytest.raises(TypeError):
        el.is_tnn_subspace(Matrix.parse("1,0;0,1;0,0", F7))


def test_tnn_is_up_to_global_sign():
    assert el.is_tnn_subspace(Matrix.parse("0,1;1,0;0,0"))
    assert el.is_tnn_subspace(Matrix.parse("1,0;0,-1;0,0"))
    assert not el.is_tnn_subspace(Matrix.parse("1,0;0,1;0,0;1,1"))


def test_same_flag_ignores_upper_triangular_changes():
    g = Matrix.parse("1,2,3;4,5,6;7,8,10")
    b = Matrix.parse("2,1,5;0,3,1;0,0,-1")
    assert el.FlagPoint(g).same_flag(el.FlagPoint(el.mul(g, b)))
    assert not el.FlagPoint(g).same_flag(el.FlagPoint(el.mul(g, b.transpose())))

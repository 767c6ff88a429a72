import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from positroids import gt_degen as gt
from positroids import tableaux_smt as smt
from positroids.gt_degen import GTPattern, PipeDream
from positroids.perm_core import Permutation, all_permutations, bruhat_leq, longest
from positroids.tableaux_smt import Tableau

P = Permutation.parse
G = GTPattern.parse
S4 = all_permutations(4)


def test_pattern_text_and_validity():
    g = G("3210/211/21/1")
    assert str(g) == "3210/211/21/1" and g.is_valid()
    assert g.row_sums() == (6, 4, 3, 1)
    assert not G("210/02/1").is_valid()
    assert str(GTPattern(((10, 0), (3,)))) == "10,0/3"
    with pytest.raises(ValueError):
        G("210/1/1")


@pytest.mark.parametrize("columns,pattern", [([(2, 3), (1,)], "210/11/1"), ([(1, 3), (2,)], "210/20/1"), ([], "000/00/0")])
def test_gamma_of_exponents(columns, pattern):
    assert str(gt.gamma(gt.exponent_matrix(columns, 3))) == pattern


def test_gamma_failure():
    assert gt.gamma([[0, 0, 1], [0, 0, 0], [0, 0, 0]]) is None


@given(st.lists(st.lists(st.sampled_from([(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]), max_size=3), min_size=2, max_size=2))
def test_gamma_is_additive(parts):
    A, B = gt.exponent_matrix(parts[0], 3), gt.exponent_matrix(parts[1], 3)
    AB = gt.exponent_matrix(parts[0] + parts[1], 3)
    ga, gb, gab = gt.gamma(A), gt.gamma(B), gt.gamma(AB)
    if ga is not None and gb is not None:
        assert gab == ga + gb


def test_gt_from_reverse_tableau():
    assert str(gt.gt_from_reverse_ssyt(Tableau.from_columns([(3, 2), (1,)], reverse=True), 3)) == "210/11/1"
    assert gt.gt_from_reverse_ssyt(Tableau.parse("", reverse=True), 3) == GTPattern.zero(3)
    with pytest.raises(ValueError):
        gt.gt_from_reverse_ssyt(Tableau.parse("12", reverse=True), 3)


@pytest.mark.parametrize("lam,n", [((2, 1), 3), ((3, 1), 4), ((2, 2, 1), 4), ((3, 2, 1), 4), ((2, 1, 1), 5), ((4, 2, 2), 5)])
def test_gt_bijection_with_reverse_tableaux(lam, n):
    for alpha in smt.compositions(sum(lam), n):
        tabs = smt.reverse_ssyt(lam, alpha)
        pats = {gt.gt_from_reverse_ssyt(T, n) for T in tabs}
        assert len(pats) == len(tabs) == smt.kostka(lam, alpha)
        top = tuple(lam) + (0,) * (n - len(lam))
        assert pats == set(gt.enumerate_gt(top, gt.content_row_sums(alpha)))


def test_gt_polytope_vertices_for_421():
    pats = {str(g) for g in gt.enumerate_gt((4, 2, 1))}
    vertices = ["421/42/4", "421/41/4", "421/42/2", "421/22/2", "421/21/2", "421/41/1", "421/21/1"]
    assert set(vertices) <= pats
    assert len(gt.enumerate_gt((3, 3, 3))) == 1


@pytest.mark.parametrize("cells,perm", [((), "123"), (((1, 1),), "213"), (((1, 1), (1, 2), (2, 1)), "321")])
def test_ubar(cells, perm):
    assert gt.ubar(PipeDream(3, frozenset(cells))) == P(perm)


def test_ubar_of_staircase_is_longest():
    for n in range(1, 6):
        assert gt.ubar(gt.staircase(n)) == longest(n)
    with pytest.raises(ValueError):
        PipeDream(3, frozenset({(2, 2)}))


def test_schubert_criteria_in_n3():
    s1, s2 = P("213"), P("132")
    for g in gt.enumerate_gt((3, 1, 0)) + gt.enumerate_gt((2, 1, 0)):
        assert gt.nonzero_in_schubert(g, s1) == (g(1, 1) == g(2, 1))
        assert gt.nonzero_in_schubert(g, s2) == (g(2, 1) == g(3, 1) or g(1, 2) == g(2, 2))
        assert gt.nonzero_in_schubert(g, Permutation.identity(3))
        assert gt.nonzero_in_opposite(g, longest(3))


def test_opposite_criterion_for_4231():
    w = P("4231")
    for g in gt.enumerate_gt((3, 2, 1, 0)):
        assert gt.nonzero_in_opposite(g, w) == (g(2, 2) == g(1, 3) or g(3, 2) == g(2, 3))
    assert not gt.nonzero_in_opposite(G("3210/220/21/1"), w)


@pytest.mark.parametrize("pattern,expected", [("3210/211/21/1", True), ("3210/310/30/1", True),
                                              ("3210/310/21/1", False), ("3210/220/21/1", False)])
def test_richardson_criterion_examples(pattern, expected):
    assert gt.nonzero_in_richardson_strict(G(pattern), P("1324"), P("4231")) == expected


def test_third_pattern_fails_on_the_schubert_side():
    assert not gt.nonzero_in_schubert(G("3210/310/21/1"), P("1324"))


def test_strict_criterion_requires_strict_top_row():
    with pytest.raises(ValueError):
        gt.nonzero_in_richardson_strict(G("2110/210/20/1"), P("1324"), P("4231"))


def test_weak_criterion_overcounts_for_2110():
    u, w = P("1324"), P("4231")
    pats = gt.enumerate_gt((2, 1, 1, 0), gt.content_row_sums((1, 1, 1, 1)))
    assert sorted(map(str, pats)) == ["2110/111/11/1", "2110/210/11/1", "2110/210/20/1"]
    assert all(gt.nonzero_in_schubert(g, u) and gt.nonzero_in_opposite(g, w) for g in pats)
    assert smt.standard_count((2, 1, 1, 0), (1, 1, 1, 1), u, w) == 2


def test_every_strict_pattern_survives_on_the_full_flag():
    e, w0 = Permutation.identity(4), longest(4)
    assert all(gt.nonzero_in_richardson_strict(g, e, w0) for g in gt.enumerate_gt((3, 2, 1, 0)))


def test_gt_counts_match_standard_counts():
    lam = (3, 2, 1, 0)
    rng = random.Random(0)
    pairs = [(u, w) for u in S4 for w in S4 if bruhat_leq(u, w)]
    for u, w in rng.sample(pairs, 25):
        for alpha in [(1, 2, 2, 1), (2, 1, 2, 1), (3, 2, 1, 0), (0, 1, 2, 3), (1, 1, 2, 2)]:
            assert gt.richardson_gt_count(lam, alpha, u, w) == smt.standard_count(lam, alpha, u, w)


def test_tau0():
    assert gt.tau0(GTPattern.zero(3)) == GTPattern.zero(3)
    g = gt.tau0(G("210/11/1"))
    assert g.is_valid() and g.top() == (2, 1, 0)
    with pytest.raises(ValueError):
        gt.tau0(G("321/21/2"))


@given(st.sampled_from(gt.enumerate_gt((3, 2, 1, 0)) + gt.enumerate_gt((4, 2, 2, 0))))
def test_tau0_is_an_involution(g):
    h = gt.tau0(g)
    assert h.is_valid() and gt.tau0(h) == g


def test_tau0_exchanges_schubert_and_opposite_criteria():
    w0 = longest(4)
    for g in gt.enumerate_gt((3, 2, 1, 0)):
        for u in S4:
            assert gt.nonzero_in_schubert(g, u) == gt.nonzero_in_opposite(gt.tau0(g), u * w0)

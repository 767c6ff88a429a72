import random
from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from positroids import bott_samelson_deodhar as bsd
from positroids import exact_linalg as el
from positroids.bott_samelson_deodhar import Mask, Polynomial, Status
from positroids.exact_linalg import Matrix
from positroids.perm_core import (
    Permutation,
    Word,
    all_permutations,
    bruhat_interval,
    bruhat_leq,
    is_reduced,
    length,
    longest,
    reduced_words,
    simple,
)

P = Permutation.parse
E3 = Permutation.identity(3)
q = Polynomial.q()


def positive(rng):
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def test_polynomial_arithmetic():
    assert (q - 1) ** 2 == q * q - 2 * q + 1
    assert ((q - 1) ** 3 + q * (q - 1))(2) == 3
    assert str(Polynomial()) == "0"


def test_bs_121_final_matrix():
    rng = random.Random(0)
    for _ in range(5):
        t1, t2, t3 = (positive(rng) for _ in range(3))
        g = bsd.bs_parametrize(Word(3, (1, 2, 1)), [t1, t2, t3]).final
        assert g == Matrix([[t1 * t3 + t2, t1, 1], [t3, 1, 0], [1, 0, 0]])


def test_bs_2121_final_matrix():
    rng = random.Random(1)
    for _ in range(5):
        t1, t2, t3, t4 = (positive(rng) for _ in range(4))
        g = bsd.bs_parametrize(Word(3, (2, 1, 2, 1)), [t1, t2, t3, t4]).final
        assert g == Matrix([[t3 + t2 * t4, t2, 1], [1 + t1 * t4, t1, 0], [t4, 1, 0]])


def test_bs_empty_word():
    ch = bsd.bs_parametrize(Word(3, ()), [])
    assert ch.matrices == (Matrix.identity(3),)
    assert ch.is_open()


@given(st.lists(st.integers(1, 3), max_size=6), st.integers(0, 10**6))
def test_bs_chains_are_open(letters, seed):
    rng = random.Random(seed)
    word = Word(4, tuple(letters))
    ch = bsd.bs_parametrize(word, [Fraction(rng.randint(-5, 5)) for _ in letters])
    assert ch.is_open()


def test_masks_of_121():
    word = Word(3, (1, 2, 1))
    assert [str(m) for m in bsd.distinguished_masks(word, E3)] == [". . .", "s1 . s1"]
    assert [str(m) for m in bsd.distinguished_masks(word, simple(1, 3))] == [". . s1"]
    assert str(bsd.positive_mask(word, simple(1, 3))) == ". . s1"


@pytest.mark.parametrize("length_", range(1, 8))
def test_masks_of_repeated_letter(length_):
    word = Word(2, (1,) * length_)
    masks = list(bsd.iter_all_masks(word))
    # paths v^0 = e, ..., v^a in {e, s1} with no two consecutive s1
    paths = [p for p in product((0, 1), repeat=length_) if all(not (a and b) for a, b in zip((0,) + p, p))]
    assert len(masks) == len(paths)


def test_positive_mask_extremes():
    for w in all_permutations(4):
        for word in reduced_words(w)[:3]:
            top = bsd.positive_mask(word, w)
            bottom = bsd.positive_mask(word, Permutation.identity(4))
            assert top.m_up == len(word)
            assert bottom.m_equal == len(word)
    with pytest.raises(ValueError):
        bsd.positive_mask(Word(3, (1,)), simple(2, 3))


def test_mask_text_round_trip():
    word = Word(3, (1, 2, 1))
    m = Mask.parse("s1 . s1", word)
    assert m.statuses == (Status.UP, Status.EQUAL, Status.DOWN)
    assert str(m) == "s1 . s1"
    for bad in ["s1 . .", "s2 . .", ". ."]:
        with pytest.raises(ValueError):
            Mask.parse(bad, word)


@pytest.mark.parametrize("w", all_permutations(4))
def test_dimension_formula_on_reduced_words(w):
    word = reduced_words(w)[0]
    for m in bsd.iter_all_masks(word):
        assert m.m_equal + 2 * m.m_down == length(w) - length(m.end)


def test_mr_121_products():
    rng = random.Random(2)
    word = Word(3, (1, 2, 1))
    for _ in range(5):
        t1, t2, t3, u3 = (positive(rng) for _ in range(4))
        g = bsd.mr_parametrize(Mask.parse(". . .", word), [t1, t2, t3]).final
        assert g == Matrix([[1, 0, 0], [t1 + t3, 1, 0], [t2 * t3, t2, 1]])
        g = bsd.mr_parametrize(Mask.parse("s1 . s1", word), [None, t2, u3]).final
        assert g == Matrix([[1, 0, 0], [u3, 1, 0], [-t2, 0, 1]])


def test_mr_11111_partial_products():
    word = Word(2, (1,) * 5)
    mask = Mask.parse(". . s1 s1 s1", word)
    assert mask.statuses == (Status.EQUAL, Status.EQUAL, Status.UP, Status.DOWN, Status.UP)
    t1, t2, u4 = Fraction(2), Fraction(3, 5), Fraction(-7)
    ch = bsd.mr_parametrize(mask, [t1, t2, None, u4, None])
    s = t1 + t2
    assert list(ch.matrices) == [
        Matrix([[1, 0], [0, 1]]), Matrix([[1, 0], [t1, 1]]), Matrix([[1, 0], [s, 1]]),
        Matrix([[0, -1], [1, -s]]), Matrix([[1, 0], [s + u4, 1]]), Matrix([[0, -1], [1, -s - u4]]),
    ]
    assert [str(v) for v in bsd.classify_bs_point(ch).perms] == ["12", "12", "12", "21", "12", "21"]


def test_mr_rejects_bad_parameters():
    word = Word(3, (1, 2, 1))
    with pytest.raises(ValueError):
        bsd.mr_parametrize(Mask.parse(". . .", word), [1, 0, 1])
    with pytest.raises(ValueError):
        bsd.mr_parametrize(Mask.parse("s1 . s1", word), [1, 1, 1])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=6), st.integers(0, 10**6))
def test_classify_inverts_mr_parametrize(letters, seed):
    rng = random.Random(seed)
    word = Word(4, tuple(letters))
    masks = list(bsd.iter_all_masks(word))
    m = rng.choice(masks)
    params = [positive(rng) if s == Status.EQUAL else None if s == Status.UP else Fraction(rng.randint(-4, 4))
              for s in m.statuses]
    ch = bsd.mr_parametrize(m, params)
    assert ch.is_open()
    assert bsd.classify_bs_point(ch) == m
    assert bsd.left_justified_minors_are_one(ch, m)


@pytest.mark.parametrize("u,w,expected", [
    ("123", "321", (q - 1) ** 3 + q * (q - 1)),
    ("213", "312", q - 1),
    ("2143", "2143", Polynomial((1,))),
    ("321", "123", Polynomial()),
])
def test_r_polynomial_examples(u, w, expected):
    assert bsd.r_polynomial(P(u), P(w)) == expected


@pytest.mark.parametrize("q_", [2, 3])
def test_enumerate_open_richardson_counts(q_):
    assert len(bsd.enumerate_open_richardson(E3, longest(3), q_)) == ((q_ - 1) ** 3 + q_ * (q_ - 1))
    assert len(bsd.enumerate_open_richardson(P("213"), P("312"), q_)) == q_ - 1
    assert len(bsd.enumerate_open_richardson(P("231"), P("231"), q_)) == 1


def test_enumerate_open_richardson_guard():
    with pytest.raises(ValueError):
        bsd.enumerate_open_richardson(Permutation.identity(5), longest(5), 5, max_work=1000)


@pytest.mark.parametrize("w", [w for w in all_permutations(4) if length(w) <= 4])
def test_deodhar_partition_in_s4(w):
    for word in reduced_words(w)[:2]:
        for u in bruhat_interval(Permutation.identity(4), w):
            pieces = bsd.deodhar_pieces(word, u, 2)
            flat = [k for s in pieces.values() for k in s]
            assert len(flat) == len(set(flat))
            oracle = {bsd.flag_key(g) for g in bsd.enumerate_open_richardson(u, w, 2, word)}
            assert set(flat) == oracle
            assert len(flat) == bsd.r_polynomial(u, w, word)(2)


@pytest.mark.parametrize("letters", [(1, 2, 1), (2, 1, 2), (1, 2, 3, 1, 2, 1), (2, 1, 2, 3)])
def test_chamber_minors_recover_parameters(letters):
    rng = random.Random(len(letters))
    word = Word(max(letters) + 1, letters)
    for u in bruhat_interval(Permutation.identity(word.n), word.product()):
        mask = bsd.positive_mask(word, u)
        t = [positive(rng) if s == Status.EQUAL else None for s in mask.statuses]
        ch = bsd.mr_parametrize(mask, t)
        assert bsd.verify_mr_formula(ch, mask)
        # numerators of the chamber minors are the left-justified minors, all equal to 1
        assert bsd.left_justified_minors_are_one(ch, mask)


@pytest.mark.parametrize("w,word", [("321", (2, 1, 2)), ("3241", (2, 1, 2, 3)), ("123", ())])
def test_unipeak_word_examples(w, word):
    x = bsd.unipeak_word(P(w))
    assert x.letters == word
    assert bsd.is_unipeak(x) and is_reduced(x)


@pytest.mark.parametrize("w", all_permutations(4))
def test_every_permutation_has_a_unipeak_word(w):
    x = bsd.unipeak_word(w)
    assert x.product() == w and is_reduced(x) and bsd.is_unipeak(x)


def test_non_unipeak_word():
    assert not bsd.is_unipeak(Word(3, (1, 2, 1)))


@pytest.mark.parametrize("w", [w for w in all_permutations(4) if length(w) >= 3])
def test_rank_profile_determines_the_deodhar_piece(w):
    word = bsd.unipeak_word(w)
    fibers = bsd.bs_fibers(word, 2)
    owner = {}
    for key, flags in fibers.items():
        for fk in flags:
            g = Matrix([list(r) for r in zip(*fk)])
            prof = bsd.unipeak_rank_profile(g)
            assert owner.setdefault(prof, key) == key


def test_unipeak_chamber_subspaces():
    rng = random.Random(5)
    for w in all_permutations(4):
        word = bsd.unipeak_word(w)
        for _ in range(3):
            t = [Fraction(rng.randint(-5, 5)) for _ in word]
            ch = bsd.bs_parametrize(word, t)
            F = ch.final
            for chamber in bsd.chambers(word):
                roof = bsd.chamber_roof(word, chamber)
                if roof is None:
                    continue
                h, lo, hi = chamber
                V = bsd.unipeak_chamber_subspace(w, roof, F)
                for j in range(lo, hi + 1):
                    Fj = ch.matrices[j].leading(h)
                    both = Matrix([a + b for a, b in zip(V.rows, Fj.rows)]) if V.ncols else Fj
                    assert el.rank(both) == el.rank(V) == h


def test_symbolic_suffix_minors():
    m = bsd.positive_mask(Word(3, (1, 2, 1)), E3)
    t1, t2, t3 = sympy.symbols("t1 t2 t3")
    minors = bsd.symbolic_suffix_minors(m)
    assert minors[(2,)] == t1 + t3
    assert minors[(3,)] == t2 * t3
    assert minors[(2, 3)] == t1 * t2
    assert bsd.symbolic_suffix_minors(m, 3)[(2,)] == t3
    with pytest.raises(ValueError):
        bsd.symbolic_suffix_minors(Mask.parse("s1 . s1", Word(3, (1, 2, 1))))


def test_pluecker_support_matches_permutations():
    u, w = P("1324"), P("4231")
    for J in [(1,), (4,), (2, 3), (1, 4)]:
        assert bsd.pluecker_support(u, w, J) == any(
            bruhat_leq(u, v) and bruhat_leq(v, w) and set(v.prefix(len(J))) == set(J) for v in all_permutations(4))

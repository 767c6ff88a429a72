import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from positroids import exact_linalg as el
from positroids import plabic as pl
from positroids.affine_positroid import BoundedAffinePermutation, necklace_from_f, positroid_dim
from positroids.exact_linalg import Matrix

EXAMPLES = ["basic_g24", "hexagon", "doubled_g12"]


def positive(rng):
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def support(D):
    return {I: v for I, v in D.coords.items() if v}


def random_reduced_graphs(seed, count, max_edges=14):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, 7)
        G = pl.random_plabic_graph(rng, n, rng.randint(3, 12))
        if not 4 <= len(G.edges) <= max_edges or not 0 < G.k < n or pl.stray_leaves(pl.preprocess(G)):
            continue
        if pl.is_reduced(G):
            out.append(G)
    return out


REDUCED = random_reduced_graphs(11, 40)


@pytest.mark.parametrize("name", EXAMPLES)
def test_text_round_trip(name):
    G = pl.load_example(name)
    H = pl.PlabicGraph.parse(G.format())
    assert H.format() == G.format()
    assert len(H.faces) == len(G.faces)


@pytest.mark.parametrize("text", ["", "2 1\nB 1 1\nB 2 3\n", "2 1\nX a\n", "1 1\nB 1 1\n"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        pl.PlabicGraph.parse(text)


def test_basic_g24_measurement():
    G = pl.load_example("basic_g24")
    rng = random.Random(0)
    for _ in range(5):
        p, q, r, s, t, u = (positive(rng) for _ in range(6))
        D = pl.boundary_measurement(G, pl.edge_weights(G, dict(p=p, q=q, r=r, s=s, t=t, u=u)))
        assert support(D) == {(1, 2): s * t, (1, 3): p * r + q * s, (1, 4): p * u,
                            (2, 3): r * t, (2, 4): t * u, (3, 4): q * u}
        assert el.on_grassmannian(D)


def test_doubled_edge_measurement():
    G = pl.load_example("doubled_g12")
    D = pl.boundary_measurement(G, pl.edge_weights(G, dict(p=2, q=3, r=5, s=7)))
    assert support(D) == {(1,): 5, (2,): 12}
    assert not pl.is_reduced(G)
    with pytest.raises(ValueError):
        pl.trip_permutation(G)


def test_hexagon_structure():
    G = pl.load_example("hexagon")
    assert (G.n, G.k) == (6, 3)
    assert sum(1 for _ in pl.matchings(G)) == 18
    f = pl.trip_permutation(G)
    assert [f(i) - i for i in range(1, 7)] == [2, 4, 2, 4, 2, 4]
    labels = sorted("".join(map(str, I)) for I in pl.face_labels(G).values())
    assert labels == ["124", "126", "234", "246", "256", "346", "456"]


def test_single_matching_graph():
    text = "3 1\nB 1 1\nB 2 2\nB 3 3\nV a white\nE x 1 a x\nR a x\nR 1 x\n"
    G = pl.PlabicGraph.parse(text)
    D = pl.boundary_measurement(G, pl.edge_weights(G, {"x": 3}))
    assert support(D) == {(1,): 3}
    assert pl.trip_permutation(G).window == (4, 2, 3)


def test_boundary_conventions():
    G = pl.PlabicGraph.parse("2 1\nB 1 1\nB 2 2\nV a white\nE x 2 a 1\nR a x\nR 2 x\n")
    f = pl.trip_permutation(G)
    assert f(1) == 1 and f(2) == 2 + 2
    H = pl.PlabicGraph.parse("2 1\nB 1 1\nB 2 2 white\n")
    g = pl.trip_permutation(H)
    assert g(1) == 1 and g(2) == 4
    assert support(pl.boundary_measurement(H, {})) == {(2,): 1}


def test_preprocess_leaves_conforming_graphs_alone():
    G = pl.load_example("doubled_g12")
    H = pl.preprocess(G)
    assert H.is_conforming() and H.k == G.k


@pytest.mark.parametrize("name", ["basic_g24", "hexagon"])
def test_gauge_rescaling(name):
    G = pl.load_example(name)
    rng = random.Random(1)
    w = pl.edge_weights(G, rng=rng)
    D = pl.boundary_measurement(G, w)
    for v in G.interior():
        w2 = pl.rescale_at(G, w, v, positive(rng))
        assert pl.gauge_equivalent(G, w, w2)
        assert pl.boundary_measurement(G, w2).projectively_equal(D)
    fixed = pl.gauge_fix(G, w)
    assert pl.gauge_equivalent(G, w, fixed)
    assert pl.boundary_measurement(G, fixed).projectively_equal(D)
    with pytest.raises(ValueError):
        pl.rescale_at(G, w, G.boundary[0], 2)


def test_gauge_inequivalent_weights():
    G = pl.load_example("basic_g24")
    w1 = pl.edge_weights(G, dict(p=1, q=1, r=1, s=1, t=1, u=1))
    w2 = pl.edge_weights(G, dict(p=1, q=2, r=1, s=1, t=1, u=1))
    assert not pl.gauge_equivalent(G, w1, w2)


def test_gauge_fix_with_t_and_u():
    G = pl.load_example("basic_g24")
    w = pl.gauge_fix(G, pl.edge_weights(G, dict(p=2, q=3, r=5, s=7, t=11, u=13)), tree=["t", "u"])
    assert w["t"] == w["u"] == 1
    with pytest.raises(ValueError):
        pl.gauge_fix(G, w, tree=["t"])


def test_twist_of_the_hexagon_point():
    G = pl.load_example("hexagon")
    w = pl.edge_weights(G, rng=random.Random(2))
    M = el.pluecker_to_matrix(pl.boundary_measurement(G, w))
    T = pl.twist(M)
    PT = el.pluecker(T)
    assert PT[(1, 2, 3)] == PT[(3, 4, 5)] == PT[(1, 5, 6)] == 0
    assert el.positroid_envelope(T) == el.positroid_envelope(M)
    assert el.pluecker(pl.twist(pl.reverse_twist(M))).projectively_equal(el.pluecker(M))
    assert el.pluecker(pl.reverse_twist(pl.twist(M))).projectively_equal(el.pluecker(M))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_twist_covariance(seed):
    rng = random.Random(seed)
    G = pl.load_example(rng.choice(["basic_g24", "hexagon"]))
    M = el.pluecker_to_matrix(pl.boundary_measurement(G, pl.edge_weights(G, rng=rng)))
    k = M.ncols
    g = Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(k)])
    if not el.det(g):
        return
    assert pl.twist(el.mul(M, g)) == el.mul(pl.twist(M), el.inverse(g.transpose()))


def test_twist_on_the_full_grassmannian_is_inverse_transpose():
    M = Matrix.parse("2,1;1,1")
    assert pl.twist(M) == el.inverse(M.transpose())


def test_twist_rejects_zero_rows():
    with pytest.raises(ValueError):
        pl.twist(Matrix.parse("1,0;0,0;0,1"))


def test_composite_at_unit_weights():
    G = pl.load_example("hexagon")
    vals = pl.muller_speyer_composite(G, {e: 1 for e in G.edges})
    assert len(vals) == 7 and len(set(vals.values())) == 1


@pytest.mark.parametrize("idx", range(len(REDUCED)))
def test_random_reduced_graphs(idx):
    G = REDUCED[idx]
    rng = random.Random(idx)
    f = pl.trip_permutation(G)
    assert len(pl.faces(G)) == positroid_dim(f) + 1
    w = pl.edge_weights(G, rng=rng)
    D = pl.boundary_measurement(G, w)
    assert el.on_grassmannian(D)
    assert all(v > 0 for v in D.coords.values() if v)
    assert el.positroid_envelope(el.pluecker_to_matrix(D)) == f
    labels = pl.face_labels(G)
    H = pl.preprocess(G)
    neck = necklace_from_f(f)
    assert [labels[H.boundary_face(i)] for i in range(1, G.n + 1)] == [tuple(I) for I in neck]


def test_random_graphs_validate():
    rng = random.Random(5)
    for _ in range(40):
        G = pl.random_plabic_graph(rng, rng.randint(1, 6), rng.randint(0, 12))
        H = pl.PlabicGraph.parse(G.format())
        assert H.format() == G.format()


def test_trip_window_is_bounded():
    for G in REDUCED[:10]:
        assert isinstance(pl.trip_permutation(G), BoundedAffinePermutation)

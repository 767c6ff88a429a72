"""Plabic graphs as combinatorial maps in a disc.

A graph has n boundary vertices numbered clockwise and colored interior
vertices.  The embedding is a rotation system: at every vertex the incident
edges are listed clockwise, and at a boundary vertex the list starts just
clockwise of the disc boundary.  Faces come from tracing the map together
with the boundary arcs, so no coordinates are ever used.

>>> G = load_example("basic_g24")
>>> G.n, G.k, len(faces(G)), is_reduced(G)
(4, 2, 5, True)
>>> str(trip_permutation(G))
'[3,4,5,6]'
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from importlib import resources
from itertools import combinations
from typing import Any, Iterator, Mapping, Sequence

from .affine_positroid import (
    BoundedAffinePermutation,
    necklace_from_f,
    positroid_dim,
    reverse_necklace_from_f,
)
from .exact_linalg import Matrix, PlueckerVector, pluecker, pluecker_to_matrix, positroid_envelope, rank, solve

BLACK, WHITE = "black", "white"
COLORS = (BLACK, WHITE)

Dart = tuple  # (edge id, side); side 0 runs from ends[0] to ends[1]
Face = tuple  # darts in boundary order, face on the left


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[str, str]
    label: str = "1"


@dataclass(frozen=True, eq=False)
class PlabicGraph:
    """Boundary vertex ``boundary[i-1]`` sits at position i; every vertex has a color."""

    n: int
    boundary: tuple[str, ...]
    colors: Mapping[str, str]
    edges: Mapping[str, Edge]
    rotation: Mapping[str, tuple[str, ...]]

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(self.boundary))
        object.__setattr__(self, "colors", dict(self.colors))
        object.__setattr__(self, "edges", dict(self.edges))
        rot = {v: tuple(self.rotation.get(v, ())) for v in self.colors}
        object.__setattr__(self, "rotation", rot)
        self._validate()

    # -------------------------------------------------------------- structure

    def _validate(self):
        if len(self.boundary) != self.n or len(set(self.boundary)) != self.n:
            raise ValueError("need n distinct boundary vertices")
        for v, c in self.colors.items():
            if c not in COLORS:
                raise ValueError(f"bad color {c!r} for {v}")
        if not set(self.boundary) <= set(self.colors):
            raise ValueError("boundary vertices need colors")
        incident: dict[str, list[str]] = {v: [] for v in self.colors}
        for eid, e in self.edges.items():
            a, b = e.ends
            if eid != e.id:
                raise ValueError(f"edge key {eid} does not match id {e.id}")
            if a not in incident or b not in incident:
                raise ValueError(f"edge {eid} has an unknown endpoint")
            if a == b:
                raise ValueError(f"edge {eid} is a loop")
            if self.colors[a] == self.colors[b]:
                raise ValueError(f"edge {eid} joins two {self.colors[a]} vertices")
            incident[a].append(eid)
            incident[b].append(eid)
        for v, es in incident.items():
            if sorted(self.rotation[v]) != sorted(es):
                raise ValueError(f"rotation at {v} must list its incident edges exactly once")
        seen = set(self.boundary)
        stack = list(self.boundary)
        while stack:
            v = stack.pop()
            for eid in self.rotation[v]:
                u = self.other(eid, v)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if seen != set(self.colors):
            raise ValueError("every interior vertex must be connected to the boundary")
        V, E = len(self.colors), len(self.edges) + self.n
        if self.n and V - E + len(self.faces) != 1:
            raise ValueError("rotation system is not a planar embedding in a disc")

    def other(self, eid: str, v: str) -> str:
        a, b = self.edges[eid].ends
        return b if v == a else a

    def is_boundary(self, v: str) -> bool:
        return v in self._position

    @cached_property
    def _position(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.boundary, start=1)}

    def position(self, v: str) -> int:
        return self._position[v]

    def interior(self) -> list[str]:
        return [v for v in self.colors if v not in self._position]

    def degree(self, v: str) -> int:
        return len(self.rotation[v])

    @property
    def k(self) -> int:
        """#white interior - #black interior + #white boundary."""
        inner = self.interior()
        w = sum(1 for v in inner if self.colors[v] == WHITE)
        b = len(inner) - w
        return w - b + sum(1 for v in self.boundary if self.colors[v] == WHITE)

    def is_conforming(self) -> bool:
        """All boundary vertices black of degree at most 1."""
        return all(self.colors[v] == BLACK and self.degree(v) <= 1 for v in self.boundary)

    # -------------------------------------------------------------- darts and faces

    def head(self, d: Dart) -> str:
        eid, s = d
        a, b = self._ends(eid)
        return b if s == 0 else a

    def tail(self, d: Dart) -> str:
        eid, s = d
        a, b = self._ends(eid)
        return a if s == 0 else b

    def _ends(self, eid) -> tuple[str, str]:
        if isinstance(eid, tuple):
            j = eid[1]
            return self.boundary[j - 1], self.boundary[j % self.n]
        return self.edges[eid].ends

    def dart(self, eid: str, tail: str) -> Dart:
        return (eid, 0 if self.edges[eid].ends[0] == tail else 1)

    @cached_property
    def _full_rotation(self) -> dict[str, list[Dart]]:
        """Clockwise darts at each vertex, boundary arcs included."""
        full = {}
        for v, es in self.rotation.items():
            darts = [self.dart(e, v) for e in es]
            if self.is_boundary(v):
                i = self.position(v)
                prev = i - 1 if i > 1 else self.n
                darts = [(("arc", i), 0)] + darts + [(("arc", prev), 1)]
            full[v] = darts
        return full

    @cached_property
    def _corner_index(self) -> dict[Dart, tuple[str, int]]:
        return {d: (v, j) for v, ds in self._full_rotation.items() for j, d in enumerate(ds)}

    def _next_cw(self, d: Dart) -> Dart:
        v, j = self._corner_index[d]
        ds = self._full_rotation[v]
        return ds[(j + 1) % len(ds)]

    def left_step(self, d: Dart) -> Dart:
        """The dart after d on the face to the left of d."""
        return self._next_cw((d[0], 1 - d[1]))

    @cached_property
    def faces(self) -> list[Face]:
        """Faces inside the disc, each the cycle of darts having it on the left."""
        out, seen = [], set()
        outer = self._face_walk((("arc", 1), 0)) if self.n else ()
        seen.update(outer)
        for ds in self._full_rotation.values():
            for d in ds:
                if d not in seen:
                    f = self._face_walk(d)
                    seen.update(f)
                    out.append(f)
        return out

    def _face_walk(self, d: Dart) -> Face:
        walk = [d]
        x = self.left_step(d)
        while x != d:
            walk.append(x)
            x = self.left_step(x)
        return tuple(walk)

    @cached_property
    def face_of(self) -> dict[Dart, int]:
        return {d: i for i, f in enumerate(self.faces) for d in f}

    def boundary_face(self, i: int) -> int:
        """Index of the face between boundary positions i-1 and i."""
        prev = i - 1 if i > 1 else self.n
        return self.face_of[(("arc", prev), 1)]

    # -------------------------------------------------------------- text format

    def format(self) -> str:
        lines = [f"{self.n} {self.k}"]
        for i, v in enumerate(self.boundary, start=1):
            lines.append(f"B {v} {i}" + (" white" if self.colors[v] == WHITE else ""))
        for v in self.interior():
            lines.append(f"V {v} {self.colors[v]}")
        for e in self.edges.values():
            lines.append(f"E {e.id} {e.ends[0]} {e.ends[1]} {e.label}")
        for v, es in self.rotation.items():
            if es:
                lines.append(f"R {v} " + " ".join(es))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "PlabicGraph":
        """Read the line format ``n k`` / ``B id pos [color]`` / ``V id color`` / ``E id v1 v2 weight`` / ``R v e...``."""
        header = None
        bpos, colors, edges, rotation = {}, {}, {}, {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if header is None:
                header = (int(line[0]), int(line[1]))
                continue
            tag, *rest = line
            if tag == "B":
                bpos[int(rest[1])] = rest[0]
                colors[rest[0]] = rest[2] if len(rest) > 2 else BLACK
            elif tag == "V":
                colors[rest[0]] = rest[1]
            elif tag == "E":
                edges[rest[0]] = Edge(rest[0], (rest[1], rest[2]), rest[3] if len(rest) > 3 else "1")
            elif tag == "R":
                rotation[rest[0]] = tuple(rest[1:])
            else:
                raise ValueError(f"unknown line {raw!r}")
        if header is None:
            raise ValueError("missing header")
        n, k = header
        if sorted(bpos) != list(range(1, n + 1)):
            raise ValueError("boundary positions must be 1..n")
        G = cls(n, tuple(bpos[i] for i in range(1, n + 1)), colors, edges, rotation)
        if G.k != k:
            raise ValueError(f"header k={k} but the graph has k={G.k}")
        return G


def load_example(name: str) -> PlabicGraph:
    """A shipped example: basic_g24, hexagon or doubled_g12."""
    return PlabicGraph.parse(resources.files("positroids").joinpath("data", f"{name}.pg").read_text())


# ------------------------------------------------------------------ preprocessing


def preprocess(G: PlabicGraph) -> PlabicGraph:
    """Make every boundary vertex black of degree at most 1, adding unit-weight pendant edges.

    A white boundary vertex v moves inside and gets a new black boundary
    neighbor; a black boundary vertex of degree >= 2 moves inside behind a
    new white vertex and a new black boundary vertex.

    >>> H = preprocess(load_example("basic_g24"))
    >>> H.is_conforming(), len(H.colors), H.k
    (True, 10, 2)
    """
    if G.is_conforming():
        return G
    boundary = list(G.boundary)
    colors = dict(G.colors)
    edges = dict(G.edges)
    rotation = {v: list(es) for v, es in G.rotation.items()}
    for i, v in enumerate(G.boundary):
        if colors[v] == BLACK and G.degree(v) <= 1:
            continue
        b = f"{v}~b"
        if colors[v] == WHITE:
            e = f"{v}~e"
            edges[e] = Edge(e, (b, v), "1")
            rotation[v].append(e)
            rotation[b] = [e]
        else:
            w, e1, e2 = f"{v}~w", f"{v}~e1", f"{v}~e2"
            colors[w] = WHITE
            edges[e1] = Edge(e1, (w, v), "1")
            edges[e2] = Edge(e2, (b, w), "1")
            rotation[v].insert(0, e1)
            rotation[w] = [e1, e2]
            rotation[b] = [e2]
        colors[b] = BLACK
        boundary[i] = b
    return PlabicGraph(G.n, tuple(boundary), colors, edges, {v: tuple(es) for v, es in rotation.items()})


def stray_leaves(G: PlabicGraph) -> list[str]:
    """Interior vertices of degree 1 whose neighbor is interior."""
    return [v for v in G.interior() if G.degree(v) == 1 and not G.is_boundary(G.other(G.rotation[v][0], v))]


# ------------------------------------------------------------------ weights and matchings


def parse_scalar(text: str):
    try:
        return Fraction(text)
    except ValueError:
        return None


def edge_weights(G: PlabicGraph, values: Mapping[str, Any] | None = None, rng: random.Random | None = None,
                 bound: int = 9) -> dict[str, Any]:
    """Weights from edge labels: numbers as given, names from ``values`` or random positive rationals.

    >>> w = edge_weights(load_example("basic_g24"), {"p": 1, "q": 2, "r": 3, "s": 4, "t": 5, "u": 6})
    >>> w["q"], w["u"]
    (2, 6)
    """
    values = dict(values or {})
    drawn: dict[str, Any] = {}
    out = {}
    for eid, e in G.edges.items():
        x = parse_scalar(e.label)
        if x is None:
            if e.label in values:
                x = values[e.label]
            elif rng is not None:
                if e.label not in drawn:
                    drawn[e.label] = Fraction(rng.randint(1, bound), rng.randint(1, bound))
                x = drawn[e.label]
            else:
                raise KeyError(f"no value for edge weight {e.label!r}")
        if x == 0:
            raise ValueError(f"edge {eid} has weight zero")
        out[eid] = x
    return out


def _extend_weights(G: PlabicGraph, H: PlabicGraph, w: Mapping[str, Any]) -> dict[str, Any]:
    missing = set(G.edges) - set(w)
    if missing:
        raise KeyError(f"missing weights for {sorted(missing)}")
    if any(w[e] == 0 for e in G.edges):
        raise ValueError("edge weights must be nonzero")
    return {e: (w[e] if e in G.edges else 1) for e in H.edges}


def matchings(G: PlabicGraph) -> Iterator[frozenset[str]]:
    """Edge sets covering every interior vertex once and each boundary vertex at most once.

    >>> sum(1 for _ in matchings(load_example("hexagon")))
    18
    """
    inner = G.interior()
    adj = {v: [(e, G.other(e, v)) for e in G.rotation[v]] for v in inner}
    used: set[str] = set()
    chosen: list[str] = []

    def rec() -> Iterator[frozenset[str]]:
        best, best_opts = None, None
        for v in inner:
            if v in used:
                continue
            opts = [(e, u) for e, u in adj[v] if u not in used]
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
                if not opts:
                    return
        if best is None:
            yield frozenset(chosen)
            return
        used.add(best)
        for e, u in best_opts:
            used.add(u)
            chosen.append(e)
            yield from rec()
            chosen.pop()
            used.discard(u)
        used.discard(best)

    yield from rec()


def matching_boundary(G: PlabicGraph, M: frozenset[str]) -> tuple[int, ...]:
    """Uncovered white boundary positions together with covered black ones."""
    covered = {v for e in M for v in G.edges[e].ends}
    return tuple(i for i, v in enumerate(G.boundary, start=1) if (v in covered) == (G.colors[v] == BLACK))


def boundary_measurement(G: PlabicGraph, w: Mapping[str, Any]) -> PlueckerVector:
    """D_I = sum of w(M) over perfect matchings M with boundary I.

    >>> G = load_example("basic_g24")
    >>> D = boundary_measurement(G, edge_weights(G, {"p": 1, "q": 2, "r": 3, "s": 4, "t": 5, "u": 6}))
    >>> D[(1, 3)], D[(2, 4)]
    (11, 30)
    """
    H = preprocess(G)
    wh = _extend_weights(G, H, w)
    coords: dict[tuple[int, ...], Any] = {}
    found = False
    for M in matchings(H):
        found = True
        I = matching_boundary(H, M)
        term = 1
        for e in sorted(M):
            term = term * wh[e]
        coords[I] = coords.get(I, 0) + term
    if not found:
        raise ValueError("graph has no perfect matching")
    if any(len(I) != H.k for I in coords):
        raise AssertionError("matching boundary size differs from k")
    return PlueckerVector(G.n, G.k, coords)


# ------------------------------------------------------------------ trips


@dataclass(frozen=True)
class Trip:
    """A zig-zag path as a dart sequence; start and end are boundary positions, or None if closed."""

    darts: tuple[Dart, ...]
    start: int | None
    end: int | None

    @property
    def closed(self) -> bool:
        return self.start is None

    def edge_ids(self) -> list[str]:
        return [d[0] for d in self.darts]


def _turn(G: PlabicGraph, d: Dart) -> Dart:
    v = G.head(d)
    es = G.rotation[v]
    j = es.index(d[0])
    nxt = es[(j + 1) % len(es)] if G.colors[v] == WHITE else es[(j - 1) % len(es)]
    return G.dart(nxt, v)


def trips(G: PlabicGraph) -> list[Trip]:
    """All zig-zag paths of preprocess(G): boundary trips by start position, then closed ones.

    >>> [(t.start, t.end) for t in trips(load_example("hexagon"))]
    [(1, 3), (2, 6), (3, 5), (4, 2), (5, 1), (6, 4)]
    """
    H = preprocess(G)
    out, covered = [], set()
    for i, v in enumerate(H.boundary, start=1):
        if H.degree(v) == 0:
            out.append(Trip((), i, i))
            continue
        d = H.dart(H.rotation[v][0], v)
        path = [d]
        while not H.is_boundary(H.head(d)):
            d = _turn(H, d)
            path.append(d)
        covered.update(path)
        out.append(Trip(tuple(path), i, H.position(H.head(d))))
    for eid in H.edges:
        for s in (0, 1):
            d0 = (eid, s)
            if d0 in covered:
                continue
            path, d = [d0], _turn(H, d0)
            while d != d0:
                path.append(d)
                d = _turn(H, d)
            covered.update(path)
            out.append(Trip(tuple(path), None, None))
    return out


def _lollipop(H: PlabicGraph, i: int) -> bool:
    v = H.boundary[i - 1]
    if H.degree(v) == 0:
        return True
    u = H.other(H.rotation[v][0], v)
    return not H.is_boundary(u) and H.degree(u) == 1


def reduced_conditions(G: PlabicGraph) -> dict[str, bool]:
    """The four zig-zag conditions, evaluated on preprocess(G)."""
    H = preprocess(G)
    if stray_leaves(H):
        raise ValueError("graph has interior leaves away from the boundary; remove them first")
    ts = trips(H)
    no_loops = all(not t.closed for t in ts)
    simple = all(len(set(t.edge_ids())) == len(t.darts) for t in ts if t.closed or t.start != t.end)
    first = []
    for t in ts:
        pos: dict[str, int] = {}
        for j, e in enumerate(t.edge_ids()):
            pos.setdefault(e, j)
        first.append(pos)
    opposite = True
    for a, b in combinations(range(len(ts)), 2):
        common = set(first[a]) & set(first[b])
        if len(common) < 2:
            continue
        order_a = sorted(common, key=first[a].get)
        order_b = sorted(common, key=first[b].get)
        if order_a != order_b[::-1]:
            opposite = False
            break
    self_loops = all(t.closed or t.start != t.end or _lollipop(H, t.start) for t in ts)
    return {"no_closed_trips": no_loops, "no_repeated_edges": simple, "opposite_crossings": opposite,
            "loops_are_lollipops": self_loops}


def _trip_window(H: PlabicGraph, ts: Sequence[Trip]) -> BoundedAffinePermutation:
    n = H.n
    window = []
    for t in ts[:n]:
        i, j = t.start, t.end
        if j == i:
            window.append(i if H.degree(H.boundary[i - 1]) == 0 else i + n)
        else:
            window.append(j if j > i else j + n)
    return BoundedAffinePermutation(tuple(window))


def is_reduced(G: PlabicGraph) -> bool:
    """Zig-zag criterion, cross-checked against #faces = dim + 1 whenever it holds.

    >>> is_reduced(load_example("hexagon")), is_reduced(load_example("doubled_g12"))
    (True, False)
    """
    if not all(reduced_conditions(G).values()):
        return False
    H = preprocess(G)
    f = _trip_window(H, trips(H))
    if len(H.faces) != positroid_dim(f) + 1:
        raise AssertionError("zig-zag criterion and face count disagree")
    return True


def trip_permutation(G: PlabicGraph) -> BoundedAffinePermutation:
    """f(i) = end of the trip from i, lifted to i <= f(i) <= i + n; reduced graphs only.

    >>> str(trip_permutation(load_example("hexagon")))
    '[3,6,5,8,7,10]'
    """
    if not is_reduced(G):
        raise ValueError("trip permutation is only defined here for reduced graphs")
    H = preprocess(G)
    return _trip_window(H, trips(H))


def faces(G: PlabicGraph) -> list[Face]:
    """Faces of preprocess(G); the same count as for G."""
    return preprocess(G).faces


# ------------------------------------------------------------------ face labels


def face_labels(G: PlabicGraph) -> dict[int, tuple[int, ...]]:
    """Target labels on faces of preprocess(G): i in I(F) iff F is left of the trip ending at i.

    >>> sorted("".join(map(str, I)) for I in face_labels(load_example("hexagon")).values())
    ['124', '126', '234', '246', '256', '346', '456']
    """
    f = trip_permutation(G)
    H = preprocess(G)
    n = H.n
    ts = trips(H)
    labels: dict[int, set[int]] = {x: set() for x in range(len(H.faces))}
    for t in ts[:n]:
        if t.start == t.end:
            if f(t.start) == t.start + n:
                for x in labels:
                    labels[x].add(t.end)
            continue
        on_trip = {d[0] for d in t.darts}
        left = {H.face_of[d] for d in t.darts}
        right = {H.face_of[(d[0], 1 - d[1])] for d in t.darts}
        stack = list(left)
        while stack:
            x = stack.pop()
            for d in H.faces[x]:
                if isinstance(d[0], tuple) or d[0] in on_trip:
                    continue
                y = H.face_of[(d[0], 1 - d[1])]
                if y not in left:
                    left.add(y)
                    stack.append(y)
        if left & right:
            raise AssertionError("a trip does not separate the disc")
        for x in left:
            labels[x].add(t.end)
    out = {x: tuple(sorted(s)) for x, s in labels.items()}
    neck = necklace_from_f(f)
    for i in range(1, n + 1):
        if out[H.boundary_face(i)] != tuple(neck[i - 1]):
            raise AssertionError("boundary face labels differ from the Grassmann necklace")
    if len(set(out.values())) != len(out) or len(out) != positroid_dim(f) + 1:
        raise AssertionError("face labels are not distinct or have the wrong count")
    return out


# ------------------------------------------------------------------ gauge


def _gauge_tree(G: PlabicGraph, tree: Sequence[str] | None) -> list[tuple[str | None, str, str | None]]:
    """(edge, child, parent) triples in search order; boundary vertices are merged into one root."""
    root = "~boundary"
    chosen = sorted(G.edges) if tree is None else list(tree)
    if not set(chosen) <= set(G.edges):
        raise KeyError("unknown tree edges")

    def node(v):
        return root if G.is_boundary(v) else v

    adj: dict[str, list[tuple[str, str]]] = {}
    for eid in chosen:
        a, b = (node(x) for x in G.edges[eid].ends)
        adj.setdefault(a, []).append((eid, b))
        adj.setdefault(b, []).append((eid, a))
    order: list[tuple[str | None, str, str | None]] = []
    seen = set()
    for start in [root] + sorted(G.interior()):
        if start in seen:
            continue
        seen.add(start)
        order.append((None, start, None))
        stack = [start]
        while stack:
            x = stack.pop()
            for eid, y in adj.get(x, []):
                if y not in seen:
                    seen.add(y)
                    order.append((eid, y, x))
                    stack.append(y)
    if tree is not None:
        if len([o for o in order if o[0] is not None]) != len(set(chosen)):
            raise ValueError("tree edges contain a cycle")
        if any(o[0] is None and o[1] != root for o in order):
            raise ValueError("tree does not reach every interior vertex")
    return order


def gauge_fix(G: PlabicGraph, w: Mapping[str, Any], tree: Sequence[str] | None = None) -> dict[str, Any]:
    """Rescale at interior vertices so the edges of a spanning forest get weight 1.

    The forest lives on interior vertices with all boundary vertices merged
    into one root; by default a search tree in sorted edge order.

    >>> G = load_example("basic_g24")
    >>> w = gauge_fix(G, edge_weights(G, {"p": 2, "q": 3, "r": 5, "s": 7, "t": 2, "u": 5}), tree=["t", "u"])
    >>> [str(w[e]) for e in "pqrstu"]
    ['1', '3/2', '1', '7/5', '1', '1']
    """
    t: dict[str, Any] = {"~boundary": 1}
    for eid, child, parent in _gauge_tree(G, tree):
        t[child] = 1 if eid is None else 1 / (Fraction(1) * t[parent] * w[eid])

    def scale(v):
        return 1 if G.is_boundary(v) else t[v]

    return {eid: scale(e.ends[0]) * scale(e.ends[1]) * w[eid] for eid, e in G.edges.items()}


def gauge_equivalent(G: PlabicGraph, w1: Mapping[str, Any], w2: Mapping[str, Any]) -> bool:
    """Whether w2(e) = t(v) t(u) w1(e) for some nonzero t on interior vertices."""
    return gauge_fix(G, w1) == gauge_fix(G, w2)


def rescale_at(G: PlabicGraph, w: Mapping[str, Any], v: str, c) -> dict[str, Any]:
    """Multiply the weights of all edges at interior vertex v by c."""
    if G.is_boundary(v):
        raise ValueError("gauge acts on interior vertices only")
    return {eid: (w[eid] * c if v in G.edges[eid].ends else w[eid]) for eid in G.edges}


# ------------------------------------------------------------------ twist


def _twist_with(M: Matrix, neck) -> Matrix:
    n, k = M.shape
    if rank(M) != k:
        raise ValueError("twist needs a full-rank n x k matrix")
    rows = []
    for i in range(1, n + 1):
        if all(x == 0 for x in M.row(i)):
            raise ValueError(f"row {i} is zero")
        I = neck[i - 1]
        if i not in I:
            raise AssertionError("necklace entry misses its own index")
        A = Matrix([M.row(j) for j in I])
        rows.append(solve(A, [1 if j == i else 0 for j in I]))
    return Matrix(rows)


def twist(M: Matrix) -> Matrix:
    """Row i solves w . v_i = 1 and w . v_j = 0 for the other j in the necklace entry I_i.

    >>> print(twist(Matrix.parse("1,0;1,1;0,1")))
    1,-1;1,0;0,1
    """
    return _twist_with(M, necklace_from_f(positroid_envelope(M)))


def reverse_twist(M: Matrix) -> Matrix:
    """The same construction with the reverse Grassmann necklace."""
    return _twist_with(M, reverse_necklace_from_f(positroid_envelope(M)))


def muller_speyer_composite(G: PlabicGraph, w: Mapping[str, Any]) -> dict[tuple[int, ...], Any]:
    """Pluecker coordinates of the twisted boundary-measurement point at the face labels."""
    labels = face_labels(G)
    D = boundary_measurement(G, w)
    P = pluecker(twist(pluecker_to_matrix(D)))
    out = {I: P[I] for I in labels.values()}
    if any(v == 0 for v in out.values()):
        raise ValueError("a face Pluecker coordinate vanishes; weights are not generic")
    return out


# ------------------------------------------------------------------ random graphs


def random_plabic_graph(rng: random.Random, n: int, steps: int) -> PlabicGraph:
    """Grow a planar bicolored graph by adding pendant edges and chords inside faces.

    Every step keeps the map planar, so the result always validates; edge
    labels are distinct names, to be given random weights.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    boundary = tuple(f"b{i}" for i in range(1, n + 1))
    colors = {v: BLACK for v in boundary}
    ends: dict[str, tuple[str, str]] = {}
    full: dict[str, list[Dart]] = {}
    for i, v in enumerate(boundary, start=1):
        full[v] = [(("arc", i), 0), (("arc", i - 1 if i > 1 else n), 1)]
    counter = [0, 0]

    def head(d):
        eid, s = d
        if isinstance(eid, tuple):
            j = eid[1]
            a, b = boundary[j - 1], boundary[j % n]
        else:
            a, b = ends[eid]
        return b if s == 0 else a

    def rev(d):
        return (d[0], 1 - d[1])

    def step(d):
        v = head(d)
        ds = full[v]
        return ds[(ds.index(rev(d)) + 1) % len(ds)]

    def new_vertex(color):
        counter[0] += 1
        v = f"v{counter[0]}"
        colors[v] = color
        full[v] = []
        return v

    def new_edge(a, b):
        counter[1] += 1
        eid = f"e{counter[1]}"
        ends[eid] = (a, b)
        return eid

    def insert_after(v, anchor, d):
        ds = full[v]
        ds.insert(ds.index(anchor) + 1, d)

    def other(c):
        return WHITE if c == BLACK else BLACK

    for _ in range(steps):
        seen, inner_faces = set(), []
        outer = []
        d = (("arc", 1), 0)
        while d not in outer:
            outer.append(d)
            d = step(d)
        seen.update(outer)
        for ds in full.values():
            for d in ds:
                if d not in seen:
                    walk, x = [d], step(d)
                    while x != d:
                        walk.append(x)
                        x = step(x)
                    seen.update(walk)
                    inner_faces.append(walk)
        face = rng.choice(inner_faces)
        c1 = rng.choice(face)
        u = head(c1)
        others = [c for c in face if head(c) != u]
        if not others or rng.random() < 0.3:
            x = new_vertex(other(colors[u]))
            e = new_edge(u, x)
            insert_after(u, rev(c1), (e, 0))
            full[x].append((e, 1))
            continue
        c2 = rng.choice(others)
        v = head(c2)
        if colors[u] != colors[v]:
            mids = 0 if rng.random() < 0.6 else 2
        else:
            mids = 1
        path = [u]
        for j in range(mids):
            path.append(new_vertex(other(colors[path[-1]])))
        path.append(v)
        es = [new_edge(a, b) for a, b in zip(path, path[1:])]
        insert_after(u, rev(c1), (es[0], 0))
        for j, x in enumerate(path[1:-1]):
            full[x].extend([(es[j], 1), (es[j + 1], 0)])
        insert_after(v, rev(c2), (es[-1], 1))
    rotation = {}
    for v, ds in full.items():
        es = [d[0] for d in ds if not isinstance(d[0], tuple)]
        if v in boundary:
            i = boundary.index(v) + 1
            j = ds.index((("arc", i), 0))
            es = [d[0] for d in ds[j + 1:] + ds[:j] if not isinstance(d[0], tuple)]
        rotation[v] = tuple(es)
    edges = {eid: Edge(eid, ab, f"w{eid[1:]}") for eid, ab in ends.items()}
    return PlabicGraph(n, boundary, colors, edges, rotation)


__all__ = [
    "BLACK", "WHITE", "Edge", "PlabicGraph", "load_example", "preprocess", "stray_leaves", "parse_scalar",
    "edge_weights", "matchings", "matching_boundary", "boundary_measurement", "Trip", "trips",
    "reduced_conditions", "is_reduced", "trip_permutation", "faces", "face_labels", "gauge_fix",
    "gauge_equivalent", "rescale_at", "twist", "reverse_twist", "muller_speyer_composite",
    "random_plabic_graph",
]

"""Command line entry point: conversions, single computations and verification suites.

Every check prints ``CHECK <anchor> PASS|FAIL`` and a run ends with one
summary line ``SUMMARY {"checks": ..., "failed": ..., "passed": ...}``.
The exit code is 0 exactly when no check failed, 2 on invalid input.

>>> main(["convert", "--pair", "2143", "3412", "2"])
pair: 2143 3412 k=2
window: [4,3,6,5]
necklace: 12|24|34|24
decorated: 4 3 2 1
dim: 2
cyclic rank matrix:
1: 0 1 2 2 2
2: 0 1 1 2 2
3: 0 1 2 2 2
4: 0 1 1 2 2
0
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import affine_positroid as ap
from . import bott_samelson_deodhar as bsd
from . import exact_linalg as el
from . import gt_degen as gt
from . import plabic as pl
from . import symfunc as sf
from . import tableaux_smt as smt
from .perm_core import Permutation, Word, all_permutations, bruhat_leq, length, reduced_words


class InputError(Exception):
    pass


class Report:
    """Collects CHECK lines; ``summary`` prints the final machine-readable line."""

    def __init__(self, out=None):
        self.out = out or sys.stdout
        self.passed = 0
        self.failed = 0

    def line(self, text: str = ""):
        print(text, file=self.out)

    def check(self, anchor: str, ok: bool, detail: str = "") -> bool:
        ok = bool(ok)
        self.passed += ok
        self.failed += not ok
        self.line(f"CHECK {anchor} {'PASS' if ok else 'FAIL'}" + (f" {detail}" if detail else ""))
        return ok

    def guarded(self, anchor: str, fn: Callable[[], bool], detail: str = "") -> bool:
        try:
            return self.check(anchor, fn(), detail)
        except (ValueError, ArithmeticError, AssertionError) as exc:
            return self.check(anchor, False, f"{type(exc).__name__}: {exc}")

    def summary(self) -> int:
        total = self.passed + self.failed
        self.line("SUMMARY " + json.dumps({"checks": total, "failed": self.failed, "passed": self.passed},
                                          sort_keys=True))
        return 0 if self.failed == 0 else 1


# ------------------------------------------------------------------ parsing helpers


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise InputError(f"bad permutation {text!r}: {exc}") from None


def _bounded(text: str) -> ap.BoundedAffinePermutation:
    try:
        return ap.BoundedAffinePermutation.parse(text)
    except ValueError as exc:
        raise InputError(f"bad bounded affine permutation {text!r}: {exc}") from None


def _matrix(text: str, field: el.Field) -> el.Matrix:
    try:
        return el.Matrix.parse(text, field)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad matrix {text!r}: {exc}") from None


def _graph(name: str) -> pl.PlabicGraph:
    path = Path(name)
    try:
        if path.exists():
            return pl.PlabicGraph.parse(path.read_text())
        return pl.load_example(name.removesuffix(".pg"))
    except FileNotFoundError:
        raise InputError(f"no plabic graph file or example named {name!r}") from None
    except (ValueError, KeyError, IndexError) as exc:
        raise InputError(f"{name}: {exc}") from None


def _weights(G: pl.PlabicGraph, text: str | None, field: el.Field, rng: random.Random) -> dict:
    values = {}
    for item in (text or "").replace(";", ",").split(","):
        if item.strip():
            name, _, val = item.partition("=")
            values[name.strip()] = field(Fraction(val.strip()))
    if not field.is_rational:
        for e in G.edges.values():
            if pl.parse_scalar(e.label) is None and e.label not in values:
                values[e.label] = field.random(rng, nonzero=True)
    try:
        w = pl.edge_weights(G, values, rng=rng)
        return {e: field(x) for e, x in w.items()}
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad weights: {exc}") from None


def _fmt(x) -> str:
    return str(x)


# ------------------------------------------------------------------ convert


def run_convert(args, rep: Report) -> int:
    try:
        if args.pair:
            u, w, k = _perm(args.pair[0]), _perm(args.pair[1]), int(args.pair[2])
            f = ap.from_pair(u, w, k)
        elif args.window:
            f = _bounded(args.window[0])
            if len(args.window) > 1 and int(args.window[1]) != f.k:
                raise InputError(f"window has k={f.k}, not {args.window[1]}")
        elif args.necklace:
            f = ap.f_from_necklace(ap.parse_necklace(args.necklace))
        else:
            f = ap.f_from_decorated(ap.DecoratedPermutation.parse(args.decorated), args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    u, w = ap.pair_from_f(f)
    rep.line(f"pair: {u} {w} k={f.k}")
    rep.line(f"window: {ap.format_window(f.window)}")
    rep.line(f"necklace: {ap.format_necklace(ap.necklace_from_f(f))}")
    rep.line(f"decorated: {ap.decorated_from_f(f)}")
    rep.line(f"dim: {ap.positroid_dim(f)}")
    rep.line("cyclic rank matrix:")
    rep.line(ap.cyclic_rank_matrix(f).format())
    return 0


# ------------------------------------------------------------------ class


def run_class(args, rep: Report) -> int:
    f = _bounded(args.window)
    u, w = ap.pair_from_f(f)
    cls = sf.positroid_class(f)
    d = ap.positroid_dim(f)
    rep.line(f"class: {sf.format_basis(cls) or '0'}")
    bs = sf.bergeron_sottile(u, w, f.k, max(d, 1)).schur()
    rep.line(f"bergeron-sottile: {sf.format_basis(bs) or '0'}")
    rep.check("class.duality", sf.duality_check(f))
    return rep.summary()


# ------------------------------------------------------------------ rpoly


def run_rpoly(args, rep: Report) -> int:
    u, w = _perm(args.u), _perm(args.w)
    if u.n != w.n:
        raise InputError("u and w must have the same size")
    word = Word.parse(args.word, w.n) if args.word else None
    try:
        R = bsd.r_polynomial(u, w, word)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rep.line(f"R: {R}")
    for q in _qs(args.q):
        _check_work(u.n, q, args.max_work)
        count = bsd.count_open_richardson_bruteforce(u, w, el.Field(q))
        rep.check(f"rpoly.count.q{q}", R(q) == count, f"R({q})={R(q)} flags={count}")
    return rep.summary()


def _check_work(n: int, q: int, max_work: int):
    flags = 1
    for i in range(1, n + 1):
        flags *= (q ** i - 1) // (q - 1)
    if flags > max_work:
        raise InputError(f"{flags} flags over F_{q} exceed --max-work {max_work}")


def _qs(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        qs = [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"bad prime list {text!r}") from None
    for q in qs:
        el.Field(q)
    return qs


# ------------------------------------------------------------------ plabic


def run_plabic(args, rep: Report) -> int:
    G = _graph(args.file)
    rng = random.Random(args.seed)
    if args.action == "check":
        _plabic_checks(G, args, rep, rng)
        return rep.summary()
    if args.action == "measure":
        D = pl.boundary_measurement(G, _weights(G, args.weights, args.field, rng))
        for I, v in D.items():
            rep.line(f"D{''.join(map(str, I)) if G.n < 10 else ','.join(map(str, I))} {_fmt(v)}")
        return 0
    if args.action == "trips":
        for t in pl.trips(G):
            rep.line("closed" if t.closed else f"{t.start} -> {t.end}")
        if pl.is_reduced(G):
            rep.line(f"f: {ap.format_window(pl.trip_permutation(G).window)}")
        else:
            rep.line("not reduced")
        return 0
    if args.action == "labels":
        if not pl.is_reduced(G):
            raise InputError("face labels need a reduced graph")
        for I in sorted(pl.face_labels(G).values()):
            rep.line("".join(map(str, I)) if G.n < 10 else ",".join(map(str, I)))
        return 0
    # twist
    D = pl.boundary_measurement(G, _weights(G, args.weights, args.field, rng))
    M = el.pluecker_to_matrix(D)
    rep.line("point:")
    rep.line(el.format_matrix(M))
    rep.line("twist:")
    rep.line(el.format_matrix(pl.twist(M)))
    return 0


def _plabic_checks(G: pl.PlabicGraph, args, rep: Report, rng: random.Random):
    rep.check("plabic.embedding", True, f"faces={len(pl.faces(G))} k={G.k}")
    w = _weights(G, args.weights, el.QQ, rng)
    D = None

    def measure():
        nonlocal D
        D = pl.boundary_measurement(G, w)
        return el.on_grassmannian(D)

    if not rep.guarded("plabic.measurement.on_grassmannian", measure):
        return
    v = G.interior()[0] if G.interior() else None
    if v is not None:
        w2 = pl.rescale_at(G, w, v, Fraction(2))
        rep.check("plabic.gauge.equivalent", pl.gauge_equivalent(G, w, w2))
        rep.check("plabic.gauge.measurement", pl.boundary_measurement(G, w2).projectively_equal(D))
    reduced = pl.is_reduced(G)
    rep.line(f"reduced: {'yes' if reduced else 'no'}")
    M = el.pluecker_to_matrix(D)
    if reduced:
        f = pl.trip_permutation(G)
        rep.line(f"f: {ap.format_window(f.window)}")
        rep.check("plabic.trips.envelope", el.positroid_envelope(M) == f)
        rep.check("plabic.faces.dimension", len(pl.faces(G)) == ap.positroid_dim(f) + 1)
        rep.guarded("plabic.labels.necklace", lambda: bool(pl.face_labels(G)))
        rep.guarded("plabic.composite.nonzero", lambda: bool(pl.muller_speyer_composite(G, w)))
    if all(any(x != 0 for x in M.row(i)) for i in range(1, G.n + 1)):
        T = pl.twist(M)
        rep.check("plabic.twist.inverse", el.pluecker(pl.reverse_twist(T)).projectively_equal(D))
        g = el.Matrix([[1, 1], [0, 1]]) if G.k == 2 else _unitriangular(G.k)
        rep.check("plabic.twist.covariance",
                  el.pluecker(pl.twist(el.mul(M, g))).projectively_equal(el.pluecker(el.mul(T, g.transpose().inverse()))))


def _unitriangular(k: int) -> el.Matrix:
    return el.Matrix([[1 if a == b else (a + b + 1 if a < b else 0) for b in range(k)] for a in range(k)])


# ------------------------------------------------------------------ tnn


def run_tnn(args, rep: Report) -> int:
    if not args.field.is_rational:
        raise InputError("positivity needs rational scalars")
    M = _matrix(args.matrix, args.field)
    tnn = el.is_tnn_subspace(M)
    rep.check("tnn.subspace", tnn)
    if args.inside:
        V3 = _matrix(args.inside, args.field)
        rep.check("tnn.outer_subspace", el.is_tnn_subspace(V3))
        V = el.search_middle_completion(M, V3, args.bound)
        rep.line("middle: none found" if V is None else "middle:\n" + el.format_matrix(V))
        rep.check("tnn.middle_found", V is not None)
    elif tnn:
        F = el.tnn_completion(M)
        rep.line("flag:")
        rep.line(el.format_matrix(F.matrix))
        rep.check("tnn.completion", el.is_tnn_flag(F))
    return rep.summary()


# ------------------------------------------------------------------ verify suites


def suite_bijections(args, rep: Report):
    for n in range(1, args.n + 1):
        fs = ap.all_bounded(n)
        ok = True
        for f in fs:
            ok &= ap.f_from_cyclic_rank(ap.cyclic_rank_matrix(f)) == f
            ok &= ap.f_from_necklace(ap.necklace_from_f(f)) == f
            ok &= ap.f_from_decorated(ap.decorated_from_f(f)) == f
            u, w = ap.pair_from_f(f)
            ok &= ap.from_pair(u, w, f.k, check=0 < f.k < n) == f
        rep.check(f"bijections.roundtrip.n{n}", ok, f"{len(fs)} elements")


def suite_rpoly(args, rep: Report):
    qs = _qs(args.q) or [2]
    perms = all_permutations(args.n)
    for u in perms:
        for w in perms:
            if not bruhat_leq(u, w):
                continue
            polys = {str(bsd.r_polynomial(u, w, word)) for word in reduced_words(w)}
            R = bsd.r_polynomial(u, w)
            ok = len(polys) == 1
            for q in qs:
                _check_work(args.n, q, args.max_work)
                ok &= R(q) == bsd.count_open_richardson_bruteforce(u, w, el.Field(q))
            d = length(w) - length(u)
            ok &= _palindromic(R, d)
            rep.check(f"rpoly.{u}.{w}", ok, f"R={R}")


def _palindromic(R: bsd.Polynomial, d: int) -> bool:
    """R(q) = (-q)^d R(1/q), compared coefficientwise."""
    c = list(R.coeffs) + [0] * (d + 1 - len(R.coeffs))
    if len(c) > d + 1:
        return False
    return all(c[i] == (-1) ** d * c[d - i] for i in range(d + 1))


def suite_deodhar(args, rep: Report):
    qs = _qs(args.q) or [2]
    for w in all_permutations(3):
        for word in reduced_words(w):
            for q in qs:
                pieces = {}
                for u in all_permutations(3):
                    if bruhat_leq(u, w):
                        for key, pts in bsd.deodhar_pieces(word, u, q).items():
                            pieces[key + "|" + str(u)] = pts
                rep.check(f"deodhar.{''.join(map(str, word.letters)) or 'e'}.q{q}", pieces == bsd.bs_fibers(word, q))


def suite_smt(args, rep: Report):
    n = args.n
    lam = tuple(range(n - 1, -1, -1))
    alphas = [a for a in smt.compositions(sum(lam), n)]
    perms = all_permutations(n)
    for u in perms:
        for w in perms:
            if not bruhat_leq(u, w):
                continue
            ok = all(smt.standard_count(lam, a, u, w) == gt.richardson_gt_count(lam, a, u, w) for a in alphas)
            rep.check(f"smt.gt.{u}.{w}", ok)


def suite_classes(args, rep: Report):
    for k in range(0, args.n + 1):
        for f in ap.all_bounded(args.n, k):
            rep.check(f"classes.duality.{ap.format_window(f.window)}", sf.duality_check(f))


def suite_plabic(args, rep: Report):
    G = _graph(args.file or "hexagon")
    _plabic_checks(G, args, rep, random.Random(args.seed))


def suite_tnn(args, rep: Report):
    rng = random.Random(args.seed)
    for trial in range(args.trials):
        n = rng.randint(2, args.n)
        k = rng.randint(1, n - 1)
        M = random_tnn_matrix(n, k, rng)
        rep.check(f"tnn.completion.{trial}", el.is_tnn_flag(el.tnn_completion(M)))


def random_tnn_matrix(n: int, k: int, rng: random.Random, bound: int = 5) -> el.Matrix:
    """span of a product of positive one-parameter elementary matrices applied to a coordinate plane."""
    g = el.Matrix.identity(n)
    for _ in range(rng.randint(0, 2 * n * n)):
        i = rng.randint(1, n - 1)
        t = Fraction(rng.randint(1, bound), rng.randint(1, bound))
        g = el.mul(g, bsd.y_matrix(i, t, n) if rng.random() < 0.5 else bsd.y_matrix(i, t, n).transpose())
    cols = sorted(rng.sample(range(1, n + 1), k))
    return el.column_span_basis(el.Matrix([[g.entry(r, c) for c in cols] for r in range(1, n + 1)]))


SUITES = {
    "bijections": suite_bijections,
    "rpoly": suite_rpoly,
    "deodhar": suite_deodhar,
    "smt": suite_smt,
    "classes": suite_classes,
    "plabic": suite_plabic,
    "tnn": suite_tnn,
}


def run_verify(args, rep: Report) -> int:
    SUITES[args.suite](args, rep)
    return rep.summary()


# ------------------------------------------------------------------ entry point


def _field(text: str) -> el.Field:
    try:
        return el.parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="positroids", description=__doc__.split("\n\n")[0])
    p.add_argument("--field", type=_field, default=el.QQ, help="q for rationals or p<prime>")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-work", type=int, default=10**7, help="bound on enumeration sizes")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("convert", help="all indexings of a positroid cell")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--pair", nargs=3, metavar=("U", "W", "K"))
    g.add_argument("--window", nargs="+", metavar="WINDOW")
    g.add_argument("--necklace")
    g.add_argument("--decorated")
    c.add_argument("--k", type=int, default=None)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--q", default=None, help="comma-separated primes")
    v.add_argument("--file", default=None)
    v.add_argument("--weights", default=None)
    v.add_argument("--trials", type=int, default=20)

    k = sub.add_parser("class", help="cohomology class, Bergeron-Sottile polynomial and duality")
    k.add_argument("window")

    r = sub.add_parser("rpoly", help="R-polynomial of an interval")
    r.add_argument("u")
    r.add_argument("w")
    r.add_argument("--word", default=None)
    r.add_argument("--q", default=None, help="compare with flag counts over these primes")

    pg = sub.add_parser("plabic", help="plabic graph computations")
    pg.add_argument("action", choices=["check", "measure", "trips", "labels", "twist"])
    pg.add_argument("file", help="a .pg file or a shipped example name")
    pg.add_argument("--weights", default=None, help="name=value,... ; other names get seeded random values")

    t = sub.add_parser("tnn", help="total nonnegativity of a subspace")
    t.add_argument("matrix", help="rows separated by ';', entries by ','")
    t.add_argument("--inside", default=None, help="search a middle subspace inside this one")
    t.add_argument("--bound", type=int, default=50)
    return p


VERBS = {"convert": run_convert, "verify": run_verify, "class": run_class, "rpoly": run_rpoly,
         "plabic": run_plabic, "tnn": run_tnn}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    rep = Report()
    if args.max_work < 1:
        print("error: --max-work must be positive", file=sys.stderr)
        return 2
    try:
        return VERBS[args.verb](args, rep)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


__all__ = ["Report", "build_parser", "main", "random_tnn_matrix", "SUITES"]

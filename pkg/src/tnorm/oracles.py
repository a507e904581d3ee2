"""Brute-force reference implementations for tests.

None of these reuse the geometry of the fast path (``geometry.py`` and the
hull/dual code in ``polytope.py``); the duplication is deliberate so that
agreement means something. They are slow and never used by the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd

from .polytope import CohomClass, DualBall, HullPolygon, MarkedPolytope, dual_ball, thurston_norm
from .words import Word, cyclic_reduce, parse_word


@dataclass(frozen=True)
class OracleReport:
    agreed: bool
    mismatch_detail: str = ""

    def __bool__(self):
        return self.agreed


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _row_extremes(pts):
    # any other point of a horizontal row lies between that row's two ends
    rows = {}
    for x, y in pts:
        lo, hi = rows.get(y, (x, x))
        rows[y] = (min(lo, x), max(hi, x))
    return {(x, y) for y, ends in rows.items() for x in ends}


def _ccw_order(vertices):
    n = len(vertices)
    cx = Fraction(sum(v[0] for v in vertices), n)
    cy = Fraction(sum(v[1] for v in vertices), n)

    def half(v):
        dx, dy = v[0] - cx, v[1] - cy
        return 0 if dy > 0 or (dy == 0 and dx > 0) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        t = _turn((cx, cy), p, q)
        return -1 if t > 0 else (1 if t < 0 else 0)

    ordered = sorted(vertices, key=cmp_to_key(cmp))
    k = ordered.index(min(ordered))
    return ordered[k:] + ordered[:k]


def oracle_hull(pts) -> HullPolygon:
    """Hull vertices by exhaustive edge search.

    An ordered pair (p, q) is a hull edge when every other point is on its
    left or on the closed segment pq; the endpoints of such pairs are exactly
    the extreme points.
    """
    pts = sorted(_row_extremes(set(map(tuple, pts))))
    if len(pts) == 1:
        return HullPolygon(tuple(pts))
    extreme = set()
    for p in pts:
        for q in pts:
            if p == q:
                continue
            ex, ey = q[0] - p[0], q[1] - p[1]
            seg = ex * ex + ey * ey
            ok = True
            for r in pts:
                t = _turn(p, q, r)
                if t < 0:
                    ok = False
                    break
                if t == 0:
                    dot = (r[0] - p[0]) * ex + (r[1] - p[1]) * ey
                    if dot < 0 or dot > seg:
                        ok = False
                        break
            if ok:
                extreme.add(p)
                extreme.add(q)
    if len(extreme) <= 2:
        return HullPolygon(tuple(sorted(extreme)))
    return HullPolygon(tuple(_ccw_order(list(extreme))))


def oracle_norm(mp: MarkedPolytope, phi) -> Fraction:
    """Literal maximum of phi(p) - phi(q) over all ordered vertex pairs."""
    cx, cy = (Fraction(c) for c in phi)
    best = None
    for px, py in mp.vertices2x:
        for qx, qy in mp.vertices2x:
            val = (cx * (px - qx) + cy * (py - qy)) / 2
            if best is None or val > best:
                best = val
    return best


def _integral(a, b, c):
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    den = a.denominator * b.denominator * c.denominator
    return int(a * den), int(b * den), int(c * den)


def _tightest(constraints):
    by_normal = {}
    for a, b, c in constraints:
        a, b, c = _integral(a, b, c)
        g = gcd(a, b)
        if g == 0:
            if c < 0:
                raise ValueError("infeasible constraint 0 <= negative")
            continue
        key = (a // g, b // g)
        bound = Fraction(c, g)
        if key not in by_normal or bound < by_normal[key]:
            by_normal[key] = bound
    out = []
    for (a, b), bound in sorted(by_normal.items()):
        out.append((a * bound.denominator, b * bound.denominator, bound.numerator))
    return out


def _primitive(d):
    g = gcd(d[0], d[1])
    return (d[0] // g, d[1] // g)


def oracle_halfplane_intersection(constraints) -> DualBall:
    """Intersect half-planes ``a*u + b*v <= c`` by trying every pair of boundary lines.

    Feasible pairwise intersections are the vertices. Recession directions
    are found by testing the boundary directions and the coordinate axes.
    """
    cons = _tightest(constraints)
    verts = set()
    for i in range(len(cons)):
        a1, b1, c1 = cons[i]
        for j in range(i + 1, len(cons)):
            a2, b2, c2 = cons[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            un, vn = c1 * b2 - c2 * b1, a1 * c2 - a2 * c1
            if det < 0:
                det, un, vn = -det, -un, -vn
            if all(a * un + b * vn <= c * det for a, b, c in cons):
                verts.add((Fraction(un, det), Fraction(vn, det)))

    candidates = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    for a, b, _ in cons:
        p = _primitive((-b, a))
        candidates |= {p, (-p[0], -p[1])}
    rays = sorted(d for d in candidates if all(a * d[0] + b * d[1] <= 0 for a, b, _ in cons))
    lineality = sorted({max(d, (-d[0], -d[1])) for d in rays if (-d[0], -d[1]) in rays})

    if len(verts) >= 3:
        ordered = _ccw_order(list(verts))
        tight = [
            (a, b, c) for a, b, c in cons if sum(a * u + b * v == c for u, v in verts) >= 2
        ]
    else:
        ordered = sorted(verts)
        tight = cons
    return DualBall(tuple(ordered), tuple(rays), tuple(lineality), tuple(sorted(tight)))


def dual_constraints(mp: MarkedPolytope):
    """Half-planes phi.(v - w) <= 1 for all ordered vertex pairs."""
    vs = mp.vertices2x
    return [
        (Fraction(px - qx, 2), Fraction(py - qy, 2), 1)
        for px, py in vs
        for qx, qy in vs
        if (px, py) != (qx, qy)
    ]


def compare_hull(pts, fast_vertices) -> OracleReport:
    ref = oracle_hull(pts).vertices
    if tuple(fast_vertices) == ref:
        return OracleReport(True)
    return OracleReport(False, f"points={sorted(set(pts))} fast={list(fast_vertices)} oracle={list(ref)}")


def compare_norm(mp: MarkedPolytope, phi) -> OracleReport:
    fast, ref = thurston_norm(mp, phi), oracle_norm(mp, phi)
    if fast == ref:
        return OracleReport(True)
    return OracleReport(False, f"polytope={mp.vertices2x} phi={tuple(phi)} fast={fast} oracle={ref}")


def compare_dual(mp: MarkedPolytope) -> OracleReport:
    fast, ref = dual_ball(mp), oracle_halfplane_intersection(dual_constraints(mp))
    if fast == ref:
        return OracleReport(True)
    return OracleReport(False, f"polytope={mp.vertices2x} fast={fast} oracle={ref}")


def random_relator(rng, max_len: int = 200) -> Word:
    """Random reduced, cyclically reduced word in x, y with zero exponent sums."""
    while True:
        a = rng.randint(1, max(1, max_len // 4))
        b = rng.randint(1, max(1, max_len // 4))
        letters = ["x", "X"] * a + ["y", "Y"] * b
        rng.shuffle(letters)
        w = cyclic_reduce(parse_word("".join(letters)))
        if w and len(w) <= max_len:
            return w


def random_class(rng, bound: int = 12) -> CohomClass:
    def q():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return CohomClass(q(), q())

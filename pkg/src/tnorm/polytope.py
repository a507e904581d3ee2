"""Marked polytope and Thurston norm of a two-generator one-relator group.

Pipeline for a relator ``r`` in x, y with zero exponent sums:

1. walk on Z^2 reading ``r`` (x = +e1, y = +e2, capitals step back);
2. take the convex hull of the visited lattice points;
3. mark the hull vertices the cyclic walk visits exactly once;
4. collect the unit squares inside the hull touching a hull vertex;
5. the polytope is spanned by the midpoints of those squares.

Midpoints are half-integral, so polytope vertices are stored doubled
(``vertices2x``) and every coordinate there is odd. Nothing in this module
uses floating point.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    EmptyPolytope,
    EmptyRelator,
    InvalidClass,
    NonzeroExponentSum,
    NotCyclicallyReduced,
    UnsupportedGenerator,
    ZeroClass,
)
from .geometry import canonical_ccw, convex_hull, cross, in_closed_polygon, primitive
from .words import Word, exponent_sum, is_cyclically_reduced, parse_word

log = logging.getLogger(__name__)

STEPS = {("x", 1): (1, 0), ("x", -1): (-1, 0), ("y", 1): (0, 1), ("y", -1): (0, -1)}

MARKING_RULES = ("existential", "universal")
FIBERED_RULES = ("strict", "existential")


@dataclass(frozen=True)
class WalkTrace:
    relator: Word
    points: tuple[tuple[int, int], ...]

    @property
    def steps(self) -> tuple[tuple[int, int], ...]:
        return tuple(STEPS[a] for a in self.relator.letters)

    def visit_counts(self) -> Counter:
        # p_0 is the closing point as well, counted once
        return Counter(self.points)

    def position(self, k: int) -> tuple[int, int]:
        """Walk position after reading ``k`` letters (cyclic)."""
        return self.points[k % len(self.points)]


@dataclass(frozen=True)
class HullPolygon:
    vertices: tuple[tuple[int, int], ...]
    marks: tuple[bool, ...] = ()
    visits: tuple[int, ...] = ()

    def __len__(self):
        return len(self.vertices)

    def mark_of(self, v) -> bool:
        return self.marks[self.vertices.index(tuple(v))]


@dataclass(frozen=True)
class Square:
    """Unit square [i, i+1] x [j, j+1] inside the hull, touching hull vertices."""

    corner: tuple[int, int]
    incident: tuple[tuple[int, int], ...]
    incident_marks: tuple[bool, ...]

    @property
    def midpoint2x(self) -> tuple[int, int]:
        return (2 * self.corner[0] + 1, 2 * self.corner[1] + 1)

    def marked(self, rule: str = "existential") -> bool:
        if rule == "existential":
            return any(self.incident_marks)
        if rule == "universal":
            return all(self.incident_marks)
        raise ValueError(f"unknown marking rule {rule!r}")


@dataclass(frozen=True)
class MarkedPolytope:
    vertices2x: tuple[tuple[int, int], ...]
    marks: tuple[bool, ...]
    interior_midpoints2x: tuple[tuple[int, int], ...] = ()
    squares: tuple[Square, ...] = ()
    marking_rule: str = "existential"
    warnings: tuple[str, ...] = field(default=())

    def __len__(self):
        return len(self.vertices2x)

    @property
    def vertices(self) -> list[tuple[Fraction, Fraction]]:
        return [(Fraction(x, 2), Fraction(y, 2)) for x, y in self.vertices2x]

    @property
    def dimension(self) -> int:
        return min(len(self.vertices2x), 3) - 1

    def all_marked(self) -> bool:
        return all(self.marks)

    def edges2x(self):
        n = len(self.vertices2x)
        if n < 2:
            return []
        if n == 2:
            return [(self.vertices2x[0], self.vertices2x[1])]
        return [(self.vertices2x[i], self.vertices2x[(i + 1) % n]) for i in range(n)]

    def squared_edge_lengths(self) -> list[int]:
        """Squared Euclidean edge lengths in true (halved) coordinates."""
        out = []
        for (ax, ay), (bx, by) in self.edges2x():
            dx, dy = (bx - ax) // 2, (by - ay) // 2
            out.append(dx * dx + dy * dy)
        return out

    def is_centrally_symmetric(self) -> bool:
        if not self.vertices2x:
            return False
        lo, hi = min(self.vertices2x), max(self.vertices2x)
        s = (lo[0] + hi[0], lo[1] + hi[1])
        vs = set(self.vertices2x)
        return {(s[0] - x, s[1] - y) for x, y in vs} == vs


def _as_relator(r) -> Word:
    return parse_word(r) if isinstance(r, str) else r


def walk_of(r: Word | str) -> WalkTrace:
    r = _as_relator(r)
    if not r:
        raise EmptyRelator()
    for letter in r.letters:
        if letter.gen not in ("x", "y"):
            raise UnsupportedGenerator(letter.gen)
    if not is_cyclically_reduced(r):
        raise NotCyclicallyReduced(str(r))
    for g in ("x", "y"):
        total = exponent_sum(r, g)
        if total:
            raise NonzeroExponentSum(g, total)
    px = py = 0
    points = [(0, 0)]
    for letter in r.letters[:-1]:
        dx, dy = STEPS[letter]
        px += dx
        py += dy
        points.append((px, py))
    return WalkTrace(r, tuple(points))


def mark_hull(walk: WalkTrace) -> HullPolygon:
    counts = walk.visit_counts()
    vertices = tuple(convex_hull(walk.points))
    visits = tuple(counts[v] for v in vertices)
    return HullPolygon(vertices, tuple(c == 1 for c in visits), visits)


def contained_squares(h: HullPolygon) -> list[Square]:
    """Unit squares inside the closed hull with at least one hull vertex as a corner."""
    hull = list(h.vertices)
    vertex_set = set(hull)
    marks = dict(zip(h.vertices, h.marks)) if h.marks else {}
    seen = {}
    for vx, vy in hull:
        for dx in (0, 1):
            for dy in (0, 1):
                i, j = vx - dx, vy - dy
                if (i, j) in seen:
                    continue
                corners = [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)]
                if all(in_closed_polygon(c, hull) for c in corners):
                    seen[i, j] = [c for c in corners if c in vertex_set]
    squares = []
    for corner in sorted(seen):
        incident = tuple(sorted(seen[corner]))
        squares.append(Square(corner, incident, tuple(marks.get(v, False) for v in incident)))
    return squares


def marked_polytope(r: Word | str, marking: str = "existential") -> MarkedPolytope:
    walk = walk_of(r)
    hull = mark_hull(walk)
    return polytope_from_hull(hull, marking)


def polytope_from_hull(hull: HullPolygon, marking: str = "existential") -> MarkedPolytope:
    if marking not in MARKING_RULES:
        raise ValueError(f"unknown marking rule {marking!r}")
    squares = contained_squares(hull)
    warnings = []
    if not squares:
        warnings.append("no unit square of the hull touches a hull vertex")
    mark_at = {sq.midpoint2x: sq.marked(marking) for sq in squares}
    verts = convex_hull(mark_at)
    interior = tuple(sorted(set(mark_at) - set(verts)))
    if interior:
        msg = f"{len(interior)} square midpoint(s) are not vertices of their hull: {list(interior)}"
        log.warning(msg)
        warnings.append(msg)
    return MarkedPolytope(
        vertices2x=tuple(verts),
        marks=tuple(mark_at[v] for v in verts),
        interior_midpoints2x=interior,
        squares=tuple(squares),
        marking_rule=marking,
        warnings=tuple(warnings),
    )


@dataclass(frozen=True)
class CohomClass:
    """A rational class given by its values on x and y."""

    cx: Fraction
    cy: Fraction

    def __post_init__(self):
        object.__setattr__(self, "cx", Fraction(self.cx))
        object.__setattr__(self, "cy", Fraction(self.cy))

    @classmethod
    def parse(cls, text: str) -> CohomClass:
        parts = text.split(",")
        if len(parts) != 2:
            raise InvalidClass(text)
        try:
            return cls(Fraction(parts[0].strip()), Fraction(parts[1].strip()))
        except (ValueError, ZeroDivisionError):
            raise InvalidClass(text) from None

    def is_zero(self) -> bool:
        return self.cx == 0 and self.cy == 0

    def eval2x(self, p2x) -> Fraction:
        """Value on the point whose doubled coordinates are ``p2x``."""
        return (self.cx * p2x[0] + self.cy * p2x[1]) / 2

    def __mul__(self, k):
        return CohomClass(self.cx * k, self.cy * k)

    __rmul__ = __mul__

    def __add__(self, other: CohomClass) -> CohomClass:
        return CohomClass(self.cx + other.cx, self.cy + other.cy)

    def __iter__(self):
        return iter((self.cx, self.cy))


def _as_class(phi) -> CohomClass:
    return phi if isinstance(phi, CohomClass) else CohomClass(*phi)


def thurston_norm(mp: MarkedPolytope, phi) -> Fraction:
    """Width of the polytope in the direction of ``phi``: max - min of phi over the vertices."""
    if not mp.vertices2x:
        raise EmptyPolytope()
    phi = _as_class(phi)
    values = [phi.eval2x(v) for v in mp.vertices2x]
    return max(values) - min(values)


def maximizers(mp: MarkedPolytope, phi) -> list[int]:
    phi = _as_class(phi)
    values = [phi.eval2x(v) for v in mp.vertices2x]
    top = max(values)
    return [i for i, val in enumerate(values) if val == top]


def is_fibered(mp: MarkedPolytope, phi, rule: str = "strict") -> bool:
    """Fiberedness from the marked vertices.

    ``strict``: the maximizing vertex is unique and marked. ``existential``:
    some maximizing vertex is marked, which accepts classes on cone walls.
    """
    phi = _as_class(phi)
    if phi.is_zero():
        raise ZeroClass()
    if not mp.vertices2x:
        raise EmptyPolytope()
    top = maximizers(mp, phi)
    if rule == "strict":
        return len(top) == 1 and mp.marks[top[0]]
    if rule == "existential":
        return any(mp.marks[i] for i in top)
    raise ValueError(f"unknown fibered rule {rule!r}")


@dataclass(frozen=True)
class DualBall:
    """Unit ball of the norm: {phi : phi(v) - phi(w) <= 1 for all vertices v, w}.

    ``constraints`` holds the irredundant half-planes ``a*u + b*v <= c``.
    When the polytope is a segment or a point the ball is unbounded: ``rays``
    lists primitive recession directions (both signs of every line) and
    ``lineality`` a basis of the lines it contains.
    """

    vertices: tuple[tuple[Fraction, Fraction], ...]
    rays: tuple[tuple[int, int], ...] = ()
    lineality: tuple[tuple[int, int], ...] = ()
    constraints: tuple[tuple[int, int, int], ...] = ()

    @property
    def bounded(self) -> bool:
        return not self.rays

    def contains(self, phi) -> bool:
        u, v = _as_class(phi)
        if self.bounded:
            return in_closed_polygon((u, v), self.vertices)
        return all(a * u + b * v <= c for a, b, c in self.constraints)


def difference_vectors(mp: MarkedPolytope) -> set[tuple[int, int]]:
    vs = mp.vertices2x
    return {((px - qx) // 2, (py - qy) // 2) for px, py in vs for qx, qy in vs}


def dual_ball(mp: MarkedPolytope) -> DualBall:
    if not mp.vertices2x:
        raise EmptyPolytope()
    body = convex_hull(difference_vectors(mp))
    if len(body) == 1:
        return DualBall((), rays=((-1, 0), (0, -1), (0, 1), (1, 0)), lineality=((0, 1), (1, 0)))
    if len(body) == 2:
        d = body[1]
        perp = primitive((-d[1], d[0]))
        neg = (-perp[0], -perp[1])
        rays = tuple(sorted({perp, neg}))
        return DualBall(
            (),
            rays=rays,
            lineality=(max(rays),),
            constraints=tuple(sorted({(d[0], d[1], 1), (-d[0], -d[1], 1)})),
        )
    # the difference body is centrally symmetric with 0 inside; edge (a, b) of
    # it is dual to the vertex phi with phi.a = phi.b = 1
    verts = []
    n = len(body)
    for k in range(n):
        a, b = body[k], body[(k + 1) % n]
        det = cross((0, 0), a, b)
        verts.append((Fraction(b[1] - a[1], det), Fraction(a[0] - b[0], det)))
    return DualBall(
        tuple(canonical_ccw(verts)),
        constraints=tuple(sorted((a, b, 1) for a, b in body)),
    )


def hull_symmetry_center(walk: WalkTrace) -> tuple[int, int]:
    """Walk position after half the relator has been read."""
    n = len(walk.points)
    if n % 2:
        raise ValueError("relator has odd length")
    return walk.position(n // 2)


def is_point_symmetric(points: Sequence[tuple[int, int]], s: tuple[int, int]) -> bool:
    pts = set(points)
    return {(s[0] - x, s[1] - y) for x, y in pts} == pts

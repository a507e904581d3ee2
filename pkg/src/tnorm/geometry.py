"""Exact planar geometry on integer (or Fraction) points."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Point = tuple  # (x, y) with int or Fraction entries


def cross(o: Point, a: Point, b: Point):
    """Twice the signed area of triangle o, a, b; positive for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Strictly convex hull, counterclockwise, starting at the lexicographically least point.

    Collinear boundary points are dropped. A collinear input yields its two
    endpoints and a single distinct point yields itself.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def canonical_ccw(vertices: Sequence[Point]) -> list[Point]:
    """Rotate a counterclockwise cycle so it starts at its lexicographic minimum."""
    if not vertices:
        return []
    i = min(range(len(vertices)), key=lambda k: vertices[k])
    return list(vertices[i:]) + list(vertices[:i])


def in_closed_polygon(p: Point, hull: Sequence[Point]) -> bool:
    """Membership in a convex hull as returned by :func:`convex_hull`."""
    n = len(hull)
    if n == 0:
        return False
    if n == 1:
        return tuple(p) == tuple(hull[0])
    if n == 2:
        a, b = hull
        if cross(a, b, p) != 0:
            return False
        return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
            a[1], b[1]
        )
    return all(cross(hull[i], hull[(i + 1) % n], p) >= 0 for i in range(n))


def primitive(v: Point) -> tuple[int, int]:
    """Shortest integer vector with the direction of a rational vector."""
    fx, fy = Fraction(v[0]), Fraction(v[1])
    den = lcm(fx.denominator, fy.denominator)
    a, b = int(fx * den), int(fy * den)
    g = gcd(a, b)
    if g == 0:
        return (0, 0)
    return (a // g, b // g)

import random
from fractions import Fraction

from tnorm.families import bs_relator
from tnorm.geometry import convex_hull
from tnorm.oracles import (
    compare_dual,
    compare_hull,
    compare_norm,
    dual_constraints,
    oracle_halfplane_intersection,
    oracle_hull,
    oracle_norm,
    random_class,
    random_relator,
)
from tnorm.polytope import MarkedPolytope, marked_polytope, walk_of
from tnorm.words import exponent_sum

G1 = "xyxyyxyXYXYYXY"
G1_WALK = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (2, 3), (3, 3), (3, 4),
           (2, 4), (2, 3), (1, 3), (1, 2), (1, 1), (0, 1)]


def test_oracle_hull_g1_walk():
    assert list(oracle_hull(G1_WALK).vertices) == convex_hull(G1_WALK)
    assert len(oracle_hull(G1_WALK)) == 8


def test_oracle_hull_degenerate():
    assert oracle_hull([(0, 0), (1, 0), (2, 0)]).vertices == ((0, 0), (2, 0))
    assert oracle_hull([(3, 3)]).vertices == ((3, 3),)


def test_oracle_hull_random_clouds():
    rng = random.Random(7)
    for _ in range(30):
        pts = [(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(100)]
        assert compare_hull(pts, convex_hull(pts))


def test_compare_hull_reports_mismatch():
    rep = compare_hull([(0, 0), (1, 0), (0, 1)], [(0, 0), (1, 0)])
    assert not rep and "oracle" in rep.mismatch_detail
    assert compare_hull([(0, 0)], [(0, 0)]).mismatch_detail == ""


def test_oracle_norm():
    mp = marked_polytope(G1)
    assert oracle_norm(mp, (1, 0)) == 2
    assert oracle_norm(mp, (0, 0)) == 0
    for m in range(1, 6):
        assert oracle_norm(marked_polytope(bs_relator(m)), (0, 1)) == m - 1


def test_halfplane_g1():
    db = oracle_halfplane_intersection(dual_constraints(marked_polytope(G1)))
    assert set(db.vertices) == {(2, -1), (1, -1), (-2, 1), (-1, 1)}
    assert db.rays == ()


def test_halfplane_empty_is_plane():
    db = oracle_halfplane_intersection([])
    assert db.vertices == ()
    assert db.rays == ((-1, 0), (0, -1), (0, 1), (1, 0))
    assert db.lineality == ((0, 1), (1, 0))


def test_halfplane_strip():
    db = oracle_halfplane_intersection([(0, 1, 1), (0, -1, 1)])
    assert db.vertices == ()
    assert db.rays == ((-1, 0), (1, 0))
    assert db.lineality == ((1, 0),)


def test_halfplane_redundant_constraints():
    cons = [(1, 0, 1), (2, 0, 5), (-1, 0, 1), (0, 1, 1), (0, -1, 1), (1, 1, 10)]
    db = oracle_halfplane_intersection(cons)
    assert set(db.vertices) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    assert len(db.constraints) == 4


def test_compare_norm_and_dual():
    mp = marked_polytope(G1)
    rng = random.Random(11)
    for _ in range(20):
        assert compare_norm(mp, random_class(rng))
    assert compare_dual(mp)
    assert compare_dual(marked_polytope(bs_relator(3)))
    assert compare_dual(marked_polytope("xyXY"))


def test_compare_norm_detects_difference():
    bogus = MarkedPolytope(((1, 1), (3, 3)), (True, True))
    assert compare_norm(bogus, (1, 0))
    assert oracle_norm(bogus, (Fraction(1, 2), 0)) == Fraction(1, 2)


def test_random_relator_is_valid():
    rng = random.Random(5)
    for _ in range(50):
        r = random_relator(rng, 60)
        assert 0 < len(r) <= 60
        assert exponent_sum(r, "x") == exponent_sum(r, "y") == 0
        walk_of(r)

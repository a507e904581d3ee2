"""One test per acceptance criterion; the terminal summary prints a pass/fail line for each."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from tnorm.cli import main
from tnorm.families import (
    CONVENTIONS,
    GN,
    HN,
    FamilySpec,
    bs_relator,
    family_relator,
    family_twists,
    fib_shape_check,
    fib_shape_table,
)
from tnorm.geometry import convex_hull
from tnorm.oracles import (
    compare_dual,
    compare_hull,
    compare_norm,
    dual_constraints,
    oracle_halfplane_intersection,
    random_class,
    random_relator,
)
from tnorm.polytope import (
    dual_ball,
    hull_symmetry_center,
    is_point_symmetric,
    mark_hull,
    marked_polytope,
    polytope_from_hull,
    thurston_norm,
    walk_of,
)
from tnorm.twists import relator_of

ARTIFACTS = Path(__file__).parent / "artifacts"

G1 = "xyxyyxyXYXYYXY"
G2 = "xyxyyxyxyyxyyxyxyyxyXYXYYXYXYYXYYXYXYYXY"
H = Fraction(1, 2)


def fib(k):
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def all_polytopes():
    """Every polytope produced in criteria 1 to 6, plus g1 built from its relator text."""
    out = {"g1_text": marked_polytope(G1)}
    for n in range(1, 9):
        out[f"g{n}"] = marked_polytope(family_relator(FamilySpec(GN, n)))
    for n in range(1, 7):
        out[f"h{n}"] = marked_polytope(family_relator(FamilySpec(HN, n)))
    for m in range(1, 9):
        out[f"bs{m}"] = marked_polytope(bs_relator(m))
    return out


@pytest.fixture(scope="module")
def polytopes():
    return all_polytopes()


@pytest.mark.criterion(1, "relator regression for g1 and g2")
def test_criterion_1_relators():
    assert relator_of(family_twists(FamilySpec(GN, 1))) == G1
    assert relator_of(family_twists(FamilySpec(GN, 2))) == G2
    assert len(G2) == 40


@pytest.mark.criterion(2, "walk, hull and polytope of g1")
def test_criterion_2_g1_pipeline():
    walk = walk_of(G1)
    assert walk.points == ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (2, 3), (3, 3), (3, 4),
                           (2, 4), (2, 3), (1, 3), (1, 2), (1, 1), (0, 1))
    hull = mark_hull(walk)
    assert set(hull.vertices) == {(0, 0), (1, 0), (2, 1), (3, 3), (3, 4), (2, 4), (1, 3), (0, 1)}
    mp = polytope_from_hull(hull)
    assert set(mp.vertices) == {(H, H), (3 * H, 3 * H), (3 * H, 5 * H), (5 * H, 7 * H)}
    assert mp.all_marked()


@pytest.mark.criterion(3, "vertex counts 4n and 4n+2, all marked")
def test_criterion_3_vertex_counts(polytopes):
    for n in range(1, 7):
        g, h = polytopes[f"g{n}"], polytopes[f"h{n}"]
        assert len(g) == 4 * n and g.all_marked(), f"g{n}"
        assert len(h) == 4 * n + 2 and h.all_marked(), f"h{n}"


@pytest.mark.criterion(4, "Fibonacci staircase shapes up to n = 10")
def test_criterion_4_fibonacci():
    for n in range(1, 11):
        assert fib_shape_check(n)
    for row in fib_shape_table(10):
        k = row["k"]
        assert row["A"] == (fib(2 * k - 2), fib(2 * k - 1))
        assert row["B"] == (fib(2 * k - 1), fib(2 * k))


@pytest.mark.criterion(5, "BS(m,m) norms for m = 1..8")
def test_criterion_5_bs_norms(polytopes):
    for m in range(1, 9):
        mp = polytopes[f"bs{m}"]
        assert thurston_norm(mp, (1, 0)) == 0
        assert thurston_norm(mp, (0, 1)) == m - 1


@pytest.mark.criterion(6, "distinct edge lengths of g_n")
def test_criterion_6_edge_lengths(polytopes):
    for n in range(2, 9):
        assert len(set(polytopes[f"g{n}"].squared_edge_lengths())) >= n // 2


@pytest.mark.criterion(7, "hull and polytope symmetry for g_n and h_n")
def test_criterion_7_symmetry():
    for fam in (GN, HN):
        for n in range(1, 7):
            walk = walk_of(family_relator(FamilySpec(fam, n)))
            hull = mark_hull(walk)
            assert is_point_symmetric(hull.vertices, hull_symmetry_center(walk)), (fam, n)
            mp = polytope_from_hull(hull)
            n_v = len(mp)
            cx = sum(x for x, _ in mp.vertices2x)
            cy = sum(y for _, y in mp.vertices2x)
            # v -> 2c - v with c the vertex centroid, kept integral by scaling by n_v
            reflected = {(2 * cx - n_v * x, 2 * cy - n_v * y) for x, y in mp.vertices2x}
            assert reflected == {(n_v * x, n_v * y) for x, y in mp.vertices2x}, (fam, n)


@pytest.mark.criterion(8, "fast path agrees with the oracles")
def test_criterion_8_oracles(polytopes, rng):
    for _ in range(1000):
        pts = walk_of(random_relator(rng, 200)).points
        rep = compare_hull(pts, convex_hull(pts))
        assert rep, rep.mismatch_detail
    for name, mp in polytopes.items():
        for _ in range(100):
            rep = compare_norm(mp, random_class(rng))
            assert rep, rep.mismatch_detail
        rep = compare_dual(mp)
        assert rep, f"{name}: {rep.mismatch_detail}"


@pytest.mark.criterion(9, "seminorm and integrality")
def test_criterion_9_seminorm(polytopes, rng):
    items = list(polytopes.values())
    for _ in range(500):
        mp = rng.choice(items)
        a, b = random_class(rng), random_class(rng)
        k = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        assert thurston_norm(mp, a * k) == abs(k) * thurston_norm(mp, a)
        assert thurston_norm(mp, a + b) <= thurston_norm(mp, a) + thurston_norm(mp, b)
    for mp in items:
        for _ in range(20):
            phi = (rng.randint(-20, 20), rng.randint(-20, 20))
            assert thurston_norm(mp, phi).denominator == 1


@pytest.mark.criterion(10, "unit ball membership matches norm <= 1")
def test_criterion_10_duality(polytopes, rng):
    for mp in polytopes.values():
        db = dual_ball(mp)
        for k in range(200):
            phi = random_class(rng)
            if k % 4 == 0:
                # put a quarter of the samples on or near the unit sphere
                norm = thurston_norm(mp, phi)
                if norm:
                    phi = phi * (Fraction(1) / norm + Fraction(rng.choice([-1, 0, 0, 1]), 1000))
            assert db.contains(phi) == (thurston_norm(mp, phi) <= 1)
    g1_ball = dual_ball(polytopes["g1_text"])
    expected = {(2, -1), (1, -1), (-2, 1), (-1, 1)}
    assert set(g1_ball.vertices) == expected
    assert set(oracle_halfplane_intersection(dual_constraints(polytopes["g1_text"])).vertices) == expected


@pytest.mark.criterion(11, "f_m diagnostic is produced, persisted and deterministic")
def test_criterion_11_fm_report(tmp_path, capsys):
    ARTIFACTS.mkdir(exist_ok=True)
    persisted = ARTIFACTS / "fm_report.json"
    assert main(["fm-report", "--max", "4", "--out", str(persisted)]) == 0
    again = tmp_path / "fm_report.json"
    assert main(["fm-report", "--max", "4", "--out", str(again)]) == 0
    assert persisted.read_bytes() == again.read_bytes()
    doc = json.loads(persisted.read_text())
    seen = {(r["m"], r["order"], r["mirror"]) for r in doc["results"]}
    assert seen == {(m, o, mir) for m in range(1, 5) for o, mir in CONVENTIONS}
    assert all(r["status"] in ("MATCH", "MISMATCH") for r in doc["results"])

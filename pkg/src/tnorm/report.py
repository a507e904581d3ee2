"""JSON reports. Rationals go on the wire as ``"num/den"`` strings."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .families import FamilySpec, family_relator, family_twists
from .polytope import (
    CohomClass,
    DualBall,
    HullPolygon,
    MarkedPolytope,
    WalkTrace,
    is_fibered,
    mark_hull,
    polytope_from_hull,
    thurston_norm,
    walk_of,
)
from .twists import format_twists, parse_twists, relator_of
from .errors import InvalidCharacter
from .words import Word, cyclic_reduce, parse_word, power, word_of

_SUGAR = re.compile(r"\s*([wxyzWXYZ])(?:\^([+-]?\d+))?")


def rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_relator_text(text: str) -> Word:
    """Case-based word text, optionally with ``^k`` powers and spaces (``"x y^4 X y^-4"``)."""
    if "^" not in text and not any(ch.isspace() for ch in text):
        return parse_word(text)
    pieces, pos = [], 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _SUGAR.match(stripped, pos)
        if not m:
            bad = len(stripped) - len(stripped[pos:].lstrip())
            raise InvalidCharacter(bad, stripped[bad])
        letter, k = m.group(1), int(m.group(2) or 1)
        sign = 1 if letter.islower() else -1
        pieces.append(power(letter.lower(), sign * k))
        pos = m.end()
    return word_of(letter for piece in pieces for letter in piece)


@dataclass
class Pipeline:
    """Everything computed for one input, plus the echo of how it was given."""

    relator: Word
    walk: WalkTrace
    hull: HullPolygon
    polytope: MarkedPolytope
    source: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)


def run_pipeline(relator=None, twists=None, family=None, param=None, marking="existential") -> Pipeline:
    source: dict = {}
    warnings: list = []
    if relator is not None:
        raw = parse_relator_text(relator)
        r = cyclic_reduce(raw)
        if r != raw:
            warnings.append(f"relator {raw} was reduced to {r}")
    elif twists is not None:
        tw = parse_twists(twists)
        source["twists"] = format_twists(tw)
        r = relator_of(tw)
    else:
        spec = FamilySpec(family, param)
        source["family"] = {"name": family, "parameter": param}
        source["twists"] = format_twists(family_twists(spec))
        r = family_relator(spec)
    walk = walk_of(r)
    hull = mark_hull(walk)
    mp = polytope_from_hull(hull, marking)
    warnings.extend(mp.warnings)
    return Pipeline(r, walk, hull, mp, source, warnings)


def _pairs(points):
    return [[int(a), int(b)] for a, b in points]


def polytope_block(mp: MarkedPolytope) -> dict:
    return {
        "vertices2x": _pairs(mp.vertices2x),
        "marks": list(mp.marks),
        "interior_midpoints2x": _pairs(mp.interior_midpoints2x),
        "marking_rule": mp.marking_rule,
        "squares": [
            {
                "corner": list(sq.corner),
                "midpoint2x": list(sq.midpoint2x),
                "incident": _pairs(sq.incident),
                "incident_marks": list(sq.incident_marks),
                "marked": sq.marked(mp.marking_rule),
            }
            for sq in mp.squares
        ],
    }


def dual_block(db: DualBall) -> dict:
    return {
        "bounded": db.bounded,
        "vertices": [[rational(u), rational(v)] for u, v in db.vertices],
        "rays": _pairs(db.rays),
        "lineality": _pairs(db.lineality),
        "constraints": [[a, b, c] for a, b, c in db.constraints],
    }


def norm_query(mp: MarkedPolytope, phi: CohomClass, fibered: bool = False, rule: str = "strict") -> dict:
    out = {"phi": [rational(phi.cx), rational(phi.cy)], "norm": rational(thurston_norm(mp, phi))}
    if fibered:
        out["fibered"] = is_fibered(mp, phi, rule)
        out["fibered_rule"] = rule
    return out


def build_report(p: Pipeline, queries: dict | None = None) -> dict:
    return {
        "input": {"relator": str(p.relator), **p.source},
        "walk": {"length": len(p.walk.points), "points": _pairs(p.walk.points)},
        "hull": {
            "vertices": _pairs(p.hull.vertices),
            "marks": list(p.hull.marks),
            "visits": list(p.hull.visits),
        },
        "polytope": polytope_block(p.polytope),
        "queries": queries or {},
        "warnings": list(p.warnings),
        "version": __version__,
    }


_LEAF_ARRAY = re.compile(r"\[[^\[\]{}]*\]")


def _inline(m) -> str:
    text = re.sub(r"^\[\n\s*", "[", m.group(0))
    text = re.sub(r"\n\s*\]$", "]", text)
    return re.sub(r"\n\s*", " ", text)


def dumps(obj) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    return _LEAF_ARRAY.sub(_inline, json.dumps(obj, indent=2)) + "\n"

"""Thurston norm balls of two-generator one-relator 3-manifold groups."""

__version__ = "0.1.0"

from .errors import TnormError  # noqa: E402
from .words import Word, concat, cyclic_reduce, exponent_sum, invert, parse_word, project, reduce  # noqa: E402
from .twists import TwistEndo, TwistToken, apply, compose_twists, generator_endo, parse_twists, relator_of  # noqa: E402
from .polytope import (  # noqa: E402
    CohomClass,
    DualBall,
    MarkedPolytope,
    contained_squares,
    dual_ball,
    is_fibered,
    mark_hull,
    marked_polytope,
    thurston_norm,
    walk_of,
)
from .geometry import convex_hull  # noqa: E402
from .families import FamilySpec, ab_sequence, family_twists, fib_shape_check, verify_bs_presentation  # noqa: E402

"""The twist families g_n, h_n, f_m and the A/B word recursion behind them.

``g_n = T_b^-1 (T_d^-1 T_c)^(n+1)`` and ``h_n = T_b^-2 (T_d^-1 T_c)^(n+1)``
produce relators whose marked polytopes have 4n and 4n+2 vertices. The
words ``A_k, B_k`` track how ``g = T_b^-1 T_d^-1 T_c T_b`` grows the image of
[x, z] one step at a time; projected to x, y they are staircases with
Fibonacci width and height.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import InvalidFamily, InvalidParameter
from .polytope import hull_symmetry_center, is_point_symmetric, mark_hull, polytope_from_hull, walk_of
from .twists import TwistToken, curve_image, format_twists, relator_of
from .words import Word, concat, concat_all, cyclic_equal, exponent_sum, parse_word, power, project

GN, HN, FM = "gn", "hn", "fm"
FAMILIES = (GN, HN, FM)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    parameter: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidFamily(self.family)
        if not isinstance(self.parameter, int) or self.parameter < 1:
            raise InvalidParameter(self.parameter)

    def __str__(self):
        return f"{self.family}({self.parameter})"


def _tok(curve, power=1):
    return TwistToken(curve, power)


def family_twists(spec: FamilySpec) -> tuple[TwistToken, ...]:
    n = spec.parameter
    if spec.family == GN:
        return (_tok("b", -1),) + (_tok("d", -1), _tok("c")) * (n + 1)
    if spec.family == HN:
        return (_tok("b", -1),) * 2 + (_tok("d", -1), _tok("c")) * (n + 1)
    return (_tok("d"),) * n + (_tok("c", -1), _tok("d"), _tok("c"))


@lru_cache(maxsize=64)
def family_relator(spec: FamilySpec) -> Word:
    return relator_of(family_twists(spec))


def g_step() -> tuple[TwistToken, ...]:
    """The twist word ``g`` with ``g_(n+1) = g * g_n``."""
    return (_tok("b", -1), _tok("d", -1), _tok("c"), _tok("b"))


@dataclass(frozen=True)
class ABPair:
    A: Word
    B: Word


A1 = parse_word("ywZx")
B1 = parse_word("yywZx")


def ab_sequence(n: int) -> list[ABPair]:
    """``A_(k+1) = B_k A_k`` and ``B_(k+1) = B_k B_k A_k`` for k < n."""
    if n < 1:
        raise InvalidParameter(n)
    pairs = [ABPair(A1, B1)]
    for _ in range(n - 1):
        a, b = pairs[-1].A, pairs[-1].B
        a_next = concat(b, a)
        pairs.append(ABPair(a_next, concat(b, a_next)))
    return pairs


def fibonacci(k: int) -> int:
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def staircase_shape(w: Word) -> tuple[int, int] | None:
    """(width, height) of the projected walk, or None if it steps backwards."""
    bar = project(w)
    if any(letter.sign < 0 for letter in bar.letters):
        return None
    return exponent_sum(bar, "x"), exponent_sum(bar, "y")


def fib_shape_table(n: int) -> list[dict]:
    rows = []
    for k, pair in enumerate(ab_sequence(n), start=1):
        rows.append(
            {
                "k": k,
                "A": staircase_shape(pair.A),
                "B": staircase_shape(pair.B),
                "A_expected": (fibonacci(2 * k - 2), fibonacci(2 * k - 1)),
                "B_expected": (fibonacci(2 * k - 1), fibonacci(2 * k)),
            }
        )
    return rows


def fib_shape_check(n: int) -> bool:
    return all(
        row["A"] == row["A_expected"] and row["B"] == row["B_expected"]
        for row in fib_shape_table(n)
    )


def expected_vertex_count(spec: FamilySpec) -> int:
    if spec.family == GN:
        return 4 * spec.parameter
    if spec.family == HN:
        return 4 * spec.parameter + 2
    raise InvalidFamily(spec.family)


def has_mirrored_halves(r: Word) -> bool:
    """Second half equals the first with every letter inverted in place."""
    text = str(r)
    half, rem = divmod(len(text), 2)
    return not rem and text[half:] == text[:half].swapcase()


def bs_relator(m: int) -> Word:
    """``x y^m x^-1 y^-m``."""
    return concat_all([parse_word("x"), power("y", m), parse_word("X"), power("y", -m)])


CONVENTIONS = tuple(product(("right", "left"), (False, True)))


@dataclass(frozen=True)
class BSReport:
    m: int
    order: str
    mirror: bool
    twists: str
    curve_image: str
    computed: str
    target: str
    status: str

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "order": self.order,
            "mirror": self.mirror,
            "twists": self.twists,
            "curve_image": self.curve_image,
            "computed": self.computed,
            "target": self.target,
            "status": self.status,
        }


def verify_bs_presentation(m: int, order: str = "right", mirror: bool = False) -> BSReport:
    """Compare the relator of ``f_m`` with ``x y^m X Y^m`` as cyclic words up to inversion.

    A diagnostic only: it reports MATCH or MISMATCH and never raises on a
    mismatch. An empty projection is reported as the empty string.
    """
    spec = FamilySpec(FM, m)
    tw = family_twists(spec)
    target = bs_relator(m)
    image = curve_image(tw, order=order, mirror=mirror)
    computed = project(image)
    match = cyclic_equal(computed, target, up_to_inversion=True)
    return BSReport(
        m, order, mirror, format_twists(tw), str(image), str(computed), str(target),
        "MATCH" if match else "MISMATCH",
    )


def bs_diagnostic(ms=range(1, 5)) -> list[BSReport]:
    return [verify_bs_presentation(m, order, mirror) for m in ms for order, mirror in CONVENTIONS]


def check_family(spec: FamilySpec) -> list[str]:
    """Structural checks for one member of g_n or h_n; returns failure messages."""
    failures = []
    r = family_relator(spec)
    walk = walk_of(r)
    hull = mark_hull(walk)
    mp = polytope_from_hull(hull)
    want = expected_vertex_count(spec)
    if len(mp) != want:
        failures.append(f"{spec}: {len(mp)} polytope vertices, expected {want}")
    if not mp.all_marked():
        failures.append(f"{spec}: unmarked polytope vertices")
    if not has_mirrored_halves(r):
        failures.append(f"{spec}: relator halves are not letterwise inverse")
    elif not is_point_symmetric(hull.vertices, hull_symmetry_center(walk)):
        failures.append(f"{spec}: hull not symmetric about the half-walk point")
    if not mp.is_centrally_symmetric():
        failures.append(f"{spec}: polytope not centrally symmetric")
    if spec.family == GN and not fib_shape_check(spec.parameter):
        failures.append(f"{spec}: A/B staircases are not Fibonacci shaped")
    return failures

"""Dehn twists of the genus two surface acting on pi_1 by substitution.

The five twists ``T_a .. T_e`` and their inverses act on the free group
<w, x, y, z> through the substitution table below. A product of twists is
applied rightmost token first, so ``B (D c)^2`` sends a word ``u`` to
``T_b^-1(T_d^-1(T_c(T_d^-1(T_c(u)))))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InvalidTwistSyntax, TrivialRelator
from .words import GENERATORS, Word, exponent_sum, invert, parse_word, project, reduce

CURVES = ("a", "b", "c", "d", "e")

# generator images of right twists and their inverses; unlisted generators are fixed
_TWIST_TABLE = {
    ("a", 1): {"x": "Zx"},
    ("b", 1): {"z": "xz"},
    ("c", 1): {"x": "xwZ", "y": "ywZ"},
    ("d", 1): {"w": "Yw"},
    ("e", 1): {"y": "wy"},
    ("a", -1): {"x": "zx"},
    ("b", -1): {"z": "Xz"},
    ("c", -1): {"x": "xzW", "y": "yzW"},
    ("d", -1): {"w": "yw"},
    ("e", -1): {"y": "Wy"},
}

COMMUTATOR_XZ = parse_word("xzXZ")


@dataclass(frozen=True)
class TwistToken:
    curve: str
    power: int

    def __post_init__(self):
        if self.curve not in CURVES:
            raise ValueError(f"unknown twist curve {self.curve!r}")
        if self.power == 0:
            raise ValueError("twist power must be nonzero")

    def __str__(self):
        letter = self.curve if self.power > 0 else self.curve.upper()
        return letter if abs(self.power) == 1 else f"{letter}^{abs(self.power)}"


TwistWord = tuple  # tuple[TwistToken, ...]; empty means the identity


@dataclass(frozen=True)
class TwistEndo:
    """Endomorphism of the free group on w, x, y, z given by generator images."""

    image: Mapping[str, Word]

    def __call__(self, w: Word | str) -> Word:
        return apply(self, w)

    def matrix(self) -> list[list[int]]:
        """Abelianization: column j is the exponent vector of image(gen_j)."""
        return [
            [exponent_sum(self.image[gj], gi) for gj in GENERATORS] for gi in GENERATORS
        ]

    def serialize(self) -> str:
        return "\n".join(f"{g} -> {self.image[g]}" for g in GENERATORS)

    def __str__(self):
        return self.serialize()


def identity_endo() -> TwistEndo:
    return TwistEndo({g: parse_word(g) for g in GENERATORS})


def generator_endo(curve: str, sign: int) -> TwistEndo:
    table = _TWIST_TABLE[curve, 1 if sign > 0 else -1]
    return TwistEndo({g: reduce(parse_word(table.get(g, g))) for g in GENERATORS})


def apply(e: TwistEndo, w: Word | str) -> Word:
    """Substitute generator images letterwise and freely reduce."""
    if isinstance(w, str):
        w = parse_word(w)
    inverse_images = {}
    out = []
    for letter in w.letters:
        if letter.sign > 0:
            out.extend(e.image[letter.gen].letters)
        else:
            inv = inverse_images.get(letter.gen)
            if inv is None:
                inv = inverse_images[letter.gen] = invert(e.image[letter.gen]).letters
            out.extend(inv)
    return reduce(Word(tuple(out)))


def _expand(tw: Iterable[TwistToken], mirror: bool) -> list[tuple[str, int]]:
    steps = []
    for tok in tw:
        sign = 1 if tok.power > 0 else -1
        if mirror:
            sign = -sign
        steps.extend([(tok.curve, sign)] * abs(tok.power))
    return steps


def compose_twists(tw: Iterable[TwistToken], order: str = "right", mirror: bool = False) -> TwistEndo:
    """Collapse a twist word into one endomorphism.

    ``order="right"`` applies the rightmost token to a word first (ordinary
    function composition). ``order="left"`` and ``mirror=True`` (every twist
    replaced by its inverse) exist only for convention diagnostics.
    """
    steps = _expand(tw, mirror)
    if order == "right":
        steps.reverse()
    elif order != "left":
        raise ValueError(f"order must be 'right' or 'left', not {order!r}")
    images = {g: parse_word(g) for g in GENERATORS}
    for curve, sign in steps:
        step = generator_endo(curve, sign)
        images = {g: apply(step, images[g]) for g in GENERATORS}
    return TwistEndo(images)


def curve_image(tw: Iterable[TwistToken], curve: Word | str = COMMUTATOR_XZ, **conv) -> Word:
    return apply(compose_twists(tw, **conv), curve)


def relator_of(tw: Iterable[TwistToken], **conv) -> Word:
    """Attaching word of the 2-handle glued along the image of [x, z]."""
    tw = tuple(tw)
    r = project(curve_image(tw, **conv))
    if not r:
        raise TrivialRelator(format_twists(tw))
    return r


def inverse_twists(tw: Iterable[TwistToken]) -> tuple[TwistToken, ...]:
    return tuple(TwistToken(t.curve, -t.power) for t in reversed(tuple(tw)))


def format_twists(tw: Iterable[TwistToken]) -> str:
    return " ".join(map(str, tw))


class _TwistParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _exponent(self) -> int:
        if self._peek() != "^":
            return 1
        self.pos += 1
        self._skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start : self.pos]
        if digits in ("", "+", "-"):
            raise InvalidTwistSyntax(start, "expected an integer exponent")
        k = int(digits)
        if k == 0:
            raise InvalidTwistSyntax(start, "exponent must be nonzero")
        return k

    def sequence(self, closing: str = "") -> list[TwistToken]:
        tokens: list[TwistToken] = []
        while True:
            ch = self._peek()
            if ch == closing:
                return tokens
            if ch == "(":
                self.pos += 1
                group = self.sequence(")")
                self.pos += 1
                k = self._exponent()
                if k < 0:
                    group = list(inverse_twists(group))
                tokens.extend(group * abs(k))
            elif ch and ch.lower() in CURVES:
                self.pos += 1
                sign = 1 if ch.islower() else -1
                tokens.append(TwistToken(ch.lower(), sign * self._exponent()))
            elif ch == "":
                raise InvalidTwistSyntax(self.pos, f"missing {closing!r}")
            else:
                raise InvalidTwistSyntax(self.pos, f"unexpected {ch!r}")


def parse_twists(text: str) -> tuple[TwistToken, ...]:
    """Parse twist-word text such as ``"B (D c)^2"``.

    Lowercase letters are right twists, uppercase their inverses; ``^k``
    raises a letter or parenthesized group to an integer power.

    >>> format_twists(parse_twists("B (D c)^2"))
    'B D c D c'
    """
    return tuple(_TwistParser(text).sequence())


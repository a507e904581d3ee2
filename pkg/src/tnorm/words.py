"""Free group words over the generators w, x, y, z.

Words are written case-based: a lowercase letter is a generator and the
uppercase letter is its inverse, so ``"xyXY"`` is the commutator [x, y].

>>> str(reduce(parse_word("xzZXy")))
'y'
>>> str(cyclic_reduce(parse_word("Yxy")))
'x'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import InvalidCharacter

GENERATORS = ("w", "x", "y", "z")
HANDLEBODY_KILL = frozenset({"w", "z"})


class Letter(NamedTuple):
    gen: str
    sign: int

    def inverse(self) -> Letter:
        return Letter(self.gen, -self.sign)

    def __str__(self):
        return self.gen if self.sign > 0 else self.gen.upper()


@dataclass(frozen=True, eq=False)
class Word:
    """An immutable sequence of signed letters.

    ``reduced`` records whether free cancellation has been applied; it does
    not take part in equality, which compares letters only.
    """

    letters: tuple[Letter, ...] = ()
    reduced: bool = field(default=False)

    def __str__(self):
        return "".join(map(str, self.letters))

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.letters == other.letters
        if isinstance(other, str):
            return str(self) == other
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __invert__(self) -> Word:
        return invert(self)


def _is_reduced(letters: tuple[Letter, ...]) -> bool:
    return all(
        a.gen != b.gen or a.sign == b.sign for a, b in zip(letters, letters[1:])
    )


def word_of(letters: Iterable[Letter]) -> Word:
    letters = tuple(letters)
    return Word(letters, _is_reduced(letters))


def parse_word(text: str) -> Word:
    """Parse case-based text; the result is not reduced."""
    letters = []
    for i, ch in enumerate(text):
        low = ch.lower()
        if low not in GENERATORS:
            raise InvalidCharacter(i, ch)
        letters.append(Letter(low, 1 if ch == low else -1))
    return word_of(letters)


def _as_word(w) -> Word:
    return parse_word(w) if isinstance(w, str) else w


def _free_reduce(letters: Iterable[Letter]) -> list[Letter]:
    out: list[Letter] = []
    for letter in letters:
        if out and out[-1].gen == letter.gen and out[-1].sign != letter.sign:
            out.pop()
        else:
            out.append(letter)
    return out


def reduce(w: Word) -> Word:
    w = _as_word(w)
    if w.reduced:
        return w
    return Word(tuple(_free_reduce(w.letters)), True)


def cyclic_reduce(w: Word) -> Word:
    """Freely reduce, then peel inverse first/last pairs."""
    letters = reduce(w).letters
    lo, hi = 0, len(letters) - 1
    while lo < hi and letters[lo].gen == letters[hi].gen and letters[lo].sign != letters[hi].sign:
        lo += 1
        hi -= 1
    return Word(letters[lo : hi + 1], True)


def is_cyclically_reduced(w: Word) -> bool:
    w = _as_word(w)
    if not _is_reduced(w.letters):
        return False
    return len(w) < 2 or w.letters[0] != w.letters[-1].inverse()


def invert(w: Word) -> Word:
    w = _as_word(w)
    return Word(tuple(a.inverse() for a in reversed(w.letters)), w.reduced)


def concat(a: Word, b: Word) -> Word:
    """Reduced product a*b."""
    a, b = reduce(a), reduce(b)
    # both halves are reduced, so cancellation only happens at the seam
    left = list(a.letters)
    right = b.letters
    i = 0
    while left and i < len(right) and left[-1] == right[i].inverse():
        left.pop()
        i += 1
    return Word(tuple(left) + right[i:], True)


def exponent_sum(w: Word, g: str) -> int:
    return sum(a.sign for a in _as_word(w).letters if a.gen == g)


def exponent_vector(w: Word, gens=GENERATORS) -> tuple[int, ...]:
    w = _as_word(w)
    return tuple(exponent_sum(w, g) for g in gens)


def delete_letters(w: Word, kill=HANDLEBODY_KILL) -> Word:
    """Delete every letter on a generator in ``kill`` and freely reduce."""
    w = _as_word(w)
    return Word(tuple(_free_reduce(a for a in w.letters if a.gen not in kill)), True)


def project(w: Word, kill=HANDLEBODY_KILL) -> Word:
    """Delete the killed generators, then reduce and cyclically reduce.

    With the default ``kill={w, z}`` this maps a curve on the genus two
    surface to the attaching word of the 2-handle over the handlebody.

    >>> str(project(parse_word("ywZx")))
    'yx'
    >>> str(project(parse_word("xzXZ")))
    ''
    """
    return cyclic_reduce(delete_letters(w, kill))


def cyclic_equal(a: Word, b: Word, up_to_inversion: bool = False) -> bool:
    """True when ``a`` and ``b`` are cyclic permutations of each other."""
    sa, sb = str(_as_word(a)), str(_as_word(b))
    if len(sa) != len(sb):
        return False
    if sb in sa + sa:
        return True
    return up_to_inversion and str(invert(_as_word(b))) in sa + sa


def power(letter: str, k: int) -> Word:
    """``letter`` raised to the integer power ``k`` (``letter`` lowercase)."""
    base = Letter(letter, 1 if k > 0 else -1)
    return Word((base,) * abs(k), True)


def concat_all(words: Iterable[Word]) -> Word:
    out = Word((), True)
    for w in words:
        out = concat(out, w)
    return out

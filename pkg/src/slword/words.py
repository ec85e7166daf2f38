"""Words over a ring and the homomorphism ``pi`` into SL_2.

A word is a finite sequence of letters; letter alpha stands for the
generator ``[[0, 1], [-1, alpha]]`` and ``pi`` multiplies the generators
left to right.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

from .errors import LetterOutOfRange, MalformedInput, RingMismatch
from .ring import Element, Ring
from .sl2 import Mat2, generator, identity, mat_mul

__all__ = ["Word", "parse_word", "format_word", "pi", "prefix_images", "words_of_length",
           "walk"]

EPSILON = "e"


class Word:
    """Immutable word; letters are stored as ring codes.

    Indexing returns :class:`Element` letters, slicing returns a Word, and
    ``+`` concatenates (a trailing int or Element is appended as a letter).
    """

    __slots__ = ("ring", "codes")

    def __init__(self, ring: Ring, letters: Iterable[int | Element] = ()):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "codes", tuple(ring.code_of(x) for x in letters))

    @classmethod
    def _raw(cls, ring: Ring, codes: tuple[int, ...]) -> Word:
        w = object.__new__(cls)
        object.__setattr__(w, "ring", ring)
        object.__setattr__(w, "codes", codes)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @property
    def letters(self) -> tuple[Element, ...]:
        return tuple(Element(self.ring, c) for c in self.codes)

    def __len__(self):
        return len(self.codes)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word._raw(self.ring, self.codes[i])
        return Element(self.ring, self.codes[i])

    def __iter__(self) -> Iterator[Element]:
        return iter(self.letters)

    def __add__(self, other):
        if isinstance(other, Word):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return Word._raw(self.ring, self.codes + other.codes)
        if isinstance(other, (int, Element)):
            return Word._raw(self.ring, self.codes + (self.ring.code_of(other),))
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, (int, Element)):
            return Word._raw(self.ring, (self.ring.code_of(other),) + self.codes)
        return NotImplemented

    def reversed(self) -> Word:
        return Word._raw(self.ring, self.codes[::-1])

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.ring == other.ring and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash(self.codes)

    def __lt__(self, other: Word):
        return self.codes < other.codes

    def __repr__(self):
        return f"Word({self.ring.name}, {format_word(self)!r})"

    def __str__(self):
        return format_word(self)


def _digit_syntax(ring: Ring) -> bool:
    return ring.cardinality <= 10


def parse_word(text: str, ring: Ring, *, reduce: bool = False) -> Word:
    """Parse ``"22102"``, ``"11,4,0"`` or ``"e"`` (the empty word).

    Digit strings split into single-digit letters only when the ring has at
    most ten elements; otherwise letters must be comma separated.  Letters
    outside ``0 .. q-1`` raise LetterOutOfRange unless ``reduce`` is set, in
    which case they are reduced modulo q.
    """
    s = text.strip()
    if s == EPSILON or s == "":
        if s == "":
            raise MalformedInput("empty input; use 'e' for the empty word")
        return Word._raw(ring, ())
    if "," in s or not _digit_syntax(ring):
        tokens = [t.strip() for t in s.split(",")]
        if not all(re.fullmatch(r"-?\d+", t) for t in tokens):
            raise MalformedInput(f"cannot parse word {text!r}")
    else:
        if not re.fullmatch(r"\d+", s):
            raise MalformedInput(f"cannot parse word {text!r}")
        tokens = list(s)
    codes = []
    q = ring.cardinality
    for t in tokens:
        n = int(t)
        if 0 <= n < q:
            codes.append(n)
        elif reduce:
            codes.append(n % q)
        else:
            raise LetterOutOfRange(f"letter {n} is outside 0..{q - 1} for {ring.name}")
    return Word._raw(ring, tuple(codes))


def format_word(w: Word) -> str:
    if not w.codes:
        return EPSILON
    if _digit_syntax(w.ring):
        return "".join(str(c) for c in w.codes)
    return ",".join(str(c) for c in w.codes)


def pi(w: Word) -> Mat2:
    """Product of the generator matrices of the letters of w."""
    M = identity(w.ring)
    for c in w.codes:
        M = mat_mul(M, generator(c, w.ring))
    return M


def prefix_images(w: Word) -> list[Mat2]:
    """``[pi(w[:0]), pi(w[:1]), ..., pi(w)]`` with one product per letter."""
    out = [identity(w.ring)]
    for c in w.codes:
        out.append(mat_mul(out[-1], generator(c, w.ring)))
    return out


def words_of_length(ring: Ring, length: int) -> Iterator[Word]:
    for w, _ in walk(ring, length):
        yield w


def walk(ring: Ring, length: int, prefix: Sequence[int] = ()) -> Iterator[tuple[Word, Mat2]]:
    """All words of the given length with their images, in lexicographic order.

    Depth-first, so each word costs one matrix product on top of its prefix.
    ``prefix`` restricts the walk to words starting with those letters.
    """
    gens = [generator(c, ring) for c in range(ring.cardinality)]
    start = Word._raw(ring, tuple(prefix))
    if len(start) > length:
        return
    stack: list[tuple[tuple[int, ...], Mat2]] = [(start.codes, pi(start))]
    while stack:
        codes, M = stack.pop()
        if len(codes) == length:
            yield Word._raw(ring, codes), M
            continue
        for c in range(ring.cardinality - 1, -1, -1):
            stack.append((codes + (c,), mat_mul(M, gens[c])))

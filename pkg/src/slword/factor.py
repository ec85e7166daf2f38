"""Prime words and the unique factorization of Abar-words.

A prime word is a word in Abar none of whose proper nonempty prefixes is in
Abar.  Every w in Abar splits uniquely as ``p1 d1 p2 d2 ... pn dn p(n+1)``
with prime blocks p_i and single separator letters d_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import in_Abar
from .errors import EmptyWord, InvariantViolation, NotInAbar
from .ring import Element
from .sl2 import generator, identity, mat_mul
from .words import Word, format_word

__all__ = ["Factorization", "is_prime_word", "factorize"]


@dataclass(frozen=True)
class Factorization:
    primes: tuple[Word, ...]
    separators: tuple[Element, ...]

    @property
    def n(self) -> int:
        return len(self.separators)

    def reassemble(self) -> Word:
        w = self.primes[0]
        for delta, p in zip(self.separators, self.primes[1:]):
            w = w + delta + p
        return w

    def __str__(self):
        parts = [f"p1={format_word(self.primes[0])}"]
        for i, (delta, p) in enumerate(zip(self.separators, self.primes[1:]), start=1):
            parts.append(f"d{i}={delta}")
            parts.append(f"p{i + 1}={format_word(p)}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {
            "primes": [format_word(p) for p in self.primes],
            "separators": [d.code for d in self.separators],
            "n": self.n,
        }


def _first_abar_prefix(codes: tuple[int, ...], ring) -> int | None:
    """Length of the shortest nonempty prefix in Abar, or None."""
    M = identity(ring)
    for i, c in enumerate(codes, start=1):
        M = mat_mul(M, generator(c, ring))
        if in_Abar(M):
            return i
    return None


def is_prime_word(w: Word) -> bool:
    if not w.codes:
        raise EmptyWord("prime words are nonempty")
    return _first_abar_prefix(w.codes, w.ring) == len(w)


def factorize(w: Word) -> Factorization:
    """Greedy split: each block is the shortest Abar prefix of what remains."""
    ring = w.ring
    codes = w.codes
    primes, seps = [], []
    pos = 0
    while True:
        k = _first_abar_prefix(codes[pos:], ring)
        if k is None:
            raise NotInAbar(f"{format_word(w)} is not in Abar")
        primes.append(Word._raw(ring, codes[pos:pos + k]))
        pos += k
        if pos == len(codes):
            break
        if pos + 1 == len(codes):
            # a trailing lone letter means w was not in Abar
            raise NotInAbar(f"{format_word(w)} is not in Abar")
        seps.append(Element(ring, codes[pos]))
        pos += 1
    f = Factorization(tuple(primes), tuple(seps))
    if f.reassemble() != w:
        raise InvariantViolation("factorization does not reassemble")
    return f

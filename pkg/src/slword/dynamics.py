"""Successor dynamics on Abar^l and periodic infinite words.

Every ``w`` in Abar^l has exactly one immediate successor in Abar^l (drop
the first letter, append one) and exactly one immediate predecessor.  With
``pi(w) = [[a, b], [-1/b, 0]]`` the appended letter is ``-a/b`` and the
prepended letter is ``-a*b``.  Iterating the successor map traces out a
periodic two-sided infinite word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import in_Abar
from .errors import InvariantViolation, NotInAbar
from .sl2 import mat_order
from .words import Word, format_word, pi, walk

__all__ = [
    "OrbitInfo", "PeriodicAnalysis", "successor", "predecessor", "orbit", "all_orbits",
    "periodic_t", "cyclic_subwords",
]


@dataclass(frozen=True)
class OrbitInfo:
    representative: Word
    period: int
    cycle: tuple[Word, ...]
    period_word: Word

    def to_dict(self) -> dict:
        return {
            "representative": format_word(self.representative),
            "period": self.period,
            "cycle": [format_word(w) for w in self.cycle],
            "periodWord": format_word(self.period_word),
        }


@dataclass(frozen=True)
class PeriodicAnalysis:
    period_word: Word
    t: int
    t_prime: int
    subwords: tuple[Word, ...]

    @property
    def s(self) -> int:
        return len(self.period_word)

    def to_dict(self) -> dict:
        return {
            "periodWord": format_word(self.period_word),
            "s": self.s,
            "t": self.t,
            "tPrime": self.t_prime,
            "subwordsChecked": [format_word(w) for w in self.subwords],
        }


def _abar_entries(w: Word) -> tuple[int, int]:
    if not w.codes:
        raise NotInAbar("the empty word is not in Abar")
    M = pi(w)
    if not in_Abar(M):
        raise NotInAbar(f"{format_word(w)} is not in Abar")
    a, b, _, _ = M.codes
    return a, b


def successor(w: Word) -> Word:
    ring = w.ring
    a, b = _abar_entries(w)
    letter = ring.neg(ring.mul(a, ring.inverse(b)))
    return Word._raw(ring, w.codes[1:] + (letter,))


def predecessor(w: Word) -> Word:
    ring = w.ring
    a, b = _abar_entries(w)
    letter = ring.neg(ring.mul(a, b))
    return Word._raw(ring, (letter,) + w.codes[:-1])


def orbit(w: Word) -> OrbitInfo:
    """Successor cycle through w; the cycle's first letters spell the period."""
    _abar_entries(w)
    cycle = [w]
    cur = successor(w)
    while cur != w:
        cycle.append(cur)
        cur = successor(cur)
    period_word = Word._raw(w.ring, tuple(u.codes[0] for u in cycle))
    return OrbitInfo(w, len(cycle), tuple(cycle), period_word)


def all_orbits(ring, length: int) -> list[OrbitInfo]:
    """Every successor cycle of Abar^length, each listed once from its least member."""
    seen: set[Word] = set()
    out = []
    for w, M in walk(ring, length):
        if w in seen or not in_Abar(M):
            continue
        info = orbit(w)
        seen.update(info.cycle)
        out.append(info)
    return out


def cyclic_subwords(period_word: Word, length: int) -> list[Word]:
    """The s windows of the given length of the infinite repetition, by start offset."""
    codes, s = period_word.codes, len(period_word)
    return [Word._raw(period_word.ring, tuple(codes[(i + j) % s] for j in range(length)))
            for i in range(s)]


def _all_in_abar(words: list[Word]) -> bool:
    # the empty window counts as not in Abar
    return all(w.codes and in_Abar(pi(w)) for w in words)


def periodic_t(period_word: Word) -> PeriodicAnalysis:
    """Least t with every window of length t*s - 1 in Abar, and the order t'.

    t' is the common order of the s cyclic rotations' images and always
    works, so the scan stops there.
    """
    s = len(period_word)
    if s == 0:
        raise ValueError("period word must be nonempty")
    t_prime = mat_order(pi(period_word))
    for t in range(1, t_prime + 1):
        subs = cyclic_subwords(period_word, t * s - 1)
        if _all_in_abar(subs):
            return PeriodicAnalysis(period_word, t, t_prime, tuple(subs))
    raise InvariantViolation(f"no t <= {t_prime} works for {format_word(period_word)}")

"""Writing SL_2 elements as generator words by breadth-first search.

The search starts at the identity and right-multiplies by the generators in
letter order, level by level.  The first time an element is reached, the
path to it is the shortest word for it and, among shortest words, the
lexicographically least one.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidModulus, InvariantViolation
from .ring import IntegersMod, Ring
from .sl2 import Mat2, generator, identity, mat_mul
from .words import Word

__all__ = ["sl2_size", "group_size", "find_word", "cayley_cover", "CayleyCoverReport",
           "word_table", "DEFAULT_BFS_BUDGET"]

DEFAULT_BFS_BUDGET = 10**6


def _prime_divisors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def sl2_size(N: int) -> int:
    """``|SL_2(Z/NZ)| = N^3 prod_{p | N} (1 - 1/p^2)``."""
    if N < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {N}")
    size = N**3
    for p in _prime_divisors(N):
        size = size // (p * p) * (p * p - 1)
    return size


def group_size(ring: Ring) -> int:
    if ring.is_field:
        q = ring.cardinality
        return q * (q * q - 1)
    return sl2_size(ring.cardinality)


@dataclass(frozen=True)
class CayleyCoverReport:
    modulus: int
    group_size: int
    reached: int
    max_word_length: int
    per_length_counts: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "groupSize": self.group_size,
            "reached": self.reached,
            "maxWordLength": self.max_word_length,
            "perLengthCounts": list(self.per_length_counts),
        }


@functools.lru_cache(maxsize=8)
def _search(ring: Ring) -> tuple[dict, tuple[int, ...]]:
    """Parent links ``element -> (parent, letter)`` and the per-level histogram."""
    gens = [generator(c, ring) for c in range(ring.cardinality)]
    start = identity(ring)
    parent: dict[Mat2, tuple[Mat2 | None, int | None]] = {start: (None, None)}
    levels = [1]
    frontier = deque([start])
    while frontier:
        nxt = deque()
        # frontier order is lexicographic in the found words, so the first
        # discovery of each element is its least shortest word
        for M in frontier:
            for c, g in enumerate(gens):
                P = mat_mul(M, g)
                if P not in parent:
                    parent[P] = (M, c)
                    nxt.append(P)
        if nxt:
            levels.append(len(nxt))
        frontier = nxt
    return parent, tuple(levels)


def _check_budget(ring: Ring, budget: int | None) -> None:
    budget = DEFAULT_BFS_BUDGET if budget is None else budget
    size = group_size(ring)
    if size > budget:
        raise BudgetExceeded(f"|SL_2| = {size} exceeds the search budget of {budget}")


def find_word(M: Mat2, budget: int | None = None) -> Word:
    """Shortest, then lexicographically least, word w with ``pi(w) = M``."""
    ring = M.ring
    _check_budget(ring, budget)
    parent, _ = _search(ring)
    if M not in parent:
        raise InvariantViolation(f"{M!r} was not reached by the generators")
    letters = []
    cur = M
    while True:
        prev, c = parent[cur]
        if prev is None:
            break
        letters.append(c)
        cur = prev
    return Word._raw(ring, tuple(reversed(letters)))


def cayley_cover(N: int | Ring, budget: int | None = None) -> CayleyCoverReport:
    ring = IntegersMod(N) if isinstance(N, int) else N
    _check_budget(ring, budget)
    parent, levels = _search(ring)
    size = group_size(ring)
    if len(parent) != size:
        raise InvariantViolation(f"reached {len(parent)} of {size} elements")
    return CayleyCoverReport(ring.cardinality, size, len(parent), len(levels) - 1, levels)


def word_table(ring: Ring, budget: int | None = None) -> dict[Mat2, Word]:
    """Every element of SL_2 with its least shortest word."""
    _check_budget(ring, budget)
    parent, _ = _search(ring)
    return {M: find_word(M, budget) for M in parent}


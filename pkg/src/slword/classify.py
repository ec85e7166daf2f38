"""Matrix-based membership tests for the classes A_r / C_r and Abar / Cbar.

Over a field, ``w`` is in A_r when ``pi(w) = [[a, b], [c, d]]`` has ``b != 0``
and ``d == b*r``; C_r is the complement.  Over Z/NZ, ``w`` is in Abar when
``b`` is a unit and ``d == 0``.  Both tests only look at the second column
of ``pi(w)``, which is the image of the point ``[0; 1]``.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Union

from .errors import BudgetExceeded, NotAField, NotPrimePower
from .ring import Element, Ring, prime_power
from .sl2 import Mat2
from .words import Word, pi, walk

__all__ = [
    "Verdict", "Side", "FieldTarget", "RingTarget", "RING", "ClassLabel",
    "classify_field", "classify_ring", "classify", "in_A", "in_Abar",
    "extend_field", "extend_ring", "count_formula", "enumerate_class",
    "default_budget", "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    """Enumeration budget; the SLWORD_BUDGET environment variable overrides it."""
    env = os.environ.get("SLWORD_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class Verdict(str, enum.Enum):
    IN_A = "InA"
    IN_C = "InC"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class FieldTarget:
    """Classification against A_r over a field."""

    r: Element

    def __str__(self):
        return f"r={self.r}"


@dataclass(frozen=True)
class RingTarget:
    """Classification against Abar over Z/NZ."""

    def __str__(self):
        return "Abar"


RING = RingTarget()
Target = Union[FieldTarget, RingTarget]


@dataclass(frozen=True)
class ClassLabel:
    verdict: Verdict
    target: Target
    witness: Mat2

    @property
    def name(self) -> str:
        """Set name such as ``A_2``, ``C_0``, ``Abar`` or ``Cbar``."""
        letter = "A" if self.verdict is Verdict.IN_A else "C"
        if isinstance(self.target, FieldTarget):
            return f"{letter}_{self.target.r}"
        return f"{letter}bar"


def in_A(M: Mat2, r: int) -> bool:
    """``M [0; 1]`` is projectively ``[1; r]`` (r given as a code)."""
    ring = M.ring
    _, b, _, d = M.codes
    return ring.unit(b) and d == ring.mul(b, r)


def in_Abar(M: Mat2) -> bool:
    _, b, _, d = M.codes
    return d == 0 and M.ring.unit(b)


def _require_field(ring: Ring) -> None:
    if not ring.is_field:
        raise NotAField(f"{ring.name} is not a field; use classify_ring")


def _verdict(flag: bool) -> Verdict:
    return Verdict.IN_A if flag else Verdict.IN_C


def classify_field(w: Word, r: Element | int) -> ClassLabel:
    ring = w.ring
    _require_field(ring)
    rc = ring.code_of(r)
    M = pi(w)
    return ClassLabel(_verdict(in_A(M, rc)), FieldTarget(ring(rc)), M)


def classify_ring(w: Word) -> ClassLabel:
    """Abar membership.

    Defined for any coefficient ring; over a field it coincides with
    ``classify_field(w, 0)``.
    """
    M = pi(w)
    return ClassLabel(_verdict(in_Abar(M)), RING, M)


def classify(w: Word, target: Target) -> ClassLabel:
    if isinstance(target, FieldTarget):
        return classify_field(w, target.r)
    return classify_ring(w)


def extend_field(w: Word, r: Element | int, side: Side | str) -> Element | None:
    """The unique letter that moves w into A_r when inserted on ``side``.

    Returns None when no letter works.  On the right that happens exactly
    for w in A_r.  On the left it happens for w in C_r with ``d == 0`` and,
    when r = 0, for every w in A_0 (the bottom-right entry of
    ``pi(alpha w)`` is then ``-b != 0``).
    """
    ring = w.ring
    _require_field(ring)
    side = Side(side)
    rc = ring.code_of(r)
    M = pi(w)
    a, b, c, d = M.codes
    add, sub, mul, inverse = ring.add, ring.sub, ring.mul, ring.inverse
    member = in_A(M, rc)
    if side is Side.RIGHT:
        if member:
            return None
        # (a r - c) / (d - b r)
        return ring(mul(sub(mul(a, rc), c), inverse(sub(d, mul(b, rc)))))
    if member:
        if rc == 0:
            return None
        return ring(add(rc, inverse(rc)))
    if d == 0:
        return None
    # (b + d r) / d
    return ring(mul(add(b, mul(d, rc)), inverse(d)))


def extend_ring(w: Word, side: Side | str) -> Element | None:
    """Unique letter putting ``alpha w`` (left) or ``w beta`` (right) into Abar.

    None when w is already in Abar or when ``d`` is not a unit.
    """
    ring = w.ring
    side = Side(side)
    M = pi(w)
    if in_Abar(M):
        return None
    _, b, c, d = M.codes
    if not ring.unit(d):
        return None
    dinv = ring.inverse(d)
    if side is Side.LEFT:
        return ring(ring.mul(b, dinv))
    return ring(ring.mul(ring.neg(c), dinv))


def count_formula(q: int, l: int) -> tuple[int, int]:
    """``(|A_r^l|, |C_r^l|)`` over a field with q elements."""
    if prime_power(q) is None:
        raise NotPrimePower(f"{q} is not a prime power")
    if l < 0:
        raise ValueError("length must be >= 0")
    sign = -1 if l % 2 else 1
    num_a, num_c = q**l - sign, q ** (l + 1) + sign
    if num_a % (q + 1) or num_c % (q + 1):
        raise ArithmeticError("count formula is not integral")  # cannot happen
    return num_a // (q + 1), num_c // (q + 1)


def enumerate_class(ring: Ring, target: Target, l: int, verdict: Verdict | str = Verdict.IN_A,
                    budget: int | None = None) -> list[Word]:
    """All words of length l with the given verdict, in lexicographic order."""
    verdict = Verdict(verdict)
    if verdict is Verdict.UNKNOWN:
        raise ValueError("only InA or InC can be enumerated")
    budget = default_budget() if budget is None else budget
    if ring.cardinality ** l > budget:
        raise BudgetExceeded(f"{ring.cardinality}^{l} words exceed the budget of {budget}")
    if isinstance(target, FieldTarget):
        _require_field(ring)
        rc = ring.code_of(target.r)
        test = lambda M: in_A(M, rc)  # noqa: E731
    else:
        test = in_Abar
    want = verdict is Verdict.IN_A
    return [w for w, M in walk(ring, l) if test(M) == want]

"""Rewrite-rule classifiers.

Over a field the two prefix rules always apply to words of length >= 2, so
repeated rewriting reaches a word of length <= 1 whose class is read off
directly.  Over Z/NZ a prefix letter that is a nonzero zero divisor blocks
the rules; the verdict is then ``Unknown`` and the stuck word is recorded.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .classify import RING, ClassLabel, FieldTarget, Target, Verdict, _require_field
from .errors import WordTooShort
from .ring import Element
from .words import Word, format_word, pi

__all__ = [
    "Rule", "RewriteStep", "ReductionTrace",
    "reduce_step_field", "classify_by_rewrite_field",
    "reduce_step_ring", "classify_by_rewrite_ring",
]


class Rule(str, enum.Enum):
    FIELD_PREFIX = "FieldPrefix"
    FIELD_DROP_TO_R0 = "FieldDropToR0"
    RING_UNIT_PREFIX = "RingUnitPrefix"
    RING_ZERO_PREFIX = "RingZeroPrefix"
    BASE_EMPTY = "BaseEmpty"
    BASE_SINGLE = "BaseSingle"


def _rel(target: Target) -> str:
    return f"~_{target.r}" if isinstance(target, FieldTarget) else "~"


def _set(verdict: Verdict, target: Target) -> str:
    letter = "A" if verdict is Verdict.IN_A else "C"
    return f"{letter}_{target.r}" if isinstance(target, FieldTarget) else f"{letter}bar"


@dataclass(frozen=True)
class RewriteStep:
    """One application of a rule.

    ``alpha``/``beta`` are the consumed prefix letters and ``gamma`` the
    replacement letter, each present only for rules that have them.  Base
    steps have ``before == after``.
    """

    rule: Rule
    before: Word
    after: Word
    param_before: Target
    param_after: Target
    alpha: Optional[int] = None
    beta: Optional[int] = None
    gamma: Optional[int] = None

    def notation(self) -> str:
        b, a = format_word(self.before), format_word(self.after)
        if self.rule is Rule.FIELD_PREFIX:
            return f"{b} {_rel(self.param_before)} {a} [gamma={self.gamma}]"
        if self.rule is Rule.FIELD_DROP_TO_R0:
            r = self.param_before.r
            return f"{b} in A_{r} <=> {a} in A_0 [prefix {r}{self.beta} dropped]"
        if self.rule is Rule.RING_UNIT_PREFIX:
            return f"{b} ~ {a} [gamma={self.gamma}]"
        if self.rule is Rule.RING_ZERO_PREFIX:
            return f"{b} ~ {a} [prefix 0{self.beta} dropped]"
        return b

    def to_dict(self) -> dict:
        def param(t: Target):
            return {"r": t.r.code} if isinstance(t, FieldTarget) else "Abar"

        d = {
            "rule": self.rule.value,
            "before": format_word(self.before),
            "after": format_word(self.after),
            "parameterBefore": param(self.param_before),
            "parameterAfter": param(self.param_after),
        }
        gamma_key = "replacement" if self.rule is Rule.RING_UNIT_PREFIX else "gamma"
        for k, v in (("alpha", self.alpha), ("beta", self.beta), (gamma_key, self.gamma)):
            if v is not None:
                d[k] = v
        return d


@dataclass(frozen=True)
class ReductionTrace:
    """Rewrite steps followed by the base step that decided the verdict.

    ``steps`` holds only the shortening rewrites, so a word of length <= 1
    has an empty ``steps``.  ``base`` is None exactly when the verdict is
    Unknown, in which case ``stuck`` is the word no rule applies to.
    """

    steps: tuple[RewriteStep, ...]
    verdict: Verdict
    base: Optional[RewriteStep] = None
    stuck: Optional[Word] = None

    def words(self) -> list[Word]:
        """The input followed by every intermediate word."""
        if not self.steps:
            end = self.base.before if self.base else self.stuck
            return [end] if end is not None else []
        return [self.steps[0].before] + [s.after for s in self.steps]

    def lines(self) -> list[str]:
        out = [s.notation() for s in self.steps]
        if self.base is not None:
            out.append(f"{format_word(self.base.before)} in "
                       f"{_set(self.verdict, self.base.param_before)} [{self.base.rule.value}]")
        elif self.stuck is not None:
            out.append(f"{format_word(self.stuck)} not reducible [zero-divisor prefix "
                       f"{self.stuck.codes[0]}]")
        out.append(self.verdict.value)
        return out

    def to_dict(self) -> dict:
        return {
            "steps": [s.to_dict() for s in self.steps],
            "base": self.base.to_dict() if self.base else None,
            "stuck": format_word(self.stuck) if self.stuck is not None else None,
            "finalVerdict": self.verdict.value,
        }


def reduce_step_field(w: Word, r: Element | int) -> RewriteStep:
    """Rewrite ``alpha beta x`` to ``gamma x`` (alpha != r) or to ``x`` at r = 0."""
    ring = w.ring
    _require_field(ring)
    if len(w) < 2:
        raise WordTooShort("field rewrite needs at least two letters")
    rc = ring.code_of(r)
    alpha, beta = w.codes[0], w.codes[1]
    x = w.codes[2:]
    here = FieldTarget(ring(rc))
    if alpha == rc:
        return RewriteStep(Rule.FIELD_DROP_TO_R0, w, Word._raw(ring, x), here,
                           FieldTarget(ring(0)), alpha=alpha, beta=beta)
    add, sub, mul = ring.add, ring.sub, ring.mul
    # (r^2 - (alpha - beta) r + 1 - alpha beta) / (r - alpha)
    num = add(sub(mul(rc, rc), mul(sub(alpha, beta), rc)), sub(ring.one, mul(alpha, beta)))
    gamma = mul(num, ring.inverse(sub(rc, alpha)))
    return RewriteStep(Rule.FIELD_PREFIX, w, Word._raw(ring, (gamma,) + x), here, here,
                       alpha=alpha, beta=beta, gamma=gamma)


def _field_base(w: Word, rc: int) -> tuple[RewriteStep, Verdict]:
    t = FieldTarget(w.ring(rc))
    if not w.codes:
        return RewriteStep(Rule.BASE_EMPTY, w, w, t, t), Verdict.IN_C
    (alpha,) = w.codes
    v = Verdict.IN_A if alpha == rc else Verdict.IN_C
    return RewriteStep(Rule.BASE_SINGLE, w, w, t, t, alpha=alpha), v


def classify_by_rewrite_field(w: Word, r: Element | int) -> tuple[ClassLabel, ReductionTrace]:
    """Classify w against A_r using only the rewrite rules.

    The verdict never depends on ``pi(w)``; the matrix is computed afterwards
    only to fill the label's witness.
    """
    ring = w.ring
    _require_field(ring)
    r0 = ring.code_of(r)
    rc, cur, steps = r0, w, []
    while len(cur) >= 2:
        step = reduce_step_field(cur, rc)
        steps.append(step)
        cur, rc = step.after, step.param_after.r.code
    base, verdict = _field_base(cur, rc)
    trace = ReductionTrace(tuple(steps), verdict, base=base)
    return ClassLabel(verdict, FieldTarget(ring(r0)), pi(w)), trace


def reduce_step_ring(w: Word) -> Optional[RewriteStep]:
    """Rewrite ``alpha beta x``; returns None if alpha is a nonzero zero divisor."""
    ring = w.ring
    if len(w) < 2:
        raise WordTooShort("ring rewrite needs at least two letters")
    alpha, beta = w.codes[0], w.codes[1]
    x = w.codes[2:]
    if alpha == 0:
        return RewriteStep(Rule.RING_ZERO_PREFIX, w, Word._raw(ring, x), RING, RING,
                           alpha=alpha, beta=beta)
    if ring.unit(alpha):
        gamma = ring.sub(beta, ring.inverse(alpha))
        return RewriteStep(Rule.RING_UNIT_PREFIX, w, Word._raw(ring, (gamma,) + x), RING, RING,
                           alpha=alpha, beta=beta, gamma=gamma)
    return None


def classify_by_rewrite_ring(w: Word) -> tuple[Verdict, ReductionTrace]:
    """Partial Abar classifier; Unknown when a zero-divisor prefix blocks it."""
    cur, steps = w, []
    while len(cur) >= 2:
        step = reduce_step_ring(cur)
        if step is None:
            return Verdict.UNKNOWN, ReductionTrace(tuple(steps), Verdict.UNKNOWN, stuck=cur)
        steps.append(step)
        cur = step.after
    if not cur.codes:
        base, v = RewriteStep(Rule.BASE_EMPTY, cur, cur, RING, RING), Verdict.IN_C
    else:
        (alpha,) = cur.codes
        base = RewriteStep(Rule.BASE_SINGLE, cur, cur, RING, RING, alpha=alpha)
        v = Verdict.IN_A if alpha == 0 else Verdict.IN_C
    return v, ReductionTrace(tuple(steps), v, base=base)

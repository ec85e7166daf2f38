"""2x2 matrices of determinant one over a :class:`~slword.ring.Ring`."""

from __future__ import annotations

from typing import Union

from .errors import InvariantViolation, MalformedInput, NotInSL2, RingMismatch
from .ring import Element, Ring

__all__ = ["Mat2", "identity", "generator", "mat_mul", "mat_inv", "mat_pow", "mat_order",
           "parse_matrix"]

Entry = Union[int, Element]


class Mat2:
    """``[[a, b], [c, d]]`` with ``a*d - b*c == 1``.

    Entries are stored as ring codes; the ``a``/``b``/``c``/``d`` properties
    return :class:`Element` values.  Equality and hashing are structural, so
    matrices can key dictionaries.
    """

    __slots__ = ("ring", "codes")

    def __init__(self, ring: Ring, a: Entry, b: Entry, c: Entry, d: Entry, *, check: bool = True):
        codes = tuple(ring.code_of(x) for x in (a, b, c, d))
        if check:
            det = ring.sub(ring.mul(codes[0], codes[3]), ring.mul(codes[1], codes[2]))
            if det != ring.one:
                raise NotInSL2(f"determinant of {codes} is {det}, not 1")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "codes", codes)

    @classmethod
    def _raw(cls, ring: Ring, codes: tuple[int, int, int, int]) -> Mat2:
        m = object.__new__(cls)
        object.__setattr__(m, "ring", ring)
        object.__setattr__(m, "codes", codes)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    a = property(lambda self: Element(self.ring, self.codes[0]))
    b = property(lambda self: Element(self.ring, self.codes[1]))
    c = property(lambda self: Element(self.ring, self.codes[2]))
    d = property(lambda self: Element(self.ring, self.codes[3]))

    def det(self) -> Element:
        r, (a, b, c, d) = self.ring, self.codes
        return Element(r, r.sub(r.mul(a, d), r.mul(b, c)))

    def __matmul__(self, other: Mat2) -> Mat2:
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.ring == other.ring and self.codes == other.codes

    def __hash__(self):
        return hash(self.codes)

    def rows(self) -> list[list[int]]:
        a, b, c, d = self.codes
        return [[a, b], [c, d]]

    def __repr__(self):
        return f"Mat2({self.ring.name}, {self.rows()})"

    def __str__(self):
        return ",".join(str(x) for x in self.codes)


def identity(ring: Ring) -> Mat2:
    return Mat2._raw(ring, (ring.one, ring.zero, ring.zero, ring.one))


def generator(alpha: Element | int, ring: Ring | None = None) -> Mat2:
    """The generator ``[[0, 1], [-1, alpha]]`` indexed by the letter alpha."""
    if ring is None:
        ring = alpha.ring
    return Mat2._raw(ring, (ring.zero, ring.one, ring.minus_one(), ring.code_of(alpha)))


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    r = A.ring
    if B.ring != r:
        raise RingMismatch(f"{A.ring} vs {B.ring}")
    a, b, c, d = A.codes
    e, f, g, h = B.codes
    add, mul = r.add, r.mul
    return Mat2._raw(r, (add(mul(a, e), mul(b, g)), add(mul(a, f), mul(b, h)),
                         add(mul(c, e), mul(d, g)), add(mul(c, f), mul(d, h))))


def mat_inv(A: Mat2) -> Mat2:
    """Adjugate ``[[d, -b], [-c, a]]``; exact because det = 1."""
    r = A.ring
    a, b, c, d = A.codes
    return Mat2._raw(r, (d, r.neg(b), r.neg(c), a))


def mat_pow(A: Mat2, n: int) -> Mat2:
    if n < 0:
        return mat_pow(mat_inv(A), -n)
    result, base = identity(A.ring), A
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        n >>= 1
    return result


def mat_order(A: Mat2) -> int:
    """Smallest n >= 1 with A^n = I."""
    one = identity(A.ring)
    # |SL_2| < q^3 for every finite coefficient ring used here
    cap = A.ring.cardinality ** 3
    P = A
    for n in range(1, cap + 1):
        if P == one:
            return n
        P = mat_mul(P, A)
    raise InvariantViolation(f"order of {A!r} exceeds {cap}")


def parse_matrix(text: str, ring: Ring) -> Mat2:
    """Parse the row-major form ``a,b,c,d``."""
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 4:
        raise MalformedInput(f"matrix needs four entries a,b,c,d, got {text!r}")
    try:
        vals = [int(t) for t in parts]
    except ValueError:
        raise MalformedInput(f"non-integer matrix entry in {text!r}") from None
    if any(not 0 <= v < ring.cardinality for v in vals):
        raise MalformedInput(f"matrix entries must be codes 0..{ring.cardinality - 1}")
    return Mat2(ring, *(Element(ring, v) for v in vals))

"""Exact arithmetic in Z/NZ and in finite fields GF(p^m).

Every ring element has an integer *code* in ``0 .. cardinality - 1``.  For
Z/NZ and F_p the code is the canonical residue.  For GF(p^m) the code is the
base-p expansion of the coefficient vector, low coefficient first, so
``x + 1`` over F_2 is code 3.  Codes double as word letters.

Rings do their arithmetic on codes (``ring.add(3, 5)``); :class:`Element`
wraps a code together with its ring for the user-facing API.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

from .errors import (
    InvalidModulus,
    NotAUnit,
    NotPrime,
    ReduciblePolynomial,
    RingMismatch,
)

__all__ = [
    "Ring",
    "IntegersMod",
    "PrimeField",
    "ExtensionField",
    "Element",
    "ring_make",
    "is_unit",
    "inv",
    "is_prime",
    "prime_power",
    "xgcd",
]

# tables for GF(p^m) are precomputed up to this many elements
_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return (p, m) if q == 1 else None


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class Ring:
    """Common interface of the three coefficient structures.

    Subclasses implement the code-level arithmetic.  Instances are immutable
    and compare structurally.
    """

    cardinality: int
    is_field: bool

    # -- code arithmetic -------------------------------------------------
    def add(self, x: int, y: int) -> int:
        raise NotImplementedError

    def sub(self, x: int, y: int) -> int:
        raise NotImplementedError

    def mul(self, x: int, y: int) -> int:
        raise NotImplementedError

    def neg(self, x: int) -> int:
        raise NotImplementedError

    def unit(self, x: int) -> bool:
        raise NotImplementedError

    def inverse(self, x: int) -> int:
        raise NotImplementedError

    zero = 0
    one = 1

    def minus_one(self) -> int:
        return self.neg(1)

    # -- elements --------------------------------------------------------
    def __call__(self, value: Union[int, Sequence[int], "Element"]) -> Element:
        return Element(self, self.code_of(value))

    def code_of(self, value) -> int:
        """Canonical code of an int, Element, or (GF(p^m) only) coefficient vector.

        Integers are letter codes: reduced mod N for Z/NZ and F_p, required to
        lie in ``0 .. q-1`` for GF(p^m).
        """
        if isinstance(value, Element):
            if value.ring != self:
                raise RingMismatch(f"{value!r} does not belong to {self}")
            return value.code
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot interpret {value!r} as an element of {self}")
        return self.reduce(value)

    def reduce(self, n: int) -> int:
        raise NotImplementedError

    def elements(self) -> Iterator[Element]:
        for code in range(self.cardinality):
            yield Element(self, code)

    def units(self) -> list[int]:
        return [x for x in range(self.cardinality) if self.unit(x)]

    def value_of(self, code: int):
        return code

    @property
    def name(self) -> str:
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class IntegersMod(Ring):
    """The ring Z/NZ, N >= 2."""

    N: int

    def __post_init__(self) -> None:
        if isinstance(self.N, bool) or not isinstance(self.N, int) or self.N < 2:
            raise InvalidModulus(f"modulus must be an integer >= 2, got {self.N!r}")

    @property
    def cardinality(self) -> int:
        return self.N

    @property
    def is_field(self) -> bool:
        return is_prime(self.N)

    def add(self, x, y):
        return (x + y) % self.N

    def sub(self, x, y):
        return (x - y) % self.N

    def mul(self, x, y):
        return (x * y) % self.N

    def neg(self, x):
        return -x % self.N

    def unit(self, x):
        return xgcd(x, self.N)[0] == 1

    def inverse(self, x):
        g, s, _ = xgcd(x, self.N)
        if g != 1:
            raise NotAUnit(f"{x} is not invertible modulo {self.N}")
        return s % self.N

    def reduce(self, n):
        return n % self.N

    @property
    def name(self) -> str:
        return f"Z/{self.N}Z"

    def describe(self) -> dict:
        return {"kind": "IntegersMod", "N": self.N, "cardinality": self.N}


@dataclass(frozen=True)
class PrimeField(IntegersMod):
    """F_p; same arithmetic as Z/pZ but the primality is checked up front."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not is_prime(self.N):
            raise NotPrime(f"{self.N} is not prime")

    @property
    def p(self) -> int:
        return self.N

    @property
    def is_field(self) -> bool:
        return True

    @property
    def name(self) -> str:
        return f"F_{self.N}"

    def describe(self) -> dict:
        return {"kind": "PrimeField", "p": self.N, "cardinality": self.N}


# -- polynomials over F_p, coefficient tuples low degree first -------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the *monic* polynomial m over F_p."""
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * mi) % p
        _trim(a)
    return a


def _monic_polys(p: int, deg: int) -> Iterator[tuple[int, ...]]:
    for low in itertools.product(range(p), repeat=deg):
        yield tuple(low) + (1,)


def _has_root(poly: Sequence[int], p: int) -> bool:
    for x in range(p):
        if sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p == 0:
            return True
    return False


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg/2."""
    m = len(poly) - 1
    if m <= 3:
        return not _has_root(poly, p)
    for d in range(1, m // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


@dataclass(frozen=True)
class ExtensionField(Ring):
    """GF(p^m) as F_p[x] / (modulus), modulus monic irreducible of degree m.

    ``modulus`` lists coefficients c0, c1, ..., cm (low first, cm == 1).
    """

    p: int
    modulus: tuple[int, ...]
    _tables: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        mod = tuple(int(c) % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) < 3:
            raise ReduciblePolynomial("extension modulus must have degree >= 2")
        if mod[-1] != 1:
            raise ReduciblePolynomial(f"modulus {list(mod)} is not monic of degree {len(mod) - 1}")
        if not is_irreducible(mod, self.p):
            raise ReduciblePolynomial(f"modulus {list(mod)} is reducible over F_{self.p}")
        if self.cardinality <= _TABLE_LIMIT:
            object.__setattr__(self, "_tables", self._build_tables())

    @property
    def m(self) -> int:
        return len(self.modulus) - 1

    @property
    def cardinality(self) -> int:
        return self.p ** self.m

    is_field = True

    # code <-> coefficient vector
    def coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def encode(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + c % self.p
        return code

    def value_of(self, code: int) -> tuple[int, ...]:
        return self.coeffs(code)

    def code_of(self, value) -> int:
        if isinstance(value, (tuple, list)):
            if len(value) > self.m:
                value = _poly_mod(value, self.modulus, self.p)
            return self.encode(value)
        return super().code_of(value)

    def reduce(self, n: int) -> int:
        if not 0 <= n < self.cardinality:
            raise ValueError(f"{n} is not a code of {self.name} (0..{self.cardinality - 1})")
        return n

    def _raw_mul(self, x: int, y: int) -> int:
        a, b = self.coeffs(x), self.coeffs(y)
        prod = [0] * (2 * self.m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        return self.encode(_poly_mod(prod, self.modulus, self.p))

    def _raw_add(self, x: int, y: int) -> int:
        a, b = self.coeffs(x), self.coeffs(y)
        return self.encode([u + v for u, v in zip(a, b)])

    def _raw_neg(self, x: int) -> int:
        return self.encode([-c for c in self.coeffs(x)])

    def _build_tables(self) -> dict:
        q = self.cardinality
        add = [[self._raw_add(x, y) for y in range(q)] for x in range(q)]
        mul = [[self._raw_mul(x, y) for y in range(q)] for x in range(q)]
        neg = [self._raw_neg(x) for x in range(q)]
        inv = [0] * q
        for x in range(1, q):
            inv[x] = mul[x].index(1)
        return {"add": add, "mul": mul, "neg": neg, "inv": inv}

    def add(self, x, y):
        t = self._tables
        return t["add"][x][y] if t else self._raw_add(x, y)

    def neg(self, x):
        t = self._tables
        return t["neg"][x] if t else self._raw_neg(x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        t = self._tables
        return t["mul"][x][y] if t else self._raw_mul(x, y)

    def unit(self, x):
        return x != 0

    def inverse(self, x):
        if x == 0:
            raise NotAUnit("zero has no inverse")
        t = self._tables
        if t:
            return t["inv"][x]
        # x^(q-2) by square-and-multiply
        result, base, e = 1, x, self.cardinality - 2
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    @property
    def name(self) -> str:
        return f"GF({self.p}^{self.m})"

    def describe(self) -> dict:
        return {
            "kind": "ExtensionField",
            "p": self.p,
            "m": self.m,
            "modulus": list(self.modulus),
            "cardinality": self.cardinality,
        }


class Element:
    """An immutable ring element: a ring plus a canonical code."""

    __slots__ = ("ring", "code")

    def __init__(self, ring: Ring, code: int):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @property
    def value(self):
        """Residue for Z/NZ and F_p, coefficient tuple for GF(p^m)."""
        return self.ring.value_of(self.code)

    def _other(self, other) -> int:
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.code
        if isinstance(other, int):
            return self.ring.reduce(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Element(self.ring, self.ring.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Element(self.ring, self.ring.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Element(self.ring, self.ring.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Element(self.ring, self.ring.mul(self.code, o))

    __rmul__ = __mul__

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.code))

    def is_unit(self) -> bool:
        return self.ring.unit(self.code)

    def inv(self) -> Element:
        return Element(self.ring, self.ring.inverse(self.code))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ring == other.ring and self.code == other.code
        if isinstance(other, int) and not isinstance(other, bool):
            return self.code == self.ring.reduce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.code))

    def __int__(self):
        return self.code

    def __index__(self):
        return self.code

    def __repr__(self):
        return f"Element({self.ring.name}, {self.value!r})"

    def __str__(self):
        return str(self.code)


def is_unit(x: Element) -> bool:
    return x.is_unit()


def inv(x: Element) -> Element:
    """Multiplicative inverse; raises NotAUnit for zero and zero divisors."""
    return x.inv()


def ring_make(mod: int | None = None, field: int | str | None = None,
              poly: Sequence[int] | None = None) -> Ring:
    """Build a ring from the same selectors the CLI uses.

    ``ring_make(mod=6)`` is Z/6Z, ``ring_make(field=3)`` is F_3 and
    ``ring_make(field="2^2", poly=[1, 1, 1])`` is GF(4) = F_2[x]/(x^2+x+1).
    """
    if (mod is None) == (field is None):
        raise ValueError("exactly one of mod or field must be given")
    if mod is not None:
        if poly is not None:
            raise ValueError("poly only applies to extension fields")
        return IntegersMod(int(mod))
    if isinstance(field, str):
        base, _, exp = field.partition("^")
        p, m = int(base), int(exp or 1)
    else:
        p, m = int(field), 1
    if m < 1:
        raise InvalidModulus(f"extension degree must be >= 1, got {m}")
    if m == 1:
        if poly is not None:
            raise ValueError("poly only applies to extension fields")
        return PrimeField(p)
    if poly is None:
        raise ValueError(f"GF({p}^{m}) needs a modulus polynomial")
    if len(poly) != m + 1:
        raise ReduciblePolynomial(f"modulus for degree {m} needs {m + 1} coefficients")
    return ExtensionField(p, tuple(poly))

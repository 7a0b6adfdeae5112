"""Laurent polynomials in the quantum parameter q with exact rational coefficients.

A value is stored densely over its support: ``offset`` is the lowest exponent
(possibly negative) and ``coeffs[i]`` is the coefficient of ``q**(offset + i)``.
Canonical form: the first and last stored coefficients are nonzero, and the
zero polynomial is ``offset == 0`` with an empty coefficient tuple.  Ordinary
polynomials in q are exactly the values with ``offset >= 0``.

Coefficients are exact rationals.  Integral values are kept as plain ``int``
(the convolutions in the kernel expansions are the hot path, and plain ints
multiply much faster than Fractions); ``fractions.Fraction`` appears only when
a denominator is genuinely needed.  The two kinds mix freely in arithmetic,
equality, and hashing.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]


def as_rational(value: Union[int, Fraction, str]) -> Rational:
    """Coerce to an exact rational, collapsing integral fractions to int.

    Accepts int, Fraction, and strings like ``"3"`` or ``"-2/7"``.  Floats are
    rejected: the engine has no floating-point mode.
    """
    if type(value) is int:
        return value
    if isinstance(value, float):
        raise TypeError("floating-point values are not supported")
    f = Fraction(value)
    return f.numerator if f.denominator == 1 else f


class QLaurent:
    """Immutable Laurent polynomial in q."""

    __slots__ = ("offset", "coeffs")

    def __init__(self, offset: int = 0, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        lo = 0
        hi = len(cs)
        while lo < hi and not cs[lo]:
            lo += 1
        while hi > lo and not cs[hi - 1]:
            hi -= 1
        if lo == hi:
            self.offset = 0
            self.coeffs = ()
        else:
            self.offset = offset + lo
            self.coeffs = tuple(cs[lo:hi])

    @classmethod
    def _trimmed(cls, offset: int, cs: list) -> "QLaurent":
        # internal fast constructor: cs entries are already exact rationals
        lo = 0
        hi = len(cs)
        while lo < hi and not cs[lo]:
            lo += 1
        while hi > lo and not cs[hi - 1]:
            hi -= 1
        self = object.__new__(cls)
        if lo == hi:
            self.offset = 0
            self.coeffs = ()
        else:
            self.offset = offset + lo
            self.coeffs = tuple(cs[lo:hi])
        return self

    @classmethod
    def const(cls, value) -> "QLaurent":
        """Constant polynomial."""
        return cls(0, (value,))

    @classmethod
    def term(cls, coeff, power: int) -> "QLaurent":
        """Single term coeff * q**power."""
        return cls(power, (coeff,))

    @classmethod
    def from_dict(cls, terms: dict) -> "QLaurent":
        """Build from a {power: coeff} mapping."""
        if not terms:
            return ZERO
        lo = min(terms)
        hi = max(terms)
        cs = [terms.get(k, 0) for k in range(lo, hi + 1)]
        return cls(lo, cs)

    # -- predicates and accessors ------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_polynomial(self) -> bool:
        """True when no negative power of q occurs (the zero value counts)."""
        return self.offset >= 0 or not self.coeffs

    def is_constant(self) -> bool:
        return not self.coeffs or (self.offset == 0 and len(self.coeffs) == 1)

    def constant_value(self) -> Rational:
        if not self.coeffs:
            return 0
        if self.offset == 0 and len(self.coeffs) == 1:
            return self.coeffs[0]
        raise ValueError("not a constant: %r" % (self,))

    def min_power(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no support")
        return self.offset

    def max_power(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no support")
        return self.offset + len(self.coeffs) - 1

    def coefficient(self, power: int) -> Rational:
        i = power - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self):
        """(power, coeff) pairs in increasing power order, nonzero only."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.offset + i, c

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QLaurent):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a:
            return other
        if not b:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(a), other.offset + len(b))
        out = [0] * (hi - lo)
        da = self.offset - lo
        for i, c in enumerate(a):
            out[da + i] = c
        db = other.offset - lo
        for i, c in enumerate(b):
            out[db + i] += c
        return QLaurent._trimmed(lo, out)

    def __neg__(self):
        if not self.coeffs:
            return self
        return QLaurent._trimmed(self.offset, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other or not self.coeffs:
                return ZERO
            return QLaurent._trimmed(self.offset, [c * other for c in self.coeffs])
        if not isinstance(other, QLaurent):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) == 1:
            c = a[0]
            return QLaurent._trimmed(
                self.offset + other.offset, [c * x for x in b]
            )
        if len(b) == 1:
            c = b[0]
            return QLaurent._trimmed(
                self.offset + other.offset, [x * c for x in a]
            )
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QLaurent._trimmed(self.offset + other.offset, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure maps ----------------------------------------------------

    def bar(self) -> "QLaurent":
        """The bar involution q -> q**-1."""
        if not self.coeffs:
            return self
        top = self.offset + len(self.coeffs) - 1
        return QLaurent._trimmed(-top, list(reversed(self.coeffs)))

    def eval_at(self, value) -> Rational:
        """Exact evaluation at a rational point.

        Evaluation at 0 is defined only for ordinary polynomials; a negative
        power of q at 0 raises ValueError.
        """
        v = as_rational(value)
        if not self.coeffs:
            return 0
        if v == 0 and self.offset < 0:
            raise ValueError("cannot evaluate a negative power of q at 0")
        acc: Rational = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        if self.offset:
            acc = acc * Fraction(v) ** self.offset if v != 0 else 0
        return as_rational(acc)

    # -- comparison and hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QLaurent):
            return self.offset == other.offset and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return self.offset == 0 and len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    def __repr__(self):
        return "QLaurent(%d, %r)" % (self.offset, self.coeffs)


ZERO = QLaurent()
ONE = QLaurent(0, (1,))
Q = QLaurent(1, (1,))


def q_power(k: int) -> QLaurent:
    """q**k for any integer k."""
    return QLaurent.term(1, k)


def signed_q_power(k: int) -> QLaurent:
    """(-q)**k for any integer k."""
    return QLaurent.term(-1 if k & 1 else 1, k)

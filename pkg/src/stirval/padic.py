"""p-adic valuations of integers, rationals and factorials.

The valuation of 0 is infinite, so results are wrapped in a small
:class:`Valuation` type that is either a finite signed integer or the
infinity element.  Finite valuations interoperate with plain ints in
comparisons and arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import DomainError

__all__ = [
    "Valuation",
    "INFINITE",
    "Prime",
    "as_prime",
    "vp_int",
    "vp_rational",
    "digit_sum",
    "vp_factorial",
]


@total_ordering
class Valuation:
    """A p-adic valuation: a finite signed integer or positive infinity.

    Infinity only ever arises as the valuation of 0.  Addition absorbs
    infinity; ordering places infinity above every finite value.
    """

    __slots__ = ("_v",)

    def __init__(self, v: int | None):
        if v is not None and not isinstance(v, int):
            raise TypeError(f"finite valuation must be an int, got {type(v).__name__}")
        self._v = v

    @classmethod
    def finite(cls, v: int) -> "Valuation":
        return cls(v)

    @property
    def is_infinite(self) -> bool:
        return self._v is None

    @property
    def value(self) -> int:
        """The finite value; raises if infinite."""
        if self._v is None:
            raise ValueError("infinite valuation has no finite value")
        return self._v

    def _coerce(self, other) -> "Valuation | None":
        if isinstance(other, Valuation):
            return other
        if isinstance(other, int):
            return Valuation(other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._v == o._v

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._v is None:
            return False  # infinity is not less than anything
        if o._v is None:
            return True
        return self._v < o._v

    def __hash__(self) -> int:
        return hash(self._v)

    def __add__(self, other) -> "Valuation":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._v is None or o._v is None:
            return INFINITE
        return Valuation(self._v + o._v)

    __radd__ = __add__

    def __sub__(self, other) -> "Valuation":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o._v is None:
            raise ValueError("cannot subtract an infinite valuation")
        if self._v is None:
            return INFINITE
        return Valuation(self._v - o._v)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return "inf" if self._v is None else str(self._v)

    def __repr__(self) -> str:
        return f"Valuation({self._v!r})"


#: The valuation of zero.
INFINITE = Valuation(None)


@dataclass(frozen=True)
class Prime:
    """A prime number, validated at construction by trial division."""

    p: int

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int) or p < 2:
            raise DomainError(f"prime must be an integer >= 2, got {p!r}")
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise DomainError(f"{p} is not prime (divisible by {d})")
            d += 1

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)


def as_prime(p: int | Prime) -> Prime:
    """Coerce an int to :class:`Prime`, validating primality."""
    return p if isinstance(p, Prime) else Prime(p)


def vp_int(p: int | Prime, n: int) -> Valuation:
    """Largest r with p**r dividing n; infinite for n = 0.  Sign is ignored."""
    q = as_prime(p).p
    if n == 0:
        return INFINITE
    n = abs(n)
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return Valuation(v)


def vp_rational(p: int | Prime, q: Fraction) -> Valuation:
    """Valuation of a rational: vp(numerator) - vp(denominator)."""
    num = vp_int(p, q.numerator)
    if num.is_infinite:
        return INFINITE
    return num - vp_int(p, q.denominator)


def digit_sum(p: int | Prime, n: int) -> int:
    """Sum of the base-p digits of n >= 0.

    Any base >= 2 is accepted; primality is not required for a digit sum.
    """
    q = p.p if isinstance(p, Prime) else p
    if not isinstance(q, int) or q < 2:
        raise DomainError(f"base must be an integer >= 2, got {q!r}")
    if n < 0:
        raise DomainError(f"digit_sum requires n >= 0, got {n}")
    s = 0
    while n:
        s += n % q
        n //= q
    return s


def vp_factorial(p: int | Prime, n: int) -> Valuation:
    """Valuation of n! via the digit-sum form (n - digit_sum(p, n)) / (p - 1)."""
    q = as_prime(p).p
    if n < 0:
        raise DomainError(f"vp_factorial requires n >= 0, got {n}")
    num = n - digit_sum(q, n)
    assert num % (q - 1) == 0
    return Valuation(num // (q - 1))

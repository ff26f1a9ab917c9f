"""Prime field scalars and binomial coefficients mod p.

Binomial coefficients are computed digit by digit in base p (Lucas'
congruence), and multinomials as telescoping products of binomials, so no
intermediate value ever leaves machine-word range.  This is what keeps
shifted instances (arguments of size a + p^d) exact without big integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_PRIME = 1 << 16


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p!r}")
    if p > MAX_PRIME:
        raise ValueError(f"modulus {p} exceeds the supported bound {MAX_PRIME}")
    return p


@dataclass(frozen=True)
class FpElement:
    """An element of the prime field F_p, stored as its representative in [0, p)."""

    value: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> "FpElement":
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        return FpElement(int(other), self.p)

    def __add__(self, other):
        other = self._coerce(other)
        return FpElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        return FpElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElement(pow(self.value, e, self.p), self.p)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0


def _digit_binom_mod(a: int, b: int, p: int) -> int:
    # a, b < p, so every factor stays below p^2 < 2^32.
    if b > a:
        return 0
    b = min(b, a - b)
    num, den = 1, 1
    for i in range(1, b + 1):
        num = num * ((a - b + i) % p) % p
        den = den * (i % p) % p
    return num * pow(den, -1, p) % p if b else 1


def binom_mod(a: int, b: int, p: int) -> int:
    """C(a, b) mod p via base-p digits; 0 when b > a or b < 0."""
    if b < 0 or b > a:
        return 0
    result = 1
    while a or b:
        ai, bi = a % p, b % p
        if bi > ai:
            return 0
        result = result * _digit_binom_mod(ai, bi, p) % p
        a //= p
        b //= p
    return result


def multinom_mod(a: int, parts, p: int) -> int:
    """a! / (a_1! ... a_s!) mod p as a telescoping product of binomials."""
    parts = list(parts)
    if any(x < 0 for x in parts) or a < 0:
        raise ValueError("multinomial arguments must be nonnegative")
    if sum(parts) != a:
        raise ValueError(f"parts {parts} do not sum to {a}")
    result, rem = 1, a
    for part in parts:
        result = result * binom_mod(rem, part, p) % p
        if result == 0:
            return 0
        rem -= part
    return result


def fp_binomial(a: int, b: int, p: int) -> FpElement:
    """Binomial coefficient C(a, b) in F_p."""
    check_prime(p)
    if a < 0 or b < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return FpElement(binom_mod(a, b, p), p)


def fp_multinomial(a: int, parts, p: int) -> FpElement:
    """Multinomial coefficient of a over parts in F_p; parts must sum to a."""
    check_prime(p)
    return FpElement(multinom_mod(a, parts, p), p)

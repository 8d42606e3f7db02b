"""Exact integer primitives: factorization, divisors, valuations and the
newform sieve multiplier."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import reduce
from math import isqrt

from .errors import NotPrimeError, PreconditionError

# gaps of the 2*3*5 wheel starting at 7
_WHEEL_GAPS = (4, 2, 4, 2, 4, 6, 2, 6)


@dataclass(frozen=True)
class FactoredInteger:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [q for q, _ in self.factors]
        if primes != sorted(set(primes)):
            raise PreconditionError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise PreconditionError("exponents must be positive")
        if reduce(lambda acc, qe: acc * qe[0] ** qe[1], self.factors, 1) != self.value:
            raise PreconditionError("factorization does not multiply out to value")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise PreconditionError(f"expected a positive integer, got {n!r}")


def factor(n: int) -> FactoredInteger:
    """Factor ``n`` by trial division over a 2-3-5 wheel.

    Intended for the sizes this package works with (at most ~10**12).
    """
    _check_positive(n)
    factors = []
    m = n
    for q in (2, 3, 5):
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            factors.append((q, e))
    q, i = 7, 0
    while q * q <= m:
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            factors.append((q, e))
        q += _WHEEL_GAPS[i]
        i = (i + 1) % 8
    if m > 1:
        factors.append((m, 1))
    return FactoredInteger(n, tuple(factors))


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    f = factor(n).factors
    return len(f) == 1 and f[0][1] == 1


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrimeError(f"{p!r} is not prime")


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes ``p`` with ``lo <= p <= hi`` (sieve of Eratosthenes)."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(range(q * q, hi + 1, q)))
    return [p for p in range(max(lo, 2), hi + 1) if sieve[p]]


def valuation(n: int, p: int) -> int:
    _check_positive(n)
    require_prime(p)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factor(n):
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def sigma0(n: int) -> int:
    count = 1
    for _, e in factor(n):
        count *= e + 1
    return count


def totient(n: int) -> int:
    result = n
    for q, _ in factor(n):
        result = result // q * (q - 1)
    return result


def mu_bar(n: int) -> int:
    """Dirichlet inverse of the divisor-count function.

    Multiplicative with value -2 at p, 1 at p**2 and 0 at higher prime
    powers, so that ``sum(mu_bar(n // d) * sigma0(d) for d | n)`` is 1 at
    ``n == 1`` and 0 otherwise.
    """
    result = 1
    for _, e in factor(n):
        if e >= 3:
            return 0
        result *= -2 if e == 1 else 1
    return result


def render_decimal(x: Fraction, digits: int = 12) -> str:
    """Render an exact rational with ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        value = Decimal(x.numerator) / Decimal(x.denominator)
    return format(value, f".{digits}g")

"""Class numbers of imaginary quadratic fields and the dihedral-form bounds.

Forms are written (a, b, c) for a x^2 + b x y + c y^2 with discriminant
b^2 - 4ac = D < 0.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .arith import factor, require_prime
from .errors import NotFundamentalDiscriminant, PreconditionError


def is_fundamental_discriminant(D: int) -> bool:
    if D == 0 or D == 1:
        return False
    if D % 4 == 1:
        return _squarefree(abs(D))
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(abs(m))
    return False


def _squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factor(n))


def _check_discriminant(D: int) -> None:
    if D >= 0 or not is_fundamental_discriminant(D):
        raise NotFundamentalDiscriminant(f"{D} is not a negative fundamental discriminant")


_class_numbers: dict[int, int] = {}
_lock = threading.Lock()


def class_number(D: int) -> int:
    """h(D) by counting reduced forms.

    A form is reduced when |b| <= a <= c, with b >= 0 whenever |b| == a or
    a == c. The search runs over b >= 0 and the divisors a of (b^2 - D)/4
    with b <= a <= sqrt((b^2 - D)/4); a form with 0 < b < a < c stands for
    both (a, b, c) and (a, -b, c).
    """
    _check_discriminant(D)
    if D in _class_numbers:
        return _class_numbers[D]
    absD = -D
    a_max = isqrt(absD // 3)
    a = np.arange(1, a_max + 1, dtype=np.int64)
    h = 0
    for b in range(absD % 2, a_max + 1, 2):
        n = (b * b + absD) // 4
        mask = (a >= max(b, 1)) & (a * a <= n) & (n % a == 0)
        for av in a[mask].tolist():
            c = n // av
            if gcd(gcd(av, b), c) != 1:
                continue
            h += 1 if (b == 0 or b == av or av == c) else 2
    with _lock:
        _class_numbers[D] = h
    return h


def seed_class_number(D: int, h: int) -> None:
    with _lock:
        _class_numbers.setdefault(D, h)


def clear_class_numbers() -> None:
    with _lock:
        _class_numbers.clear()


def class_number_items() -> list[tuple[int, int]]:
    with _lock:
        return sorted(_class_numbers.items())


def class_numbers_by_sweep(bound: int) -> np.ndarray:
    """Form counts h(-d) for every 0 <= d <= bound in one sweep.

    Enumerates primitive forms with |b| <= a <= c under the mirrored
    boundary rule (b <= 0 whenever |b| == a or a == c), binning each by its
    discriminant. Entry ``d`` of the result holds the number of classes of
    primitive forms of discriminant -d (zero where -d is not a discriminant).
    """
    counts = np.zeros(bound + 1, dtype=np.int64)
    a = 1
    while 3 * a * a <= bound:
        for b in range(-a, a + 1):
            c_lo = a
            c_hi = (bound + b * b) // (4 * a)
            if c_hi < c_lo:
                continue
            c = np.arange(c_lo, c_hi + 1, dtype=np.int64)
            keep = np.gcd(np.gcd(a, abs(b)), c) == 1
            if b > 0:
                keep &= (b != a) & (c != a)
            d = 4 * a * c[keep] - b * b
            np.add.at(counts, d, 1)
        a += 1
    return counts


@dataclass(frozen=True)
class ImagQuadField:
    """Q(sqrt(-p)) for a prime p = 3 (mod 4); its discriminant is -p."""

    p: int
    discriminant: int
    class_number: int

    @classmethod
    def for_prime(cls, p: int) -> "ImagQuadField":
        _require_three_mod_four(p)
        return cls(p, -p, class_number(-p))


def _require_odd_prime(p: int) -> None:
    require_prime(p)
    if p == 2:
        raise PreconditionError("p = 2 is not handled; need an odd prime")


def _require_three_mod_four(p: int) -> None:
    _require_odd_prime(p)
    if p % 4 != 3:
        raise PreconditionError(f"{p} is not 3 mod 4; p does not ramify as required")


@dataclass(frozen=True)
class DihedralBoundInput:
    k: int
    p: int
    n: int

    def __post_init__(self):
        if self.k < 2:
            raise PreconditionError(f"weight must be >= 2, got {self.k}")
        if self.n < 1:
            raise PreconditionError(f"level exponent must be >= 1, got {self.n}")
        _require_odd_prime(self.p)

    @property
    def m(self) -> int:
        return self.n // 2


def phi_norm(p: int, m: int) -> int:
    """Euler function of the ideal P^(2m) = p^m O_E, where p O_E = P^2.

    Equals 1 for m = 0 and p^(2m) (1 - 1/p) otherwise.
    """
    _require_three_mod_four(p)
    if m < 0:
        raise PreconditionError(f"m must be nonnegative, got {m}")
    if m == 0:
        return 1
    return p ** (2 * m - 1) * (p - 1)


def dihedral_count_bound(inp: DihedralBoundInput) -> int:
    """Upper bound for the number of dihedral newforms of level p^n.

    Zero when p = 1 (mod 4), otherwise h(-p) * phi_norm(p, n // 2). The
    weight does not enter.
    """
    if inp.p % 4 == 1:
        return 0
    return class_number(-inp.p) * phi_norm(inp.p, inp.m)


def dihedral_pair_bound(p: int, n1: int, n2: int) -> int:
    """Bound on ordered pairs of dihedral forms induced from the same field.

    Sums the per-level bound over levels p^1..p^n1 and p^1..p^n2 and
    multiplies the two totals.
    """
    if n1 < 1 or n2 < 1:
        raise PreconditionError(f"level exponents must be >= 1, got ({n1}, {n2})")
    left = sum(dihedral_count_bound(DihedralBoundInput(2, p, i)) for i in range(1, n1 + 1))
    right = sum(dihedral_count_bound(DihedralBoundInput(2, p, j)) for j in range(1, n2 + 1))
    return left * right

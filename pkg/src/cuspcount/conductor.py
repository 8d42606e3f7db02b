"""Local conductors of supercuspidal GL(2) representations and the
Rankin-Selberg conductor window.

Rank is fixed at 2 throughout; ``m`` is always the level of the
representation and ``e`` its ramification index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonSupercuspidal, PreconditionError


@dataclass(frozen=True)
class ConductorRange:
    lo: int
    hi: int

    def __post_init__(self):
        if not 2 <= self.lo <= self.hi:
            raise PreconditionError(f"invalid conductor range ({self.lo}, {self.hi})")

    def __contains__(self, c: int) -> bool:
        return self.lo <= c <= self.hi

    def __iter__(self):
        yield self.lo
        yield self.hi


@dataclass(frozen=True)
class SupercuspidalDatum:
    level: int
    ram_index: int
    conductor: int

    def __post_init__(self):
        if self.ram_index not in (1, 2) or self.level < 0:
            raise PreconditionError(f"bad level/ramification ({self.level}, {self.ram_index})")
        if Fraction(2) * (1 + Fraction(self.level, self.ram_index)) != self.conductor:
            raise PreconditionError("conductor does not match 2(1 + m/e)")
        if not self.level + 2 <= self.conductor <= 2 * self.level + 2:
            raise PreconditionError("conductor outside [m + 2, 2m + 2]")

    @classmethod
    def from_level(cls, m: int, e: int) -> "SupercuspidalDatum":
        return cls(m, e, conductor_from_level(m, e))


def conductor_from_level(m: int, e: int) -> int:
    """c = 2(1 + m/e) for a supercuspidal representation of level m."""
    if e not in (1, 2):
        raise PreconditionError(f"ramification index must be 1 or 2, got {e}")
    if m < 0:
        raise PreconditionError(f"level must be nonnegative, got {m}")
    c = 2 * (1 + Fraction(m, e))
    assert c.denominator == 1
    return int(c)


def level_range_from_conductor(c: int) -> tuple[int, int]:
    """Levels m compatible with m + 2 <= c <= 2m + 2."""
    if c < 2:
        raise PreconditionError(f"supercuspidal conductor must be >= 2, got {c}")
    return -((2 - c) // 2), c - 2


def rs_conductor_range(c1: int, c2: int) -> ConductorRange:
    """Window 2 <= c(pi1 x pi2) <= 4 c1 + 4 c2 - 12 for supercuspidal pi1, pi2."""
    if c1 < 2 or c2 < 2:
        raise PreconditionError(f"supercuspidal conductors must be >= 2, got ({c1}, {c2})")
    return ConductorRange(2, 4 * c1 + 4 * c2 - 12)


def admissible_tensor_levels(s1: int, s2: int) -> ConductorRange:
    """Level exponents n at which the tensor product of two supercuspidals
    of conductors s1, s2 can appear."""
    if s1 < 2 or s2 < 2:
        raise NonSupercuspidal(f"conductor exponents ({s1}, {s2}): supercuspidals need s >= 2")
    return rs_conductor_range(s1, s2)

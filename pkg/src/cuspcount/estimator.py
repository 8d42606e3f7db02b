"""Counting pipeline for tensor-product representations of GL(4) at level p^N.

For N = 4(n1 + n2) the count of pairs of newforms of weights k1, k2 over
levels p..p^n1 and p..p^n2, minus the dihedral same-field pairs, is a
witness for the lower bound |T_{k1,k2}(p^N)| >> p^(2 floor(N/4)).
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import require_prime
from .conductor import admissible_tensor_levels
from .dims import dim_new_sum
from .errors import HypothesisViolated, PreconditionError
from .quadratic import dihedral_pair_bound


class Caveat(str, enum.Enum):
    # the pair count includes levels p^1 and non-supercuspidal local
    # components, which the conductor window does not cover
    NON_SUPERCUSPIDAL_LEVELS_INCLUDED = "NonSupercuspidalLevelsIncluded"
    # coincidences pi1 [x] pi2 = pi1' [x] pi2' are not excluded
    PAIR_COUNT_NOT_CARDINALITY = "PairCountNotCardinality"
    DEGENERATE_COUNT = "DegenerateCount"
    LOWER_BOUND_FLOORED = "LowerBoundFloored"


@dataclass(frozen=True)
class LevelDescriptor:
    p: int
    N: int

    def __post_init__(self):
        require_prime(self.p)
        if self.p == 2:
            raise PreconditionError("p = 2 is not handled; need an odd prime")
        if self.N < 1:
            raise PreconditionError(f"level exponent must be positive, got {self.N}")


@dataclass(frozen=True)
class EstimateReport:
    k1: int
    k2: int
    p: int
    N: int
    n1: int
    n2: int
    A: int
    B: int
    pair_count: int
    dihedral_bound: int
    lower_bound: int
    normalized_ratio: Fraction
    window_ok: bool
    caveats: tuple[Caveat, ...] = field(default=())

    @property
    def dihedral_fraction(self) -> Fraction:
        if self.pair_count == 0:
            return Fraction(0)
        return Fraction(self.dihedral_bound, self.pair_count)


@dataclass(frozen=True)
class ScanFailure:
    p: int
    reason: str


def split_levels(N: int) -> tuple[int, int]:
    """Balanced split of floor(N/4) into (n1, n2) with n1 >= n2."""
    if N <= 24:
        raise HypothesisViolated(f"N must exceed 24, got {N}")
    t = N // 4
    return (t + 1) // 2, t // 2


def _check_weights(k1: int, k2: int) -> None:
    if k2 < 2 or k1 <= k2:
        raise PreconditionError(f"need k1 > k2 >= 2, got ({k1}, {k2})")


def lower_bound_count(k1: int, k2: int, level: LevelDescriptor) -> EstimateReport:
    _check_weights(k1, k2)
    p, N = level.p, level.N
    n1, n2 = split_levels(N)
    A = dim_new_sum(k1, p, n1)
    B = dim_new_sum(k2, p, n2)
    pair_count = A * B
    dihedral = dihedral_pair_bound(p, n1, n2)
    # non-dihedral twist-equivalent pairs need equal weights, so k1 > k2 rules them out
    caveats = [Caveat.NON_SUPERCUSPIDAL_LEVELS_INCLUDED, Caveat.PAIR_COUNT_NOT_CARDINALITY]
    if A == 0 or B == 0:
        caveats.append(Caveat.DEGENERATE_COUNT)
    lower = pair_count - dihedral
    if lower < 0:
        lower = 0
        caveats.append(Caveat.LOWER_BOUND_FLOORED)
    window_ok = admissible_tensor_levels(n1, n2).hi <= N
    t = N // 4
    return EstimateReport(
        k1, k2, p, N, n1, n2, A, B, pair_count, dihedral, lower,
        Fraction(lower, p ** (2 * t)), window_ok, tuple(caveats),
    )


def upper_bound_check(k1: int, k2: int, level: LevelDescriptor) -> Fraction:
    """pairCount / p^(2N): a witness that the constructible pairs are O(p^(2N))."""
    report = lower_bound_count(k1, k2, level)
    return Fraction(report.pair_count, level.p ** (2 * level.N))


def _scan_one(args: tuple[int, int, int, int]) -> EstimateReport | ScanFailure:
    k1, k2, N, p = args
    try:
        return lower_bound_count(k1, k2, LevelDescriptor(p, N))
    except PreconditionError as exc:
        return ScanFailure(p, str(exc))


def scan(
    k1: int, k2: int, N: int, primes: list[int], jobs: int = 1
) -> list[EstimateReport | ScanFailure]:
    """One report per prime, in input order.

    Bad primes produce a :class:`ScanFailure` in their slot instead of
    aborting the scan. With ``jobs > 1`` the primes are farmed out to worker
    processes; the output order does not depend on completion order.
    """
    work = [(k1, k2, N, p) for p in primes]
    if jobs <= 1 or len(work) <= 1:
        return [_scan_one(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_scan_one, work, chunksize=max(1, len(work) // (4 * jobs))))

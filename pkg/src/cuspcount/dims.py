"""Dimensions of spaces of cusp forms and newforms on Gamma_1(N)."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .arith import divisors, factor, mu_bar, render_decimal, require_prime, totient
from .errors import InvariantError, PreconditionError, WeightOutOfScope


@dataclass(frozen=True)
class Gamma1Invariants:
    """Index, covering degree, cusp counts, elliptic points and genus of X_1(N).

    ``degree`` is the degree of X_1(N) -> X(1), i.e. the index of the image
    of Gamma_1(N) in PSL_2(Z).
    """

    N: int
    index: int
    degree: int
    cusps_regular: int
    cusps_irregular: int
    eps2: int
    eps3: int
    genus: int

    @property
    def cusps(self) -> int:
        return self.cusps_regular + self.cusps_irregular

    @property
    def contains_minus_identity(self) -> bool:
        return self.N <= 2


@dataclass(frozen=True)
class DimensionKey:
    k: int
    N: int

    def __post_init__(self):
        if self.k < 2:
            raise WeightOutOfScope(f"weight {self.k} is out of scope (need k >= 2)")
        if self.N < 1:
            raise PreconditionError(f"level must be positive, got {self.N}")


# (index, degree, regular cusps, irregular cusps, eps2, eps3) for small levels
# where -I or elliptic points make the generic formula wrong.
_SMALL_LEVELS = {
    1: (1, 1, 1, 0, 1, 1),
    2: (3, 3, 2, 0, 1, 0),
    3: (8, 4, 2, 0, 0, 1),
    4: (12, 6, 2, 1, 0, 0),
}


def gamma1_invariants(N: int) -> Gamma1Invariants:
    if N < 1:
        raise PreconditionError(f"level must be positive, got {N}")
    if N in _SMALL_LEVELS:
        index, degree, reg, irr, e2, e3 = _SMALL_LEVELS[N]
    else:
        index = N * N
        for q, _ in factor(N):
            index = index // (q * q) * (q * q - 1)
        degree = index // 2
        twice_cusps = sum(totient(d) * totient(N // d) for d in divisors(N))
        reg, irr, e2, e3 = twice_cusps // 2, 0, 0, 0
    genus = 1 + Fraction(degree, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(reg + irr, 2)
    if genus.denominator != 1 or genus < 0:
        raise InvariantError(f"genus of X_1({N}) came out as {genus}")
    return Gamma1Invariants(N, index, degree, reg, irr, e2, e3, int(genus))


def _dim_cusp_closed_form(k: int, N: int) -> int:
    inv = gamma1_invariants(N)
    g = inv.genus
    if k == 2:
        return g
    if k % 2 == 0:
        dim = (k - 1) * (g - 1) + (k // 4) * inv.eps2 + (k // 3) * inv.eps3 + (k // 2 - 1) * inv.cusps
        return dim
    if inv.contains_minus_identity:
        return 0
    # odd weight: irregular cusps carry no Eisenstein series
    twice = (
        2 * (k - 1) * (g - 1)
        + 2 * (k // 3) * inv.eps3
        + (k - 2) * inv.cusps_regular
        + (k - 1) * inv.cusps_irregular
    )
    return twice // 2


_memo: dict[tuple[str, int, int], int] = {}
_memo_lock = threading.Lock()


def _memoized(kind: str, k: int, N: int, compute) -> int:
    key = (kind, k, N)
    try:
        return _memo[key]
    except KeyError:
        pass
    value = compute(k, N)
    with _memo_lock:
        _memo.setdefault(key, value)
    return value


def seed_memo(kind: str, k: int, N: int, value: int) -> None:
    """Pre-populate the in-process memo (used by the persistent cache)."""
    if kind not in ("DIM", "NEWDIM"):
        raise PreconditionError(f"unknown memo kind {kind!r}")
    with _memo_lock:
        _memo.setdefault((kind, k, N), value)


def memo_items() -> list[tuple[str, int, int, int]]:
    with _memo_lock:
        return [(kind, k, N, v) for (kind, k, N), v in _memo.items()]


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


def _key(k, N) -> DimensionKey:
    return k if isinstance(k, DimensionKey) else DimensionKey(k, N)


def dim_cusp(k: int | DimensionKey, N: int | None = None) -> int:
    """Dimension of S_k(Gamma_1(N)) over C, for k >= 2.

    Accepts either ``dim_cusp(k, N)`` or ``dim_cusp(DimensionKey(k, N))``.
    """
    key = _key(k, N)
    return _memoized("DIM", key.k, key.N, _dim_cusp_closed_form)


def _dim_new_sieve(k: int, N: int) -> int:
    total = sum(mu_bar(N // d) * dim_cusp(k, d) for d in divisors(N))
    if total < 0:
        raise InvariantError(f"negative newform dimension at k={k}, N={N}")
    return total


def dim_new(k: int | DimensionKey, N: int | None = None) -> int:
    """Dimension of the new subspace of S_k(Gamma_1(N))."""
    key = _key(k, N)
    return _memoized("NEWDIM", key.k, key.N, _dim_new_sieve)


def dim_new_sum(k: int, p: int, n: int) -> int:
    """Total newform dimension over the levels p, p**2, ..., p**n."""
    require_prime(p)
    if n < 1:
        raise PreconditionError(f"need n >= 1, got {n}")
    DimensionKey(k, 1)
    return sum(dim_new(k, p**i) for i in range(1, n + 1))


class Ratio(NamedTuple):
    exact: Fraction
    decimal: str


def newform_ratio(k: int, p: int, n: int) -> Ratio:
    """``dim_new(k, p**n) / p**(2n)`` exactly, with a decimal rendering."""
    require_prime(p)
    if n < 1:
        raise PreconditionError(f"need n >= 1, got {n}")
    value = Fraction(dim_new(k, p**n), p ** (2 * n))
    return Ratio(value, render_decimal(value))

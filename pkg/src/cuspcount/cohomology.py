"""Archimedean bookkeeping for cohomological representations of GL(4).

Cohomological parameters are pairs (w, l) describing the induced
representation J(w, l) built from discrete series D_{l_i}; the helpers here
produce them for tensor products and symmetric cubes of GL(2) cusp forms,
apply Tate twists, decide cuspidality of tensor products from declared form
types, and run the exterior-square comparison that rules out
Sym^3(pi3) x chi = pi1 [x] pi2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable

from .errors import NotCohomological, PreconditionError, WeightOne
from .quadratic import is_fundamental_discriminant

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CuspParameter:
    """A pair (w, l) with l strictly decreasing and antisymmetric.

    Positivity is imposed on the middle entry l_{m/2} (m even), and
    w + l_i must be odd for even m, even for odd m.
    """

    m: int
    w: int
    ell: tuple[int, ...]

    def __post_init__(self):
        ell = tuple(self.ell)
        object.__setattr__(self, "ell", ell)
        m = self.m
        if len(ell) != m:
            raise PreconditionError(f"expected {m} entries, got {len(ell)}")
        if any(a <= b for a, b in zip(ell, ell[1:])):
            raise PreconditionError(f"{ell} is not strictly decreasing")
        if any(ell[i] != -ell[m - 1 - i] for i in range(m)):
            raise PreconditionError(f"{ell} is not antisymmetric")
        if m % 2 == 0 and m and ell[m // 2 - 1] <= 0:
            raise PreconditionError(f"middle entry of {ell} must be positive")
        want = 1 if m % 2 == 0 else 0
        if any((self.w + x) % 2 != want for x in ell):
            raise PreconditionError(f"parity of w + l_i fails for w={self.w}, l={ell}")


@dataclass(frozen=True)
class DominantWeight:
    mu: tuple[int, ...]

    def __post_init__(self):
        mu = tuple(self.mu)
        object.__setattr__(self, "mu", mu)
        if any(a < b for a, b in zip(mu, mu[1:])):
            raise PreconditionError(f"{mu} is not nonincreasing")
        n = len(mu)
        if len({mu[i] + mu[n - 1 - i] for i in range(n)}) > 1:
            raise PreconditionError(f"{mu} is not essentially self-dual")


def dominant_weight(param: CuspParameter) -> DominantWeight:
    """Coefficient weight for J(w, l): mu_i = (l_i - (m + 1 - 2i) + w) / 2."""
    m = param.m
    twice = [param.ell[i - 1] - (m + 1 - 2 * i) + param.w for i in range(1, m + 1)]
    if any(t % 2 for t in twice):
        raise NotCohomological(f"non-integral weight from {param}")
    return DominantWeight(tuple(t // 2 for t in twice))


@dataclass(frozen=True)
class ArchClass:
    """The cohomological archimedean parameter, the Tate twist that was
    needed to reach it (0 or 1/2), and its coefficient weight."""

    parameter: CuspParameter
    twist_needed: Fraction
    weight: DominantWeight


def tensor_infinity(k1: int, k2: int) -> ArchClass:
    """Archimedean class of pi1 [x] pi2 for cusp forms of weights k1 > k2 >= 2.

    When k1 + k2 is even the product itself is not cohomological and the
    returned class describes its twist by |.|^(1/2).
    """
    if k2 < 2:
        raise PreconditionError(f"need k2 >= 2, got {k2}")
    if k1 == k2:
        raise NotCohomological("equal weights never give a cohomological tensor product")
    if k1 < k2:
        raise PreconditionError(f"need k1 > k2, got ({k1}, {k2})")
    ell = (k1 + k2 - 2, k1 - k2, k2 - k1, 2 - k1 - k2)
    odd = (k1 + k2) % 2 == 1
    param = CuspParameter(4, 0 if odd else 1, ell)
    return ArchClass(param, Fraction(0) if odd else HALF, dominant_weight(param))


def sym3_infinity(k3: int) -> ArchClass:
    if k3 < 2:
        raise WeightOne(f"symmetric cube needs weight >= 2, got {k3}")
    ell = (3 * k3 - 3, k3 - 1, 1 - k3, 3 - 3 * k3)
    even = k3 % 2 == 0
    param = CuspParameter(4, 0 if even else 1, ell)
    return ArchClass(param, Fraction(0) if even else HALF, dominant_weight(param))


def tate_twist(param: CuspParameter, s: Fraction | int) -> CuspParameter:
    """J(w, l) twisted by |.|^s: J(w + 2s, l) if s is an integer.

    Raises :class:`NotCohomological` for a proper half-integer s.
    """
    s = Fraction(s)
    if (2 * s).denominator != 1:
        raise PreconditionError(f"twist must be a half-integer, got {s}")
    if s.denominator != 1:
        raise NotCohomological(f"twist by |.|^{s} is not cohomological")
    return CuspParameter(param.m, param.w + 2 * int(s), param.ell)


# --- cuspidality of tensor products -----------------------------------------


@dataclass(frozen=True)
class FormDescriptor:
    """Declared type of a GL(2) cusp form.

    ``discriminant`` is set for dihedral forms (the imaginary quadratic field
    they are induced from) and ``None`` otherwise. ``twist_class`` is an
    opaque label; two non-dihedral forms with equal labels are treated as
    twists of each other.
    """

    weight: int
    discriminant: int | None = None
    twist_class: Hashable = None

    def __post_init__(self):
        if self.weight < 2:
            raise PreconditionError(f"weight must be >= 2, got {self.weight}")
        D = self.discriminant
        if D is not None and (D >= 0 or not is_fundamental_discriminant(D)):
            raise PreconditionError(f"{D} is not a negative fundamental discriminant")

    @property
    def dihedral(self) -> bool:
        return self.discriminant is not None


class NonCuspidalReason(enum.Enum):
    TWIST_EQUIVALENT = "TwistEquivalent"
    SAME_FIELD = "SameField"


@dataclass(frozen=True)
class Cuspidality:
    cuspidal: bool
    reason: NonCuspidalReason | None = None

    def __bool__(self) -> bool:
        return self.cuspidal


def cuspidality(d1: FormDescriptor, d2: FormDescriptor) -> Cuspidality:
    if d1.dihedral != d2.dihedral:
        return Cuspidality(True)
    if not d1.dihedral:
        if d1.twist_class == d2.twist_class:
            return Cuspidality(False, NonCuspidalReason.TWIST_EQUIVALENT)
        return Cuspidality(True)
    if d1.discriminant == d2.discriminant:
        return Cuspidality(False, NonCuspidalReason.SAME_FIELD)
    return Cuspidality(True)


# --- comparison with symmetric cubes ----------------------------------------


@dataclass(frozen=True)
class NoOverlap:
    case: str  # "a", "b", "c" or "d"


@dataclass(frozen=True)
class InconclusiveAtInfinity:
    """Archimedean comparison cannot exclude an overlap.

    ``conditions`` holds the necessary conditions in their usual published
    form, s = 0 and (k1 - 1)/2 == k2 == k3. ``ell_match`` records whether
    the two l-vectors really coincide, which happens exactly when
    (k1 + 1)/2 == k2 == k3; that differs from the published weight relation
    by one, so both are kept.
    """

    required_twist: Fraction
    conditions: tuple[tuple[str, bool], ...]
    ell_match: bool

    @property
    def satisfied(self) -> bool:
        return all(ok for _, ok in self.conditions)


def overlap_at_infinity(k1: int, k2: int, k3: int) -> NoOverlap | InconclusiveAtInfinity:
    """Can (pi1 [x] pi2) x |.|^s and Sym^3(pi3) agree at infinity?

    Four parity cases. In (a) and (b) exactly one side needs a half-integral
    twist to become cohomological, so they never match. In (c) k1 is even
    and the l-vectors cannot agree. In (d) the comparison is inconclusive;
    it is downgraded to :class:`NoOverlap` only when the stated weight
    relation fails and the l-vectors differ.
    """
    tensor = tensor_infinity(k1, k2)
    sym3 = sym3_infinity(k3)
    tensor_even = (k1 + k2) % 2 == 0
    k3_even = k3 % 2 == 0
    if tensor_even and k3_even:
        return NoOverlap("a")
    if not tensor_even and not k3_even:
        return NoOverlap("b")
    if k1 % 2 == 0:
        return NoOverlap("c")
    ell_match = tensor.parameter.ell == sym3.parameter.ell
    conditions = (
        ("s == 0", True),
        ("(k1-1)/2 == k2 == k3", k1 - 1 == 2 * k2 and k2 == k3),
    )
    verdict = InconclusiveAtInfinity(Fraction(0), conditions, ell_match)
    if verdict.satisfied or ell_match:
        return verdict
    return NoOverlap("d")


@dataclass(frozen=True)
class IsobaricSum:
    """Formal isobaric sum: (label, GL-dimension) pairs."""

    summands: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if any(d < 1 for _, d in self.summands):
            raise PreconditionError("GL dimensions must be positive")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(sorted((d for _, d in self.summands), reverse=True))

    @property
    def total_dim(self) -> int:
        return sum(d for _, d in self.summands)


def ext_sq_tensor() -> IsobaricSum:
    """Exterior square of pi1 [x] pi2."""
    return IsobaricSum((("Sym^2(pi1) x omega(pi2)", 3), ("Sym^2(pi2) x omega(pi1)", 3)))


def ext_sq_sym3() -> IsobaricSum:
    """Exterior square of Sym^3(pi3) x chi."""
    return IsobaricSum((("Sym^4(pi3) x chi^2 omega(pi3)", 5), ("chi^2 omega(pi3)^3", 1)))


@dataclass(frozen=True)
class Certificate:
    tensor_partition: tuple[int, ...]
    sym3_partition: tuple[int, ...]
    unmatched_dims: tuple[int, ...]
    verdict: str
    notes: tuple[str, ...] = field(default=())


def no_overlap_certificate(k1: int, k2: int, k3: int, sym4_cuspidal: bool = True) -> Certificate:
    """Show pi1 [x] pi2 != Sym^3(pi3) x chi by comparing exterior squares.

    Sym^4(pi3) is cuspidal for k3 >= 2, so the right side carries an
    indecomposable GL(5) summand. Every summand on the tensor side has
    dimension at most 3 and any further isobaric splitting only shrinks
    summands, so the GL(5) piece cannot be matched.
    """
    if k3 < 2:
        raise WeightOne(f"weight {k3} for pi3 is excluded (need k3 >= 2)")
    if k1 < 2 or k2 < 2:
        raise PreconditionError(f"weights must be >= 2, got ({k1}, {k2})")
    notes = []
    if not sym4_cuspidal:
        # a non-cuspidal Sym^4 with cuspidal Sym^3 only arises from weight one
        notes.append("declared Sym^4 non-cuspidality contradicts k3 >= 2; treated as cuspidal")
    lhs, rhs = ext_sq_tensor(), ext_sq_sym3()
    if lhs.total_dim != rhs.total_dim:
        raise PreconditionError("exterior squares of GL(4) objects must both have dimension 6")
    largest_lhs = max(lhs.dims)
    unmatched = tuple(d for d in rhs.dims if d > largest_lhs)
    verdict = "Contradiction" if unmatched else "Undecided"
    if unmatched:
        notes.append(f"no GL({unmatched[0]}) summand on the tensor side")
    return Certificate(lhs.dims, rhs.dims, unmatched, verdict, tuple(notes))

"""Dirichlet characters mod N and the character-sum dimension formula.

This is a second, independent route to dim S_k(Gamma_1(N)): sum the
Cohen-Oesterle dimension of S_k(Gamma_0(N), chi) over all characters chi mod
N with chi(-1) = (-1)**k. It shares nothing with the genus/cusp closed form
in :mod:`cuspcount.dims` apart from integer factorization.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .arith import factor
from .errors import InvariantError, WeightOutOfScope


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod ``modulus`` stored as phases in Q/Z.

    ``phases[x]`` is ``t`` with chi(x) = exp(2 pi i t), or ``None`` when
    gcd(x, modulus) > 1.
    """

    modulus: int
    phases: tuple[Fraction | None, ...]
    conductor_exponents: tuple[tuple[int, int], ...]  # (p, s_p) for p | modulus

    def __call__(self, x: int) -> complex:
        t = self.phases[x % self.modulus]
        if t is None:
            return 0j
        return cmath.exp(2j * cmath.pi * t)

    @property
    def conductor(self) -> int:
        f = 1
        for q, s in self.conductor_exponents:
            f *= q**s
        return f

    @property
    def is_trivial(self) -> bool:
        return all(t is None or t == 0 for t in self.phases)

    @property
    def is_even(self) -> bool:
        return self.phases[(-1) % self.modulus] == 0


def _primitive_root(p: int, r: int) -> int:
    """Generator of (Z/p^r)^* for an odd prime p."""
    phi_p = p - 1
    prime_divs = [q for q, _ in factor(phi_p)] if phi_p > 1 else []
    for g in range(2, p + 1):
        if all(pow(g, phi_p // q, p) != 1 for q in prime_divs):
            break
    else:
        g = 1  # only when p == 2, never reached for odd p
    if r >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _local_characters(p: int, r: int) -> list[dict[int, Fraction]]:
    """All characters of (Z/p^r)^*, as maps unit -> phase."""
    m = p**r
    units = [x for x in range(m) if x % p]
    if p != 2:
        order = m // p * (p - 1)
        g = _primitive_root(p, r)
        log = {}
        y = 1
        for a in range(order):
            log[y] = a
            y = y * g % m
        return [{x: Fraction(j * log[x], order) % 1 for x in units} for j in range(order)]
    if r == 1:
        return [{1: Fraction(0)}]
    # (Z/2^r)^* = <-1> x <5>
    order5 = m // 4
    log5 = {}
    y = 1
    for b in range(order5):
        log5[y] = b
        y = y * 5 % m
    coords = {}
    for x in units:
        a = 0 if x % 4 == 1 else 1
        coords[x] = (a, log5[x if a == 0 else (-x) % m])
    return [
        {x: (Fraction(i * coords[x][0], 2) + Fraction(j * coords[x][1], order5)) % 1 for x in units}
        for i in range(2)
        for j in range(order5)
    ]


def _local_conductor_exponent(p: int, r: int, chi: dict[int, Fraction]) -> int:
    m = p**r
    for s in range(r + 1):
        ps = p**s
        if all(t == 0 for x, t in chi.items() if (x - 1) % ps == 0):
            return s
    raise InvariantError("character is nontrivial on 1 + p^r")


def dirichlet_characters(N: int) -> list[DirichletCharacter]:
    """Every Dirichlet character mod N (there are phi(N) of them)."""
    local = []
    for p, r in factor(N):
        chars = _local_characters(p, r)
        local.append([(p, r, c, _local_conductor_exponent(p, r, c)) for c in chars])
    result = []
    for combo in product(*local):
        phases: list[Fraction | None] = []
        for x in range(N):
            if gcd(x, N) != 1:
                phases.append(None)
                continue
            t = Fraction(0)
            for p, r, chi, _ in combo:
                t += chi[x % p**r]
            phases.append(t % 1)
        if N == 1:
            phases = [Fraction(0)]
        cond = tuple((p, s) for p, _, _, s in combo)
        result.append(DirichletCharacter(N, tuple(phases), cond))
    return result


def _lambda(p: int, r: int, s: int) -> int:
    if 2 * s <= r:
        if r % 2 == 0:
            half = r // 2
            return p**half + p ** (half - 1) if half >= 1 else 1
        return 2 * p ** ((r - 1) // 2)
    return 2 * p ** (r - s)


def dim_cusp_with_character(k: int, chi: DirichletCharacter) -> int:
    """dim S_k(Gamma_0(N), chi) by the Cohen-Oesterle formula (k >= 2)."""
    if k < 2:
        raise WeightOutOfScope(f"weight {k} is out of scope (need k >= 2)")
    N = chi.modulus
    if chi.is_even != (k % 2 == 0):
        return 0
    fac = factor(N).factors
    main = Fraction(k - 1, 12) * N
    for p, _ in fac:
        main *= Fraction(p + 1, p)
    cond = dict(chi.conductor_exponents)
    lam = 1
    for p, r in fac:
        lam *= _lambda(p, r, cond[p])
    eps_k = {0: Fraction(1, 4), 2: Fraction(-1, 4)}.get(k % 4, Fraction(0))
    mu_k = {0: Fraction(1, 3), 2: Fraction(-1, 3)}.get(k % 3, Fraction(0))
    sum_i = sum((chi(x) for x in range(N) if (x * x + 1) % N == 0), 0j)
    sum_rho = sum((chi(x) for x in range(N) if (x * x + x + 1) % N == 0), 0j)
    value = complex(main - Fraction(lam, 2)) + complex(eps_k) * sum_i + complex(mu_k) * sum_rho
    if k == 2 and chi.is_trivial:
        value += 1
    rounded = round(value.real)
    if abs(value - rounded) > 1e-6:
        raise InvariantError(f"non-integral character dimension {value} at k={k}, N={N}")
    return rounded


def dim_cusp_via_characters(k: int, N: int) -> int:
    """dim S_k(Gamma_1(N)) as a sum over Dirichlet characters of parity (-1)**k."""
    return sum(dim_cusp_with_character(k, chi) for chi in dirichlet_characters(N))

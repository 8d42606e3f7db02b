"""Exit criteria, one test per criterion, at the stated tolerances."""

import math
import statistics
import time
from fractions import Fraction

import pytest

from cuspcount.arith import divisors, primes_between, sigma0
from cuspcount.characters import dim_cusp_via_characters
from cuspcount.cohomology import (
    CuspParameter,
    DominantWeight,
    InconclusiveAtInfinity,
    no_overlap_certificate,
    overlap_at_infinity,
    tensor_infinity,
)
from cuspcount.conductor import conductor_from_level, level_range_from_conductor, rs_conductor_range
from cuspcount.dims import clear_memo, dim_cusp, dim_new
from cuspcount.errors import NotCohomological
from cuspcount.estimator import LevelDescriptor, lower_bound_count, upper_bound_check
from cuspcount.quadratic import (
    DihedralBoundInput,
    class_number,
    class_numbers_by_sweep,
    clear_class_numbers,
    dihedral_count_bound,
    is_fundamental_discriminant,
)

SCAN_PRIMES = [p for p in primes_between(50, 500)]


def test_01_sieve_round_trip(criterion):
    clear_memo()
    start = time.perf_counter()
    failures = [
        (k, N)
        for N in range(1, 201)
        for k in range(2, 11)
        if sum(sigma0(N // d) * dim_new(k, d) for d in divisors(N)) != dim_cusp(k, N)
    ]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    criterion("1 sieve round-trip", ok, f"{len(failures)} mismatches, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 60


def test_02_dual_formula(criterion):
    clear_memo()
    failures = [
        (k, N)
        for N in range(1, 151)
        for k in range(2, 9)
        if dim_cusp(k, N) != dim_cusp_via_characters(k, N)
    ]
    criterion("2 dual-formula dimensions", not failures, f"{len(failures)} mismatches over N<=150, 2<=k<=8")
    assert not failures


def test_03_class_number_oracle(criterion):
    bound = 10**5
    sweep = class_numbers_by_sweep(bound)
    discs = [-d for d in range(3, bound + 1) if is_fundamental_discriminant(-d)]
    failures = [D for D in discs if class_number(D) != sweep[-D]]
    spots = (class_number(-3), class_number(-7), class_number(-23)) == (1, 1, 3)
    ok = not failures and spots
    criterion("3 class-number oracle", ok, f"{len(discs)} discriminants, {len(failures)} mismatches")
    assert not failures
    assert spots


def test_04_class_number_growth(criterion):
    clear_class_numbers()
    start = time.perf_counter()
    primes = [p for p in primes_between(10**4, 10**5) if p % 4 == 3]
    ratios = [math.log(class_number(-p)) / math.log(p) for p in primes]
    med = statistics.median(ratios)
    elapsed = time.perf_counter() - start
    ok = 0.35 <= med <= 0.65 and elapsed < 300
    criterion("4 class-number growth", ok, f"median {med:.4f} over {len(primes)} primes, {elapsed:.1f}s")
    assert 0.35 <= med <= 0.65
    assert elapsed < 300


def test_05_split_primes_have_no_dihedral_forms(criterion):
    primes = [p for p in primes_between(3, 10**4) if p % 4 == 1]
    bad = [
        (p, n)
        for p in primes
        for n in range(1, 11)
        if dihedral_count_bound(DihedralBoundInput(2, p, n)) != 0
    ]
    criterion("5 zero dihedral bound for p = 1 mod 4", not bad, f"{len(primes)} primes x n<=10")
    assert not bad


def test_06_conductor_round_trip(criterion):
    bad = []
    for m in range(0, 21):
        for e in (1, 2):
            lo, hi = level_range_from_conductor(conductor_from_level(m, e))
            if not lo <= m <= hi:
                bad.append((m, e))
    window = tuple(rs_conductor_range(2, 2))
    ok = not bad and window == (2, 4)
    criterion("6 conductor round-trip", ok, f"rs(2,2)={window}")
    assert not bad
    assert window == (2, 4)


def _classifier_ok(k1, k2):
    arch = tensor_infinity(k1, k2)
    p = arch.parameter
    CuspParameter(p.m, p.w, p.ell)
    DominantWeight(arch.weight.mu)
    return all(isinstance(x, int) for x in arch.weight.mu) and all((p.w + x) % 2 == 1 for x in p.ell)


def test_07_cohomology_classifier(criterion):
    bad = [(k1, k2) for k1 in range(3, 51) for k2 in range(2, k1) if not _classifier_ok(k1, k2)]
    equal_fires = True
    for k in range(2, 51):
        try:
            tensor_infinity(k, k)
            equal_fires = False
        except NotCohomological:
            pass
    ok = not bad and equal_fires
    criterion("7 cohomology classifier", ok, f"{len(bad)} invalid, equal weights rejected: {equal_fires}")
    assert not bad
    assert equal_fires


def test_08_overlap_table(criterion):
    start = time.perf_counter()
    satisfied, expected, not_contradiction = set(), set(), []
    for k1 in range(3, 41):
        for k2 in range(2, k1):
            for k3 in range(2, 41):
                res = overlap_at_infinity(k1, k2, k3)
                if isinstance(res, InconclusiveAtInfinity) and res.satisfied:
                    satisfied.add((k1, k2, k3))
                if k1 % 2 == 1 and 2 * k2 == k1 - 1 and k3 == k2:
                    expected.add((k1, k2, k3))
                if no_overlap_certificate(k1, k2, k3, True).verdict != "Contradiction":
                    not_contradiction.append((k1, k2, k3))
    elapsed = time.perf_counter() - start
    ok = satisfied == expected and not not_contradiction and elapsed < 10
    criterion("8 overlap table", ok, f"{len(satisfied)} inconclusive-satisfied triples, {elapsed:.2f}s")
    assert satisfied == expected
    assert not not_contradiction
    assert elapsed < 10


@pytest.fixture(scope="module")
def main_scan():
    clear_memo()
    start = time.perf_counter()
    reports = [lower_bound_count(3, 2, LevelDescriptor(p, 28)) for p in SCAN_PRIMES]
    return reports, time.perf_counter() - start


def test_09_lower_bound_witness(criterion, main_scan):
    reports, elapsed = main_scan
    ratios = [r.normalized_ratio for r in reports]
    positive = all(r.lower_bound > 0 for r in reports)
    band = max(ratios) / min(ratios)
    end_ratio = ratios[-1] / ratios[0]
    dihedral = max(r.dihedral_fraction for r in reports if r.p >= 100)
    consistent = all(
        r.lower_bound <= r.pair_count and r.normalized_ratio == Fraction(r.lower_bound, r.p**14)
        for r in reports
    )
    ok = (
        positive and band <= 5 and Fraction(1, 5) <= end_ratio <= 5
        and dihedral < Fraction(1, 100) and consistent and elapsed < 120
    )
    criterion(
        "9 lower-bound growth witness",
        ok,
        f"band {float(band):.4f}, end ratio {float(end_ratio):.4f}, "
        f"max dihedral share {float(dihedral):.2e}, {elapsed:.2f}s",
    )
    assert positive
    assert band <= 5
    assert Fraction(1, 5) <= end_ratio <= 5
    assert dihedral < Fraction(1, 100)
    assert consistent
    assert elapsed < 120


def test_10_upper_bound_witness(criterion, main_scan):
    values = [upper_bound_check(3, 2, LevelDescriptor(p, 28)) for p in SCAN_PRIMES]
    below_one = all(v < 1 for v in values)
    decreasing = all(b < a for a, b in zip(values, values[1:]))
    criterion("10 upper-bound witness", below_one and decreasing, f"{len(values)} primes")
    assert below_one
    assert decreasing

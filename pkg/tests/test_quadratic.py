import math

import pytest
from hypothesis import given, strategies as st

from cuspcount.arith import primes_between
from cuspcount.errors import NotFundamentalDiscriminant, PreconditionError
from cuspcount.quadratic import (
    DihedralBoundInput,
    ImagQuadField,
    class_number,
    class_numbers_by_sweep,
    dihedral_count_bound,
    dihedral_pair_bound,
    is_fundamental_discriminant,
    phi_norm,
)
from oracles import class_number_analytic

HEEGNER = {-3, -4, -7, -8, -11, -19, -43, -67, -163}


def test_class_number_examples():
    assert class_number(-3) == 1
    assert class_number(-23) == 3
    assert class_number(-7) == 1


def test_class_number_known_table():
    assert class_number(-20) == 2
    assert class_number(-47) == 5
    assert class_number(-56) == 4
    assert class_number(-71) == 7


def test_heegner_discriminants_are_exactly_class_number_one():
    ones = {-d for d in range(3, 5000) if is_fundamental_discriminant(-d) and class_number(-d) == 1}
    assert ones == HEEGNER


@pytest.mark.parametrize("D", [-1, -12, 5, -9, 0, -16])
def test_class_number_rejects_bad_discriminants(D):
    with pytest.raises(NotFundamentalDiscriminant):
        class_number(D)


def test_sweep_agrees_up_to_20000():
    sweep = class_numbers_by_sweep(20000)
    for d in range(3, 20001):
        if is_fundamental_discriminant(-d):
            assert class_number(-d) == sweep[d], d


@pytest.mark.parametrize("p", [q for q in primes_between(5, 2000) if q % 4 == 3])
def test_class_number_against_analytic_formula(p):
    assert class_number(-p) == class_number_analytic(p)


def test_imag_quad_field():
    f = ImagQuadField.for_prime(23)
    assert (f.discriminant, f.class_number) == (-23, 3)
    with pytest.raises(PreconditionError):
        ImagQuadField.for_prime(13)


def test_phi_norm_examples():
    assert phi_norm(3, 0) == 1
    assert phi_norm(3, 1) == 6
    assert phi_norm(7, 2) == 2058
    with pytest.raises(PreconditionError):
        phi_norm(13, 1)


def test_dihedral_count_bound_examples():
    assert dihedral_count_bound(DihedralBoundInput(2, 13, 5)) == 0
    assert dihedral_count_bound(DihedralBoundInput(7, 3, 4)) == 54
    assert dihedral_count_bound(DihedralBoundInput(4, 7, 3)) == 42
    assert DihedralBoundInput(2, 7, 5).m == 2


def test_dihedral_bound_rejects_two():
    with pytest.raises(PreconditionError):
        DihedralBoundInput(2, 2, 3)


def test_dihedral_bound_independent_of_weight():
    for p in (3, 7, 11, 19):
        for n in range(1, 6):
            vals = {dihedral_count_bound(DihedralBoundInput(k, p, n)) for k in range(2, 9)}
            assert len(vals) == 1


def test_dihedral_pair_bound_examples():
    for p in (5, 13, 17, 29):
        assert dihedral_pair_bound(p, 3, 4) == 0
    assert dihedral_pair_bound(3, 2, 2) == 49
    assert dihedral_pair_bound(7, 1, 1) == 1


@given(st.sampled_from([3, 7, 11, 19, 23, 31, 43, 47]), st.integers(1, 8))
def test_dihedral_bound_nondecreasing(p, n):
    lo = dihedral_count_bound(DihedralBoundInput(2, p, n))
    hi = dihedral_count_bound(DihedralBoundInput(2, p, n + 1))
    assert lo <= hi


def test_zero_bound_for_primes_one_mod_four():
    for p in [q for q in primes_between(3, 500) if q % 4 == 1]:
        for n in range(1, 11):
            assert dihedral_count_bound(DihedralBoundInput(2, p, n)) == 0


def test_bound_exponent_order():
    primes = [q for q in primes_between(10**4, 10**4 + 2000) if q % 4 == 3]
    for p in primes:
        h = class_number(-p)
        for n in range(1, 7):
            b = dihedral_count_bound(DihedralBoundInput(2, p, n))
            assert b <= h * p ** (2 * (n // 2))
            assert math.log(b) / math.log(p) <= n + 0.7

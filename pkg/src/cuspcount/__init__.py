"""Exact dimension, class-number, conductor and archimedean bookkeeping for
counting automorphic tensor products GL(2) x GL(2) -> GL(4) at prime-power
level."""

from .arith import divisors, factor, mu_bar, sigma0, valuation
from .cohomology import (
    cuspidality,
    no_overlap_certificate,
    overlap_at_infinity,
    sym3_infinity,
    tate_twist,
    tensor_infinity,
)
from .conductor import (
    admissible_tensor_levels,
    conductor_from_level,
    level_range_from_conductor,
    rs_conductor_range,
)
from .dims import dim_cusp, dim_new, dim_new_sum, gamma1_invariants, newform_ratio
from .estimator import LevelDescriptor, lower_bound_count, scan, split_levels, upper_bound_check
from .quadratic import class_number, dihedral_count_bound, dihedral_pair_bound, phi_norm

__version__ = "0.1.0"

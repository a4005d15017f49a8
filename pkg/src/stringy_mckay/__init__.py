"""Exact stringy E-polynomials, twisted sectors and McKay checks for orbifolds."""

from .epoly import (
    MotivicClass,
    NonIntegralClassError,
    add,
    euler_characteristic,
    hodge_numbers,
    make_term,
    mul,
    tate_power,
)
from .groupoids import FiniteGroupoid, action_groupoid, inertia, pi0, validate
from .orbifold import (
    LocalQuotient,
    Sector,
    Toric,
    VerificationReport,
    WeightedProjective,
    compare_k_equivalent,
    orbifold_epoly,
    sectors_local_quotient,
    sectors_wps,
    stratify_by_isotropy,
    verify_mckay,
)
from .qz_groups import (
    MonomialElement,
    MonomialGroup,
    age,
    close_group,
    conjugacy_classes,
    eigen_angles,
    fixed_dim,
    is_sl,
    multiply,
    shift_w,
)
from .toric import (
    Cone,
    Fan,
    RefinedLattice,
    box_elements,
    cone_index,
    crepant_resolve,
    epoly_of_fan,
    is_smooth,
    lattice_from_generators,
    make_fan,
    stringy_epoly,
)

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "Fan",
    "FiniteGroupoid",
    "LocalQuotient",
    "MonomialElement",
    "MonomialGroup",
    "MotivicClass",
    "NonIntegralClassError",
    "RefinedLattice",
    "Sector",
    "Toric",
    "VerificationReport",
    "WeightedProjective",
    "action_groupoid",
    "add",
    "age",
    "box_elements",
    "close_group",
    "compare_k_equivalent",
    "cone_index",
    "conjugacy_classes",
    "crepant_resolve",
    "eigen_angles",
    "epoly_of_fan",
    "euler_characteristic",
    "fixed_dim",
    "hodge_numbers",
    "inertia",
    "is_sl",
    "is_smooth",
    "lattice_from_generators",
    "make_fan",
    "make_term",
    "mul",
    "multiply",
    "orbifold_epoly",
    "pi0",
    "sectors_local_quotient",
    "sectors_wps",
    "shift_w",
    "stratify_by_isotropy",
    "stringy_epoly",
    "tate_power",
    "validate",
    "verify_mckay",
]

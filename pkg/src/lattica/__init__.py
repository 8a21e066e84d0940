"""Finite lattices with involutions and their congruence lattices."""

from .congruence import (
    CongruenceSet,
    Signature,
    all_congruences,
    brute_force_congruences,
    conlattice_isomorphic,
    fix_constants,
    involution_image,
    is_0_regular,
    is_simple,
    principal_congruence,
    restrict_to_subuniverse,
)
from .constructions import (
    SumWitness,
    TowerFamily,
    Variant,
    aol_sandwich,
    boolean,
    bound_B,
    chain,
    check_condition_c,
    check_condition_s,
    congruence_osum,
    horizontal_sum,
    m_lattice,
    ordinal_sum,
    reversed_chain,
    sandwich,
    step,
    tower,
)
from .involution import (
    InvolutionStructure,
    classify,
    is_antiortholattice,
    is_paraorthomodular,
    is_pbz_star,
    is_pseudo_kleene,
    trivial_brouwer,
    validate_involution,
)
from .kernels import BACKEND
from .lattice import (
    FiniteLattice,
    dual,
    filters,
    from_cover_relation,
    ideals,
    is_distributive,
    is_isomorphic,
    is_modular,
)
from .partition import Partition, join_partitions

__version__ = "0.1.0"

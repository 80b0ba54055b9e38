"""Lattice-induced threshold functions for monotone Boolean analysis.

Core surfaces: the Boolean cube and its up-sets (:mod:`boolean_domain`),
canonical antichain CNF over the free distributive lattice (:mod:`fdl`),
explicit finite lattices (:mod:`finite_lattice`), lattice-valued functions
and their cuts (:mod:`lattice_valued`), threshold synthesis and the
classical feasibility test (:mod:`threshold`), and linear-combination
representability of closure systems (:mod:`representability`).
"""

from .boolean_domain import Point, UpSet, enumerate_up_sets, is_up_set, leq_points, minimal_elements
from .fdl import FdlElement, FreeDistributiveLattice, canonicalize, enumerate_elements
from .finite_lattice import FiniteLattice, verify_lattice
from .lattice_valued import (
    ClosureSystem,
    LValuedFunction,
    canonical_representation,
    cut,
    cut_collection,
    from_closure_system,
    is_l_valued_up_set,
    quotient_lattice,
    synthesize_from_closure_system,
    theta_classes,
)
from .representability import (
    RepresentabilityReport,
    check_conditions,
    extract_weights,
    is_zero_join_hom,
    synthesize_linear_representation,
    validate_closure_system_of_up_sets,
)
from .threshold import (
    BooleanFunction,
    ThresholdRepr,
    beta_bar,
    beta_bar_value,
    eval_threshold,
    is_classical_threshold,
    is_isotone,
    linear_combination,
    scalar_mult,
    synthesize_threshold,
)

__version__ = "0.1.0"

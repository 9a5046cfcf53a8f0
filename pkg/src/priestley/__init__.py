"""Priestley duality for finite distributive lattices and the Hofmann-Mislove machinery.

Sets of elements or points are bitmasks (Python ints, bit ``i`` for index
``i``); lists of such sets are kept sorted ascending so every result is
deterministic.
"""

from .duality import (
    ClosedUpset,
    PriestleyDual,
    closed_upsets,
    corollary59_check,
    dual_space,
    filter_to_k,
    filters_vs_closed_upsets,
    hm_finite_iso,
    is_s_upset,
    k_to_filter,
    lemma47_check,
    lemma51_predicates,
    open_upsets,
    reconstruct,
    spatial_via_density,
    structural_validators,
    zeta,
)
from .errors import (
    BoundExceeded,
    CycleDetected,
    FixtureMismatch,
    IndexOutOfRange,
    IsoFailure,
    NotALattice,
    NotATopology,
    NotDistributive,
    NotScottOpen,
    NotSober,
    NotT0,
    ParseError,
    PriestleyError,
    UnknownRule,
    UnsupportedTarget,
)
from .lattice import (
    Filter,
    FinLattice,
    build_lattice,
    check_distributive,
    downset_lattice,
    enumerate_filters,
    ideal_lattice,
    is_compact_element,
    is_completely_prime_finite,
    is_distributive,
    is_prime,
    is_scott_open_finite,
    lattice_of_sets,
    principal_filter,
)
from .poset import FinPoset, build_poset, enumerate_downsets, enumerate_upsets
from .report import Bijection
from .topspace import (
    FiniteTopSpace,
    alexandrov,
    build_space,
    compact_saturated,
    frame_points_finite,
    hofmann_mislove,
    is_compact,
    is_sober,
    open_frame,
    points_homeomorphism,
    specialization,
    spectral_from_priestley,
)

__all__ = [
    "Bijection",
    "BoundExceeded",
    "ClosedUpset",
    "CycleDetected",
    "Filter",
    "FinLattice",
    "FinPoset",
    "FiniteTopSpace",
    "FixtureMismatch",
    "IndexOutOfRange",
    "IsoFailure",
    "NotALattice",
    "NotATopology",
    "NotDistributive",
    "NotScottOpen",
    "NotSober",
    "NotT0",
    "ParseError",
    "PriestleyDual",
    "PriestleyError",
    "UnknownRule",
    "UnsupportedTarget",
    "alexandrov",
    "build_lattice",
    "build_poset",
    "build_space",
    "check_distributive",
    "closed_upsets",
    "compact_saturated",
    "corollary59_check",
    "downset_lattice",
    "dual_space",
    "enumerate_downsets",
    "enumerate_filters",
    "enumerate_upsets",
    "filter_to_k",
    "filters_vs_closed_upsets",
    "frame_points_finite",
    "hm_finite_iso",
    "hofmann_mislove",
    "ideal_lattice",
    "is_compact",
    "is_compact_element",
    "is_completely_prime_finite",
    "is_distributive",
    "is_prime",
    "is_s_upset",
    "is_scott_open_finite",
    "is_sober",
    "k_to_filter",
    "lattice_of_sets",
    "lemma47_check",
    "lemma51_predicates",
    "open_frame",
    "open_upsets",
    "points_homeomorphism",
    "principal_filter",
    "reconstruct",
    "spatial_via_density",
    "specialization",
    "spectral_from_priestley",
    "structural_validators",
    "zeta",
]

__version__ = "0.1.0"

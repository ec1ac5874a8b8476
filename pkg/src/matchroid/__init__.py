"""matchroid: set families induced by bipartite matchings.

Stable and maximum-weight matching instances each send a subset of left
vertices to the set of right vertices their canonical matching covers.  This
package enumerates the resulting families, checks the antimatroid axioms on
them, and builds matching instances realizing any given antimatroid, with
exhaustive oracles validating everything at desk scale.
"""

from .antimatroids import (
    AxiomDiagnostic,
    ChainDecoration,
    NotAntimatroidError,
    SetFamily,
    build_decoration,
    complement_family,
    enumerate_antimatroids,
    is_accessible,
    is_antimatroid,
    is_union_closed,
    random_antimatroid,
    validate_decoration,
)
from .graphs import (
    DEFAULT_ORACLE_LIMIT,
    BipartiteGraph,
    Component,
    Matching,
    OracleLimitError,
    UnknownVertexError,
    enumerate_matchings,
    is_matching,
    symmetric_difference_components,
)
from .induced import (
    DEFAULT_SWEEP_LIMIT,
    InducedFamilyReport,
    SweepLimitError,
    check_theorem,
    enumerate_codomain_mm,
    enumerate_codomain_sm,
)
from .representation import (
    MAX_ROUNDTRIP_MEMBERS,
    RepresentationBundle,
    represent_stable,
    represent_weighted,
    verify_roundtrip,
)
from .stable import (
    PreferenceProfile,
    StableMatchingInstance,
    choice_function_sm,
    deferred_acceptance,
    enumerate_stable_matchings,
    induced_map_sm,
    is_blocking_pair,
    is_stable,
    restrict_instance,
)
from .weighted import (
    WeightedInstance,
    WeightFunction,
    choice_function_mm,
    induced_map_mm,
    matching_weight,
    max_weight_matching,
    oracle_max_weight,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomDiagnostic",
    "BipartiteGraph",
    "ChainDecoration",
    "Component",
    "DEFAULT_ORACLE_LIMIT",
    "DEFAULT_SWEEP_LIMIT",
    "InducedFamilyReport",
    "MAX_ROUNDTRIP_MEMBERS",
    "Matching",
    "NotAntimatroidError",
    "OracleLimitError",
    "PreferenceProfile",
    "RepresentationBundle",
    "SetFamily",
    "StableMatchingInstance",
    "SweepLimitError",
    "UnknownVertexError",
    "WeightFunction",
    "WeightedInstance",
    "build_decoration",
    "check_theorem",
    "choice_function_mm",
    "choice_function_sm",
    "complement_family",
    "deferred_acceptance",
    "enumerate_antimatroids",
    "enumerate_codomain_mm",
    "enumerate_codomain_sm",
    "enumerate_matchings",
    "enumerate_stable_matchings",
    "induced_map_mm",
    "induced_map_sm",
    "is_accessible",
    "is_antimatroid",
    "is_blocking_pair",
    "is_matching",
    "is_stable",
    "is_union_closed",
    "matching_weight",
    "max_weight_matching",
    "oracle_max_weight",
    "random_antimatroid",
    "represent_stable",
    "represent_weighted",
    "restrict_instance",
    "symmetric_difference_components",
    "validate_decoration",
    "verify_roundtrip",
]

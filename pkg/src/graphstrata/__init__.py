"""Stable dual graphs, label-group quotients, and charted-marking checks.

The package has three layers.  ``stablegraph`` holds the graphs
themselves: stability, genus, isomorphism, canonical forms, the census of
all classes for a given genus and leg count, vertex splitting, and the
Hilbert polynomial data of pluricanonical embeddings.  ``perm`` and
``gamma`` put a permutation group on the leg labels and fuse the census
into group orbits with their stabilizers; ``strata`` renders the result
as quotient tables.  ``descent`` verifies chart data over finite covers:
compatibility witnesses, point classes, domination, equivalence via a
common refinement, and fiberwise morphisms.  ``cli`` exposes everything
as subcommands with a strict exit-code contract.
"""

from .descent import (
    ChartedMarking,
    FiberMorphism,
    FiniteCover,
    class_function,
    dominates,
    equivalent,
    globalize_trivial_group,
    verify_morphism,
    verify_star,
)
from .gamma import (
    GammaMarkedGraph,
    enumerate_gamma_strata,
    gamma_automorphisms,
    gamma_canonical_form,
    gamma_equivalent,
    quotient_fibers,
    relabel_legs,
)
from .perm import (
    PermGroup,
    Permutation,
    group_from_generators,
    parse_generators,
    parse_permutation,
    symmetric_group,
)
from .stablegraph import (
    StableGraph,
    StratumCensus,
    canonical_form,
    check_stability,
    enumerate_stable_graphs,
    genus,
    graph_isomorphism,
    hilbert_numerology,
    num_nodes,
    split_component,
    stratum_dim,
)
from .strata import build_quotient_table, component_census, render_quotient_table

__version__ = "0.1.0"

__all__ = [
    "ChartedMarking",
    "FiberMorphism",
    "FiniteCover",
    "GammaMarkedGraph",
    "PermGroup",
    "Permutation",
    "StableGraph",
    "StratumCensus",
    "build_quotient_table",
    "canonical_form",
    "check_stability",
    "class_function",
    "component_census",
    "dominates",
    "enumerate_gamma_strata",
    "enumerate_stable_graphs",
    "equivalent",
    "gamma_automorphisms",
    "gamma_canonical_form",
    "gamma_equivalent",
    "genus",
    "globalize_trivial_group",
    "graph_isomorphism",
    "group_from_generators",
    "hilbert_numerology",
    "num_nodes",
    "parse_generators",
    "parse_permutation",
    "quotient_fibers",
    "relabel_legs",
    "render_quotient_table",
    "split_component",
    "stratum_dim",
    "symmetric_group",
    "verify_morphism",
    "verify_star",
    "__version__",
]

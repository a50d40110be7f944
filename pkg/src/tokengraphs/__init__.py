"""Token graphs: every k-subset of a graph's vertices, adjacent when one token slides along an edge."""

__version__ = "0.1.0"

from .errors import BudgetExceeded, CapacityError, InvariantError, TokenGraphError
from .graph import Graph, IsoWitness, are_isomorphic, canonical_form, cartesian_product, family, make_graph
from .subsets import enumerate_ksubsets, rank_colex, unrank_colex
from .token import (
    TokenGraph,
    VariantSpec,
    build_token_graph,
    build_variant_token_graph,
    complement_bijection,
    expected_counts,
    fixed_token_subgraph,
    token_degree,
)

__all__ = [
    "__version__",
    "BudgetExceeded",
    "CapacityError",
    "InvariantError",
    "TokenGraphError",
    "Graph",
    "IsoWitness",
    "are_isomorphic",
    "canonical_form",
    "cartesian_product",
    "family",
    "make_graph",
    "enumerate_ksubsets",
    "rank_colex",
    "unrank_colex",
    "TokenGraph",
    "VariantSpec",
    "build_token_graph",
    "build_variant_token_graph",
    "complement_bijection",
    "expected_counts",
    "fixed_token_subgraph",
    "token_degree",
]

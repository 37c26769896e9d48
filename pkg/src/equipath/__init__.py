"""Equal-degree path property: checkers, constructions, and extremal search."""

__version__ = "0.1.0"

from .graphs import (
    CanonicalForm,
    DegreeProfile,
    Graph,
    Graph6Error,
    canonical_form,
    canonical_graph,
    complement,
    degree_profile,
    from_edges,
    from_graph6,
    is_isomorphic,
    relabel,
    to_graph6,
)

__all__ = [
    "__version__",
    "CanonicalForm",
    "DegreeProfile",
    "Graph",
    "Graph6Error",
    "canonical_form",
    "canonical_graph",
    "complement",
    "degree_profile",
    "from_edges",
    "from_graph6",
    "is_isomorphic",
    "relabel",
    "to_graph6",
]

"""Spectral analysis of linear uniform hypergraphs.

The heavy lifting lives in submodules — ``families`` and ``enumeration``
build hypergraphs, ``spectral`` and ``partitions`` compute with them,
``formulas`` evaluates the closed forms, ``transforms`` rewires edges, and
``verify`` runs the registry of extremal claims.  This namespace re-exports
the pieces almost every caller needs.
"""

from hyperspectra.core import (
    CyclicityReport,
    Hypergraph,
    are_isomorphic,
    from_dict,
    incidence_graph,
    read_json,
    write_json,
)
from hyperspectra.report import (
    InequalityRecord,
    VerificationReport,
    emit_report,
    render_figures,
)
from hyperspectra.spectral import (
    SpectralResult,
    adjacency_matrix,
    char_poly,
    full_spectrum,
    spectral_radius,
)
from hyperspectra.transforms import (
    TransformResult,
    move_edges,
    release_edge,
    spread_edges,
)
from hyperspectra.verify import REGISTRY, list_registry, verify

__version__ = "0.1.0"

__all__ = [
    "CyclicityReport",
    "Hypergraph",
    "InequalityRecord",
    "REGISTRY",
    "SpectralResult",
    "TransformResult",
    "VerificationReport",
    "adjacency_matrix",
    "are_isomorphic",
    "char_poly",
    "emit_report",
    "from_dict",
    "full_spectrum",
    "incidence_graph",
    "list_registry",
    "move_edges",
    "read_json",
    "release_edge",
    "render_figures",
    "spectral_radius",
    "spread_edges",
    "verify",
    "write_json",
    "__version__",
]

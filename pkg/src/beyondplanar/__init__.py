"""Optimal beyond-planar graphs.

Construction, validation and certification of optimal 1-planar, 2-planar,
IC-planar, NIC-planar, 1-fan-bundle and RAC graphs; straight-line RAC
realization via primal-dual circle packing; and host-graph synthesis that
embeds any input graph as a topological minor of an optimal graph of a
chosen type.
"""

from .drawings import BeyondDrawing, TypeTag, ValidationReport, overlay_crossings
from .embeddings import PlaneEmbedding, add_chords, subdivide_edges
from .errors import (
    BeyondPlanarError,
    ConstructionError,
    ConvergenceError,
    MalformedEmbeddingError,
    NonSimpleDualError,
    NotAdmissibleError,
    SimplicityError,
    UnsupportedSizeError,
    UsageError,
)
from .graphs import Graph, girth_at_least, is_planar_3connected
from .optimality import admissible, density, validate_optimal

__all__ = [
    "BeyondDrawing",
    "BeyondPlanarError",
    "ConstructionError",
    "ConvergenceError",
    "Graph",
    "MalformedEmbeddingError",
    "NonSimpleDualError",
    "NotAdmissibleError",
    "PlaneEmbedding",
    "SimplicityError",
    "TypeTag",
    "UnsupportedSizeError",
    "UsageError",
    "ValidationReport",
    "add_chords",
    "admissible",
    "density",
    "girth_at_least",
    "is_planar_3connected",
    "overlay_crossings",
    "subdivide_edges",
    "validate_optimal",
]

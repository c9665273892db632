"""Constructive 3-list-coloring of plane graphs with bounded clustering.

Library layout (one module per subsystem):

- plane_graph: rotation systems, face tracing, disk extraction
- structure:   small/big vertices, triangle flags, apex-path search, sparsifiers
- islands:     island search and sparsity measurement
- coloring:    clusters, island-coloring recursion, sparsifier extension
- stacks:      rooted planar 3-trees, pointer systems, pyramidal solver
- extend:      triangle-recursion precoloring extension, top-level solver
- discharge:   exact-rational discharging auditor
- oracle:      brute-force ground truth for desk-scale instances
- generators:  instance families
- instances:   JSON formats, solution verification
- cli:         command-line surface
"""

from .plane_graph import (
    PlaneGraph,
    build_plane_graph,
    embedding_from_faces,
    induced_subgraph,
    delete_vertices,
    interior_subgraph,
    add_outer_triangle,
)

__all__ = [
    "PlaneGraph",
    "build_plane_graph",
    "embedding_from_faces",
    "induced_subgraph",
    "delete_vertices",
    "interior_subgraph",
    "add_outer_triangle",
]

__version__ = "0.1.0"

"""Minimal strongly connected digraphs that are nonplanar, non-outerplanar or
non-series-parallel, the almost-planar graph families behind them, and good
orientations."""

from .digraph import Digraph, Orientation, CutCertificate, delta, is_strong, subdivide, suppress, underlying
from .enumeration import (
    VerificationReport,
    canonical_key,
    enumerate_digraphs,
    enumerate_graphs,
    minimal_strong_with,
    verify_theorem,
)
from .families import (
    FAMILIES,
    ClassificationGap,
    FamilyCertificate,
    classify_almost_planar,
    generate,
    is_almost_planar,
    recognize,
)
from .graph import Graph, edge
from .kuratowski import is_kuratowski_digraph
from .obstructions import (
    ObstructionWitness,
    detect_outerplanar_obstruction,
    detect_series_parallel_obstruction,
    is_series_parallel_digraph,
)
from .orientation import (
    clean_back_cut,
    compute_cells,
    find_good_orientation,
    fundamental_cycles,
    parity_predicates,
    propagate_orientation,
)
from .planarity import is_outerplanar, is_planar, kuratowski_subgraph
from .topological import contains_subdivision, critical_edges, ladder_number

__all__ = [name for name in dir() if not name.startswith("_")]

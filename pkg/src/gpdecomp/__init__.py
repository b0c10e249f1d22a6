"""Partitions of complete r-uniform hypergraphs into complete r-partite
r-graphs: constructions, exhaustive verification, exact minima on tiny
instances, and exact bound-formula evaluation."""

from .blocks import (
    BipartiteGraph,
    Block,
    BlockDecomposition,
    block_to_four_parts,
    construct_star_bipartite,
    construct_trivial_blocks,
    verify_blocks,
)
from .bounds import (
    BoundReport,
    alon_lower_coefficient,
    base_coefficient,
    corollary2_below_one,
    corollary2_exact,
    corollary2_value,
    count_c_prime,
    predicted_family_tallies,
    predicted_theorem1_count,
    theorem1_coefficient,
    threshold_d,
)
from .constructions import (
    ClassLayout,
    FamilyTally,
    Signature,
    construct_baseline,
    construct_even_from_odd,
    construct_stars,
    construct_theorem1,
    construct_theorem1_detailed,
    decompose_signature,
    enumerate_signatures,
)
from .core import (
    Decomposition,
    GroundSet,
    InvalidPieceError,
    RPartiteGraph,
    binomial,
    canonicalize,
    edges_of,
)
from .exact import ExactResult, SearchBudget, enumerate_candidate_pieces, solve_exact
from .fileio import (
    ParseError,
    parse_blocks,
    parse_decomposition,
    serialize_blocks,
    serialize_decomposition,
)
from .verifier import VerificationReport, coverage_histogram, verify_decomposition

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

"""Exhaustive verification that a decomposition partitions all r-subsets.

This is the oracle the whole toolkit leans on: every edge of the ground set
is enumerated and its coverage multiplicity counted.  The fast census check
(sum of piece edge counts vs binomial(n, r)) is reported but never trusted on
its own.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .core import Decomposition, Edge, all_edges, binomial, edges_of


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    piece_count: int
    edge_count: int
    message: str = ""
    witness: Optional[Edge] = None
    witness_multiplicity: Optional[int] = None
    witness_pieces: Tuple[int, ...] = ()


def _structural_problem(d: Decomposition) -> Optional[str]:
    n, r = d.ground.n, d.ground.r
    for i, p in enumerate(d.pieces):
        if len(p.parts) != r:
            return f"piece {i} has {len(p.parts)} parts, expected {r}"
        seen: set = set()
        for part in p.parts:
            if not part:
                return f"piece {i} has an empty part"
            for v in part:
                if not (0 <= v < n):
                    return f"piece {i} has out-of-range vertex {v}"
                if v in seen:
                    return f"piece {i} has overlapping parts at vertex {v}"
                seen.add(v)
    return None


def verify_decomposition(d: Decomposition) -> VerificationReport:
    """Check structure, the edge census, and exact single coverage of every
    r-subset.  On failure the report carries the first bad edge in
    lexicographic order, its multiplicity, and the covering piece indices."""
    n, r = d.ground.n, d.ground.r
    total = binomial(n, r)
    problem = _structural_problem(d)
    if problem is not None:
        return VerificationReport(
            valid=False, piece_count=len(d.pieces), edge_count=total, message=problem
        )
    coverage: Dict[Edge, List[int]] = {}
    for i, p in enumerate(d.pieces):
        for e in edges_of(p):
            coverage.setdefault(e, []).append(i)
    for e in all_edges(n, r):
        hits = coverage.get(e, [])
        if len(hits) != 1:
            return VerificationReport(
                valid=False,
                piece_count=len(d.pieces),
                edge_count=total,
                message=f"edge {e} covered {len(hits)} times",
                witness=e,
                witness_multiplicity=len(hits),
                witness_pieces=tuple(hits),
            )
    return VerificationReport(valid=True, piece_count=len(d.pieces), edge_count=total)


def coverage_histogram(d: Decomposition) -> Dict[int, int]:
    """Map multiplicity -> number of edges covered that many times.

    A valid decomposition yields exactly {1: binomial(n, r)}."""
    n, r = d.ground.n, d.ground.r
    counts: Counter = Counter()
    for p in d.pieces:
        for e in edges_of(p):
            counts[e] += 1
    hist: Counter = Counter()
    for e in all_edges(n, r):
        hist[counts.get(e, 0)] += 1
    return dict(hist)

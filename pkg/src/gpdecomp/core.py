"""Ground-set and piece representations shared by every other module.

Vertices are 0-based integers.  A piece (complete r-partite r-graph) is an
unordered family of r pairwise-disjoint nonempty vertex sets; its edge set is
all r-sets taking exactly one vertex per part.  Pieces are stored in a
canonical form so that equality and serialization are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence, Tuple

Edge = Tuple[int, ...]


class InvalidPieceError(ValueError):
    """Raised when a family of parts cannot form a valid piece."""


@dataclass(frozen=True)
class GroundSet:
    """Complete r-uniform hypergraph on vertices 0..n-1."""

    n: int
    r: int

    def __post_init__(self) -> None:
        if not (1 <= self.r <= self.n):
            raise ValueError(f"need 1 <= r <= n, got n={self.n}, r={self.r}")

    @property
    def edge_count(self) -> int:
        return binomial(self.n, self.r)


@dataclass(frozen=True)
class RPartiteGraph:
    """Complete r-partite r-graph in canonical form.

    Do not construct directly; use :func:`canonicalize`, which sorts each
    part ascending and orders parts by minimum element.
    """

    parts: Tuple[Tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def edge_count(self) -> int:
        return math.prod(len(p) for p in self.parts)

    def vertices(self) -> frozenset:
        return frozenset(v for p in self.parts for v in p)


@dataclass(frozen=True)
class Decomposition:
    """A list of pieces over a common ground set.

    Carries no partition claim by itself; run the verifier to establish one.
    """

    ground: GroundSet
    pieces: Tuple[RPartiteGraph, ...]

    @property
    def piece_count(self) -> int:
        return len(self.pieces)


def canonicalize(parts: Iterable[Iterable[int]], n: int | None = None) -> RPartiteGraph:
    """Canonical form of an unordered family of disjoint vertex sets.

    Idempotent and invariant under permutation of the input family.  Rejects
    empty families, empty parts, overlapping parts, and (when ``n`` is given)
    out-of-range vertices.
    """
    norm = [tuple(sorted(set(p))) for p in parts]
    if not norm:
        raise InvalidPieceError("piece needs at least one part")
    seen: set = set()
    for p in norm:
        if not p:
            raise InvalidPieceError("empty part")
        for v in p:
            if v < 0 or (n is not None and v >= n):
                raise InvalidPieceError(f"vertex {v} out of range")
            if v in seen:
                raise InvalidPieceError(f"overlapping parts at vertex {v}")
            seen.add(v)
    norm.sort(key=lambda p: p[0])
    return RPartiteGraph(tuple(norm))


def edges_of(piece: RPartiteGraph) -> Iterator[Edge]:
    """All edges of a piece, each sorted ascending, in lexicographic order."""
    edges = [tuple(sorted(combo)) for combo in product(*piece.parts)]
    edges.sort()
    return iter(edges)


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient; 0 when b > a."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def all_edges(n: int, r: int) -> Iterator[Edge]:
    """All r-subsets of 0..n-1 in lexicographic order."""
    from itertools import combinations

    return combinations(range(n), r)


def piece_from_sequence(parts: Sequence[Sequence[int]], n: int | None = None) -> RPartiteGraph:
    return canonicalize(parts, n=n)

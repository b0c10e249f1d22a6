"""Block decompositions: partitions of E(K_n) x E(K_n) into products of
complete bipartite graphs.

A block is an ordered product of two complete bipartite graphs, the first
over class one and the second over class two (both classes of size n, with
class-local labels 0..n-1).  Embedding into a host ground set happens only at
:func:`block_to_four_parts`, so one block decomposition can be reused across
many class pairs.

Any function ``n -> BlockDecomposition`` whose output passes
:func:`verify_blocks` can serve as a block provider for the main
construction; :func:`construct_trivial_blocks` is the default with
(n-1)^2 blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Mapping, Optional, Tuple

from .core import binomial


@dataclass(frozen=True)
class BipartiteGraph:
    """Complete bipartite graph: all 2-sets with one vertex per side."""

    side_a: Tuple[int, ...]
    side_b: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.side_a or not self.side_b:
            raise ValueError("both sides must be nonempty")
        if set(self.side_a) & set(self.side_b):
            raise ValueError("sides must be disjoint")

    def edges(self) -> List[Tuple[int, int]]:
        return sorted(tuple(sorted((u, v))) for u in self.side_a for v in self.side_b)

    @property
    def edge_count(self) -> int:
        return len(self.side_a) * len(self.side_b)


@dataclass(frozen=True)
class Block:
    """Product of the edge sets of two complete bipartite graphs."""

    first: BipartiteGraph
    second: BipartiteGraph

    @property
    def pair_count(self) -> int:
        return self.first.edge_count * self.second.edge_count


@dataclass(frozen=True)
class BlockDecomposition:
    """Claimed partition of E(K_n) x E(K_n); check it with verify_blocks."""

    n: int
    blocks: Tuple[Block, ...]


@dataclass(frozen=True)
class BlockReport:
    valid: bool
    block_count: int
    pair_count: int
    witness: Optional[Tuple[Tuple[int, int], Tuple[int, int]]] = None
    witness_multiplicity: Optional[int] = None


def construct_star_bipartite(n: int) -> List[BipartiteGraph]:
    """Star partition of E(K_n): n-1 bipartite graphs ({i}, {i+1..n-1})."""
    if n < 2:
        raise ValueError("need n >= 2")
    return [BipartiteGraph((i,), tuple(range(i + 1, n))) for i in range(n - 1)]


def construct_trivial_blocks(n: int) -> BlockDecomposition:
    """The (n-1)^2 blocks obtained as ordered products of the star partition
    with itself."""
    stars = construct_star_bipartite(n)
    blocks = tuple(Block(s1, s2) for s1, s2 in product(stars, stars))
    return BlockDecomposition(n=n, blocks=blocks)


def block_to_four_parts(
    b: Block,
    embed_one: Mapping[int, int],
    embed_two: Mapping[int, int],
) -> Tuple[Tuple[int, ...], ...]:
    """Embed a block into a host ground set as four disjoint parts.

    The 4-sets taking one vertex per returned part are exactly the pairs
    (e1, e2) of the block under the two embeddings.
    """
    img_one = {embed_one[v] for v in set(b.first.side_a) | set(b.first.side_b)}
    img_two = {embed_two[v] for v in set(b.second.side_a) | set(b.second.side_b)}
    if img_one & img_two:
        raise ValueError("embedding images overlap")
    return (
        tuple(sorted(embed_one[v] for v in b.first.side_a)),
        tuple(sorted(embed_one[v] for v in b.first.side_b)),
        tuple(sorted(embed_two[v] for v in b.second.side_a)),
        tuple(sorted(embed_two[v] for v in b.second.side_b)),
    )


def verify_blocks(bd: BlockDecomposition) -> BlockReport:
    """Exhaustively check that every ordered pair of 2-sets is covered once."""
    n = bd.n
    counts: Dict[Tuple[Tuple[int, int], Tuple[int, int]], int] = {}
    for blk in bd.blocks:
        for e1 in blk.first.edges():
            for e2 in blk.second.edges():
                counts[(e1, e2)] = counts.get((e1, e2), 0) + 1
    total = binomial(n, 2) ** 2
    all_pairs = list(product(combinations(range(n), 2), repeat=2))
    for pair in all_pairs:
        m = counts.get(pair, 0)
        if m != 1:
            return BlockReport(
                valid=False,
                block_count=len(bd.blocks),
                pair_count=total,
                witness=pair,
                witness_multiplicity=m,
            )
    # A block outside 0..n-1 would create a pair not in the universe.
    if len(counts) != total:
        extra = sorted(set(counts) - set(all_pairs))[0]
        return BlockReport(
            valid=False,
            block_count=len(bd.blocks),
            pair_count=total,
            witness=extra,
            witness_multiplicity=counts[extra],
        )
    return BlockReport(valid=True, block_count=len(bd.blocks), pair_count=total)

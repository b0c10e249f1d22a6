"""Decomposition constructions.

Three families of algorithms live here:

* the baseline construction fixing the even-position vertices of each sorted
  r-set (binomial(n - ceil(r/2), floor(r/2)) pieces);
* the class-split construction for odd r = 2d+1 over k classes of size n,
  which routes the all-2s and 2s-plus-3 intersection profiles through block
  decompositions and everything else through products of smaller
  decompositions;
* the even-from-odd reduction deleting one vertex from an (r+1)-uniform
  decomposition.

Sub-decompositions are pluggable: ``sub_provider(n, r)`` must return a valid
Decomposition of K_n^(r), and ``block_provider(n)`` a valid
BlockDecomposition.  Defaults are the baseline and the trivial (n-1)^2
blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .blocks import BlockDecomposition, block_to_four_parts, construct_trivial_blocks
from .core import Decomposition, GroundSet, RPartiteGraph, canonicalize

SubProvider = Callable[[int, int], Decomposition]
BlockProvider = Callable[[int], BlockDecomposition]


@dataclass(frozen=True)
class ClassLayout:
    """k contiguous classes of size n; class i occupies [i*n, (i+1)*n)."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.n < 1:
            raise ValueError("need k >= 1 and n >= 1")

    @property
    def total(self) -> int:
        return self.k * self.n

    def class_range(self, i: int) -> range:
        return range(i * self.n, (i + 1) * self.n)


@dataclass(frozen=True)
class Signature:
    """Intersection sizes of an edge family with the classes of a layout.

    ``assignments`` maps class index to a positive intersection size; absent
    classes intersect in 0 vertices.
    """

    assignments: Tuple[Tuple[int, int], ...]  # sorted (class, size) pairs

    @staticmethod
    def of(mapping: Dict[int, int]) -> "Signature":
        items = tuple(sorted((c, s) for c, s in mapping.items() if s > 0))
        return Signature(items)

    @property
    def total(self) -> int:
        return sum(s for _, s in self.assignments)

    def sizes(self) -> List[int]:
        return sorted(s for _, s in self.assignments)


@dataclass
class FamilyTally:
    """Per-family piece counts from the class-split construction."""

    paired_two_classes: int = 0  # all-2s profiles via blocks + complement part
    two_plus_three: int = 0  # 2+...+2+3 profiles
    generic: int = 0  # every other profile

    @property
    def total(self) -> int:
        return self.paired_two_classes + self.two_plus_three + self.generic


def construct_baseline(n: int, r: int) -> Decomposition:
    """Partition K_n^(r) by fixing the even-position vertices of each edge.

    Each piece is indexed by fixed vertices a_1 < ... < a_m (m = floor(r/2))
    sitting at the even sorted positions; its parts are the singletons {a_i}
    together with the open intervals between consecutive fixed points (plus,
    for odd r, the interval above a_m).  Index tuples forcing an empty
    interval are skipped, leaving binomial(n - ceil(r/2), floor(r/2)) pieces.
    """
    if r < 1 or r > n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")
    m = r // 2
    pieces: List[RPartiteGraph] = []
    for fixed in combinations(range(n), m):
        parts: List[Tuple[int, ...]] = []
        prev = -1
        ok = True
        for a in fixed:
            gap = tuple(range(prev + 1, a))
            if not gap:
                ok = False
                break
            parts.append(gap)
            parts.append((a,))
            prev = a
        if ok and r % 2 == 1:
            tail = tuple(range(prev + 1, n))
            if not tail:
                ok = False
            else:
                parts.append(tail)
        if ok:
            pieces.append(canonicalize(parts, n=n))
    return Decomposition(GroundSet(n, r), tuple(pieces))


def construct_stars(n: int) -> Decomposition:
    """The n-1 star pieces partitioning E(K_n)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return construct_baseline(n, 2)


def enumerate_signatures(layout: ClassLayout, r: int) -> List[Signature]:
    """Every assignment of positive sizes (each <= n) to classes summing to r.

    Deterministic: lexicographic in the full size vector (s_0, ..., s_{k-1}).
    """
    if r > layout.total:
        raise ValueError("r exceeds ground set size")
    k, n = layout.k, layout.n
    out: List[Signature] = []

    def rec(i: int, remaining: int, cur: List[int]) -> None:
        if i == k:
            if remaining == 0:
                out.append(Signature.of({j: s for j, s in enumerate(cur) if s}))
            return
        # remaining must be placeable in the classes left
        for s in range(0, min(n, remaining) + 1):
            if remaining - s <= (k - i - 1) * n:
                cur.append(s)
                rec(i + 1, remaining - s, cur)
                cur.pop()

    rec(0, r, [])
    return out


def _shifted_pieces(dec: Decomposition, offset: int) -> List[Tuple[Tuple[int, ...], ...]]:
    return [
        tuple(tuple(v + offset for v in part) for part in p.parts) for p in dec.pieces
    ]


def _embedding(layout: ClassLayout, cls: int) -> Dict[int, int]:
    return {v: cls * layout.n + v for v in range(layout.n)}


def _paired_two_family(
    layout: ClassLayout,
    two_classes: Sequence[int],
    sub_provider: SubProvider,
    block_provider: BlockProvider,
) -> List[RPartiteGraph]:
    """Pieces covering all edges meeting each chosen class in exactly 2
    vertices plus one extra vertex anywhere outside the chosen classes.

    Classes are paired in ascending order and each pair is expanded through
    the block decomposition; an odd leftover class uses the star pieces.  The
    final part is the complement of the chosen classes, which realizes every
    placement of the extra vertex at once.  Vacuous (no pieces) when the
    complement is empty.
    """
    n = layout.n
    chosen = sorted(two_classes)
    d = len(chosen)
    comp = tuple(
        v
        for v in range(layout.total)
        if not any(v in layout.class_range(c) for c in chosen)
    )
    if not comp:
        return []
    factor_lists: List[List[Tuple[Tuple[int, ...], ...]]] = []
    bd = block_provider(n)
    for idx in range(0, d - 1, 2):
        ci, cj = chosen[idx], chosen[idx + 1]
        emb_i, emb_j = _embedding(layout, ci), _embedding(layout, cj)
        factor_lists.append(
            [block_to_four_parts(blk, emb_i, emb_j) for blk in bd.blocks]
        )
    if d % 2 == 1:
        leftover = chosen[-1]
        factor_lists.append(
            _shifted_pieces(sub_provider(n, 2), leftover * layout.n)
        )
    pieces = []
    for combo in product(*factor_lists):
        parts = [part for group in combo for part in group]
        parts.append(comp)
        pieces.append(canonicalize(parts, n=layout.total))
    return pieces


def _two_plus_three_family(
    layout: ClassLayout,
    two_classes: Sequence[int],
    three_class: int,
    sub_provider: SubProvider,
    block_provider: BlockProvider,
) -> List[RPartiteGraph]:
    """Pieces for the profile with 2s on ``two_classes`` and a 3 on
    ``three_class``: pair the 2-classes through blocks, decompose a leftover
    2-class with stars and the 3-class with a K_n^(3) decomposition, and take
    products."""
    n = layout.n
    twos = sorted(two_classes)
    factor_lists: List[List[Tuple[Tuple[int, ...], ...]]] = []
    if len(twos) >= 2:
        bd = block_provider(n)
        for idx in range(0, len(twos) - 1, 2):
            ci, cj = twos[idx], twos[idx + 1]
            factor_lists.append(
                [
                    block_to_four_parts(blk, _embedding(layout, ci), _embedding(layout, cj))
                    for blk in bd.blocks
                ]
            )
    if len(twos) % 2 == 1:
        factor_lists.append(_shifted_pieces(sub_provider(n, 2), twos[-1] * layout.n))
    factor_lists.append(_shifted_pieces(sub_provider(n, 3), three_class * layout.n))
    pieces = []
    for combo in product(*factor_lists):
        parts = [part for group in combo for part in group]
        pieces.append(canonicalize(parts, n=layout.total))
    return pieces


def _generic_family(
    layout: ClassLayout,
    sig: Signature,
    sub_provider: SubProvider,
) -> List[RPartiteGraph]:
    """Product of per-class decompositions for an arbitrary profile."""
    factor_lists = [
        _shifted_pieces(sub_provider(layout.n, size), cls * layout.n)
        for cls, size in sig.assignments
    ]
    pieces = []
    for combo in product(*factor_lists):
        parts = [part for group in combo for part in group]
        pieces.append(canonicalize(parts, n=layout.total))
    return pieces


def decompose_signature(
    layout: ClassLayout,
    sig: Signature,
    sub_provider: SubProvider = construct_baseline,
    block_provider: BlockProvider = construct_trivial_blocks,
) -> List[RPartiteGraph]:
    """Pieces partitioning the edges with the given intersection profile.

    Dispatches on the profile shape:

    * all sizes 2 (the driver passes the d 2-classes of a 2+...+2+1 profile
      with the lone 1 omitted): paired-class blocks plus a complement part.
      The output then covers every placement of the extra vertex, so the
      driver calls this once per set of 2-classes.
    * sizes 1,2,...,2: same as above (the 1-class is subsumed by the
      complement part).
    * sizes 2,...,2,3: blocks on the 2-classes times a 3-class decomposition.
    * anything else: plain product of per-class decompositions.
    """
    sizes = sig.sizes()
    if not sizes:
        raise ValueError("empty signature")
    if any(s > layout.n for s in sizes):
        raise ValueError("intersection size exceeds class size")
    if all(s == 2 for s in sizes):
        classes = [c for c, _ in sig.assignments]
        return _paired_two_family(layout, classes, sub_provider, block_provider)
    if sizes[0] == 1 and all(s == 2 for s in sizes[1:]):
        classes = [c for c, s in sig.assignments if s == 2]
        return _paired_two_family(layout, classes, sub_provider, block_provider)
    if sizes[-1] == 3 and all(s == 2 for s in sizes[:-1]):
        twos = [c for c, s in sig.assignments if s == 2]
        three = next(c for c, s in sig.assignments if s == 3)
        return _two_plus_three_family(layout, twos, three, sub_provider, block_provider)
    return _generic_family(layout, sig, sub_provider)


def _is_pair_plus_one_shape(sig: Signature) -> bool:
    sizes = sig.sizes()
    return len(sizes) >= 2 and sizes[0] == 1 and all(s == 2 for s in sizes[1:])


def _is_two_plus_three_shape(sig: Signature) -> bool:
    sizes = sig.sizes()
    return sizes[-1] == 3 and all(s == 2 for s in sizes[:-1])


def construct_theorem1_detailed(
    n: int,
    k: int,
    r: int,
    sub_provider: SubProvider = construct_baseline,
    block_provider: BlockProvider = construct_trivial_blocks,
) -> Tuple[Decomposition, FamilyTally]:
    """Class-split construction for odd r = 2d+1 over k classes of size n,
    returning the decomposition together with per-family piece tallies."""
    if r % 2 == 0 or r < 3:
        raise ValueError("r must be odd and >= 3")
    if n < 2:
        raise ValueError("need n >= 2")
    layout = ClassLayout(k=k, n=n)
    if r > layout.total:
        raise ValueError("r exceeds k*n")
    sigs = enumerate_signatures(layout, r)
    tally = FamilyTally()
    pieces: List[RPartiteGraph] = []

    # The 2+...+2+1 profiles are covered once per set of 2-classes, not once
    # per placement of the 1 (the complement part handles all placements).
    pair_subsets = sorted(
        {
            tuple(c for c, s in sig.assignments if s == 2)
            for sig in sigs
            if _is_pair_plus_one_shape(sig)
        }
    )
    for subset in pair_subsets:
        got = _paired_two_family(layout, subset, sub_provider, block_provider)
        pieces.extend(got)
        tally.paired_two_classes += len(got)

    for sig in sigs:
        if _is_pair_plus_one_shape(sig):
            continue
        if _is_two_plus_three_shape(sig):
            got = decompose_signature(layout, sig, sub_provider, block_provider)
            tally.two_plus_three += len(got)
        else:
            got = _generic_family(layout, sig, sub_provider)
            tally.generic += len(got)
        pieces.extend(got)

    dec = Decomposition(GroundSet(layout.total, r), tuple(pieces))
    return dec, tally


def construct_theorem1(
    n: int,
    k: int,
    r: int,
    sub_provider: SubProvider = construct_baseline,
    block_provider: BlockProvider = construct_trivial_blocks,
) -> Decomposition:
    dec, _ = construct_theorem1_detailed(n, k, r, sub_provider, block_provider)
    return dec


def construct_even_from_odd(
    n: int,
    r: int,
    odd_provider: SubProvider = construct_baseline,
) -> Decomposition:
    """Decompose K_n^(r) for even r by deleting the last vertex from a
    decomposition of K_{n+1}^(r+1).

    For each source piece containing vertex n, keep the r parts that do not
    contain it; drop pieces avoiding vertex n.  The piece count never exceeds
    the source's."""
    if r % 2 != 0 or r < 2:
        raise ValueError("r must be even and >= 2")
    if n < r:
        raise ValueError("need n >= r")
    odd = odd_provider(n + 1, r + 1)
    v = n
    pieces: List[RPartiteGraph] = []
    for p in odd.pieces:
        if any(v in part for part in p.parts):
            rest = [part for part in p.parts if v not in part]
            pieces.append(canonicalize(rest, n=n))
    return Decomposition(GroundSet(n, r), tuple(pieces))

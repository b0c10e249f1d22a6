"""Bit-exact text formats for decompositions and block decompositions.

Decomposition files (magic ``GPD 1``)::

    GPD 1
    n 6 r 4 pieces 6
    0 | 1 | 2 | 3,4,5
    ...

one piece per line, parts joined by `` | ``, vertices comma-separated
ascending, parts in canonical order, LF line endings, trailing LF.

Block files (magic ``GPB 1``)::

    GPB 1
    n 4 blocks 9
    a:0 b:1,2,3 ; a:0 b:1,2,3
    ...

Serializing the same object twice is byte-identical, and parsing a generated
file then re-serializing reproduces it byte-for-byte.
"""

from __future__ import annotations

from typing import List, Tuple

from .blocks import BipartiteGraph, Block, BlockDecomposition
from .core import Decomposition, GroundSet, RPartiteGraph, canonicalize


class ParseError(ValueError):
    """Malformed decomposition or block file."""


def serialize_decomposition(d: Decomposition) -> str:
    lines = ["GPD 1", f"n {d.ground.n} r {d.ground.r} pieces {len(d.pieces)}"]
    for p in d.pieces:
        lines.append(" | ".join(",".join(str(v) for v in part) for part in p.parts))
    return "\n".join(lines) + "\n"


def _parse_part(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad part {text!r}") from exc


def parse_decomposition(text: str) -> Decomposition:
    lines = text.split("\n")
    if not lines or lines[0] != "GPD 1":
        raise ParseError("missing GPD 1 magic line")
    if len(lines) < 2:
        raise ParseError("missing header line")
    fields = lines[1].split(" ")
    if len(fields) != 6 or fields[0] != "n" or fields[2] != "r" or fields[4] != "pieces":
        raise ParseError(f"bad header {lines[1]!r}")
    try:
        n, r, m = int(fields[1]), int(fields[3]), int(fields[5])
    except ValueError as exc:
        raise ParseError(f"bad header {lines[1]!r}") from exc
    body = lines[2:]
    if len(body) != m + 1 or body[-1] != "":
        raise ParseError(f"expected {m} piece lines and a trailing newline")
    pieces: List[RPartiteGraph] = []
    for line in body[:-1]:
        parts = [_parse_part(chunk) for chunk in line.split(" | ")]
        try:
            piece = canonicalize(parts, n=n)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        if piece.parts != tuple(parts):
            raise ParseError(f"piece line not in canonical form: {line!r}")
        pieces.append(piece)
    try:
        ground = GroundSet(n, r)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return Decomposition(ground, tuple(pieces))


def _fmt_side(side: Tuple[int, ...]) -> str:
    return ",".join(str(v) for v in side)


def serialize_blocks(bd: BlockDecomposition) -> str:
    lines = ["GPB 1", f"n {bd.n} blocks {len(bd.blocks)}"]
    for blk in bd.blocks:
        lines.append(
            f"a:{_fmt_side(blk.first.side_a)} b:{_fmt_side(blk.first.side_b)}"
            f" ; a:{_fmt_side(blk.second.side_a)} b:{_fmt_side(blk.second.side_b)}"
        )
    return "\n".join(lines) + "\n"


def _parse_bipartite(text: str) -> BipartiteGraph:
    chunks = text.split(" ")
    if len(chunks) != 2 or not chunks[0].startswith("a:") or not chunks[1].startswith("b:"):
        raise ParseError(f"bad bipartite factor {text!r}")
    try:
        return BipartiteGraph(_parse_part(chunks[0][2:]), _parse_part(chunks[1][2:]))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_blocks(text: str) -> BlockDecomposition:
    lines = text.split("\n")
    if not lines or lines[0] != "GPB 1":
        raise ParseError("missing GPB 1 magic line")
    if len(lines) < 2:
        raise ParseError("missing header line")
    fields = lines[1].split(" ")
    if len(fields) != 4 or fields[0] != "n" or fields[2] != "blocks":
        raise ParseError(f"bad header {lines[1]!r}")
    try:
        n, m = int(fields[1]), int(fields[3])
    except ValueError as exc:
        raise ParseError(f"bad header {lines[1]!r}") from exc
    body = lines[2:]
    if len(body) != m + 1 or body[-1] != "":
        raise ParseError(f"expected {m} block lines and a trailing newline")
    blocks: List[Block] = []
    for line in body[:-1]:
        halves = line.split(" ; ")
        if len(halves) != 2:
            raise ParseError(f"bad block line {line!r}")
        blocks.append(Block(_parse_bipartite(halves[0]), _parse_bipartite(halves[1])))
    return BlockDecomposition(n=n, blocks=tuple(blocks))

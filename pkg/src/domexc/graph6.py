"""graph6 encoding and decoding.

The format packs the upper triangle of the adjacency matrix column by
column (bits a01, a02, a12, a03, a13, a23, ...) into 6-bit groups, most
significant bit first, zero padded, each group printed as its value + 63.
The leading bytes encode the order: one byte for n <= 62, or '~' plus
three 6-bit bytes for larger n (supported here up to the 64-vertex
capacity). Only undirected graph6 is handled; sparse6 and digraph6 input
is rejected.
"""

from __future__ import annotations

from .graphs import CAPACITY, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; offset is the byte position in the line."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)


def _triangle_bits(g: Graph):
    for col in range(1, g.n):
        for row in range(col):
            yield g.adj[row] >> col & 1


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode a graph; orders 63 and 64 use the long size form."""
    if g.n <= 62:
        size = chr(g.n + 63)
    else:
        size = "~" + "".join(
            chr(63 + (g.n >> shift & 63)) for shift in (12, 6, 0)
        )
    chunks = []
    acc = 0
    fill = 0
    for bit in _triangle_bits(g):
        acc = acc << 1 | bit
        fill += 1
        if fill == 6:
            chunks.append(chr(acc + 63))
            acc = 0
            fill = 0
    if fill:
        chunks.append(chr((acc << (6 - fill)) + 63))
    prefix = HEADER if header else ""
    return prefix + size + "".join(chunks)


def from_graph6(line: str) -> Graph:
    """Decode one graph6 line, with strict validation.

    Accepts an optional >>graph6<< header. Rejects other formats, stray
    bytes, wrong lengths, and nonzero padding, naming the byte offset.
    """
    s = line.rstrip("\n")
    base = 0
    if s.startswith(">>"):
        if s.startswith(HEADER):
            base = len(HEADER)
            s = s[base:]
        else:
            raise Graph6Error("unrecognized format header", 0)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    first = s[0]
    if first == ":":
        raise Graph6Error("sparse6 input is not supported", base)
    if first == ";":
        raise Graph6Error("incremental sparse6 input is not supported", base)
    if first == "&":
        raise Graph6Error("digraph6 input is not supported", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)!r} outside graph6 range", base + i)

    if first == "~":
        if s[1:2] == "~":
            raise Graph6Error("orders beyond 258047 are not supported", base)
        if len(s) < 4:
            raise Graph6Error("truncated long-form order", base + len(s))
        n = 0
        for i in range(1, 4):
            n = n << 6 | (ord(s[i]) - 63)
        at = 4
    else:
        n = ord(first) - 63
        at = 1
    if n > CAPACITY:
        raise Graph6Error(f"order {n} exceeds the {CAPACITY}-vertex capacity", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - at != need:
        raise Graph6Error(
            f"expected {need} adjacency bytes for order {n}, found {len(s) - at}",
            base + at,
        )
    rows = [0] * n
    bit_at = 0
    for k in range(need):
        group = ord(s[at + k]) - 63
        for j in range(6):
            bit = group >> (5 - j) & 1
            if bit_at >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits", base + at + k)
                continue
            if bit:
                # bit index -> (row, col) of the upper triangle, column major
                col = _col_of(bit_at)
                row = bit_at - col * (col - 1) // 2
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            bit_at += 1
    return Graph(n, tuple(rows))


def _col_of(bit_index: int) -> int:
    # smallest col with col*(col+1)/2 > bit_index
    col = int((2 * bit_index) ** 0.5)
    while col * (col + 1) // 2 <= bit_index:
        col += 1
    while col * (col - 1) // 2 > bit_index:
        col -= 1
    return col


def parse_lines(text: str):
    """Yield (line_number, graph_or_error) for each nonempty line.

    A line holding only the optional format header is skipped.
    """
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == HEADER:
            continue
        try:
            yield lineno, from_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc

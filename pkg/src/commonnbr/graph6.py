"""graph6 encoding: one printable line per undirected graph.

The vertex count comes first (one byte ``n + 63`` for ``n <= 62``; ``~`` and
three 6-bit bytes up to 258047; ``~~`` and six bytes beyond), followed by the
upper triangle of the adjacency matrix in column order, packed six bits per
byte, each byte offset by 63.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .graph import Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"order {n} too large for graph6")


def write_graph6(g: Graph, header: bool = False) -> bytes:
    """Encode ``g`` (no trailing newline)."""
    out = bytearray(HEADER if header else b"")
    out += _encode_n(g.p)
    adj = g.adj
    acc = 0
    nbits = 0
    for j in range(1, g.p):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(line: bytes | str) -> Graph:
    """Decode one graph6 line.  A leading ``>>graph6<<`` and trailing newline are allowed."""
    if isinstance(line, str):
        line = line.encode("ascii", errors="replace")
    data = line.rstrip(b"\r\n")
    start = 0
    if data.startswith(HEADER):
        start = len(HEADER)
    for k in range(start, len(data)):
        if not 63 <= data[k] <= 126:
            raise Graph6Error(f"byte {data[k]!r} outside the graph6 range 63..126", k)
    if start >= len(data):
        raise Graph6Error("missing order", start)
    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        width = 3
        pos += 1
        if pos < len(data) and data[pos] == 126:
            width = 6
            pos += 1
        if pos + width > len(data):
            raise Graph6Error("truncated order field", len(data))
        n = 0
        for k in range(width):
            n = (n << 6) | (data[pos + k] - 63)
        pos += width
        if (width == 3 and n <= 62) or (width == 6 and n <= 258047):
            raise Graph6Error(f"order {n} uses a non-minimal length encoding", start)
    total_bits = n * (n - 1) // 2
    need = (total_bits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} adjacency bytes for n={n}, got {len(body)}",
                          pos + min(len(body), need))
    adj = [0] * n
    i, j = 0, 1
    for k, byte in enumerate(body):
        val = byte - 63
        for shift in range(5, -1, -1):
            bit_index = k * 6 + (5 - shift)
            bit = val >> shift & 1
            if bit_index >= total_bits:
                if bit:
                    raise Graph6Error("non-zero padding bits", pos + k)
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, adj)


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Parse a stream of lines, skipping blank ones; errors name the line number."""
    for lineno, line in enumerate(lines, 1):
        raw = line.encode("ascii", errors="replace") if isinstance(line, str) else line
        if not raw.strip():
            continue
        try:
            yield parse_graph6(raw.strip())
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from None


def read_graph6_file(path) -> list[Graph]:
    with open(path, "rb") as fh:
        return list(read_graph6_lines(fh))

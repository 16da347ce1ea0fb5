"""graph6 codec.

Record layout: one size byte N(n) = chr(n + 63) for 1 <= n <= 62, followed by
the upper-triangle adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ...
(column-major), zero-padded to a multiple of six, each six-bit group emitted
as chr(value + 63).  The optional ``>>graph6<<`` stream header is accepted on
input, never produced.  Multi-byte sizes (n > 62) are out of scope.
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, SimpleGraph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _as_bytes(data: bytes | str) -> bytes:
    if isinstance(data, str):
        try:
            return data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error(f"non-ASCII graph6 data: {exc}") from None
    return data


def parse_graph6(data: bytes | str) -> SimpleGraph:
    """Decode a single graph6 record (optionally prefixed with the header)."""
    raw = _as_bytes(data).rstrip(b"\r\n")
    if raw.startswith(HEADER):
        raw = raw[len(HEADER):]
    if not raw:
        raise Graph6Error("empty record")
    n = raw[0] - 63
    if n == 126:
        raise Graph6Error("multi-byte size encoding (n > 62) is not supported")
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"malformed length byte {raw[0]!r} (n={n})")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = raw[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit body: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage after record: {body[nbytes:]!r}")
    bits = 0  # bit k of the triangle stream at position (nbits-1-k) for easy shifts
    for ch in body:
        val = ch - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"byte {ch!r} outside graph6 range")
        bits = (bits << 6) | val
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    edges = []
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if bits >> k & 1:
                edges.append((i, j))
    return SimpleGraph(n, edges)


def write_graph6(g: SimpleGraph) -> bytes:
    """Canonical graph6 record for ``g`` (no header, no newline)."""
    return bytes([g.n + 63]) + _body(g)


def _body(g: SimpleGraph) -> bytes:
    n = g.n
    bits = 0
    k = 0
    for j in range(1, n):
        col = g.masks[j]
        for i in range(j):
            bits = (bits << 1) | (col >> i & 1)
            k += 1
    pad = (-k) % 6
    bits <<= pad
    k += pad
    out = bytearray()
    for shift in range(k - 6, -1, -6):
        out.append((bits >> shift & 63) + 63)
    return bytes(out)


def read_graph6_lines(lines) -> list[SimpleGraph]:
    """Decode an iterable of graph6 lines, skipping blank ones."""
    out = []
    for line in lines:
        raw = _as_bytes(line).strip()
        if raw:
            out.append(parse_graph6(raw))
    return out

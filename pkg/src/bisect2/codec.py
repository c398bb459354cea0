"""Text formats: graph6 for simple graphs, a plain edge list for multigraphs,
and the one-line B/W colouring document.

The graph6 reader is strict: payload bytes must be printable (63..126),
the payload length must match the order, and unused padding bits must be
zero.
"""

from __future__ import annotations

from .errors import MalformedColouring, MalformedHeader, NonCanonicalPadding, NotSimple, PayloadLengthMismatch
from .graph import Colouring, Multigraph

GRAPH6_HEADER = ">>graph6<<"
_BIAS = 63


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not data:
        raise MalformedHeader("empty graph6 line")
    if data[0] != 126:
        return data[0] - _BIAS, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedHeader("truncated 8-byte order header")
        width, start = 6, 2
    else:
        if len(data) < 4:
            raise MalformedHeader("truncated 4-byte order header")
        width, start = 3, 1
    n = 0
    for b in data[start : start + width]:
        n = (n << 6) | (b - _BIAS)
    return n, start + width


def _encode_order(n: int) -> bytes:
    if n < 63:
        return bytes([n + _BIAS])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + _BIAS for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + _BIAS for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def read_graph6(line: str) -> Multigraph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise MalformedHeader("graph6 line is not ASCII") from exc
    if not data or data[0] in (ord(":"), ord(";"), ord("&")):
        raise MalformedHeader("not a graph6 line")
    if any(b < 63 or b > 126 for b in data):
        raise MalformedHeader("graph6 bytes must lie in 63..126")
    n, offset = _decode_order(data)
    payload = data[offset:]
    nbits = n * (n - 1) // 2
    if len(payload) != (nbits + 5) // 6:
        raise PayloadLengthMismatch(f"order {n} needs {(nbits + 5) // 6} payload bytes, got {len(payload)}")
    bits = []
    for b in payload:
        x = b - _BIAS
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise NonCanonicalPadding("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Multigraph(n, tuple(edges))


def write_graph6(g: Multigraph) -> str:
    if not g.is_simple():
        raise NotSimple("graph6 cannot encode parallel edges")
    adj = {(min(u, v), max(u, v)) for u, v in g.edges}
    bits = [1 if (i, j) in adj else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray(_encode_order(g.n))
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        out.append(x + _BIAS)
    return out.decode("ascii")


def read_graph6_lines(text: str) -> list[Multigraph]:
    """Every non-blank line of a multi-graph graph6 file."""
    return [read_graph6(line) for line in text.splitlines() if line.strip()]


def read_edge_list(text: str) -> Multigraph:
    lines = text.splitlines()
    if not lines:
        raise MalformedHeader("empty edge-list document")
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise MalformedHeader(f"bad header line {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    body = lines[1:]
    # tolerate one trailing blank line only
    if len(body) == m + 1 and not body[-1].strip():
        body = body[:-1]
    if len(body) != m:
        raise MalformedHeader(f"header announces {m} edges, found {len(body)} lines")
    edges = []
    for i, line in enumerate(body):
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MalformedHeader(f"bad edge line {i}: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Multigraph(n, tuple(edges))


def write_edge_list(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_colouring(text: str, n: int | None = None) -> Colouring:
    s = text.strip("\n").rstrip("\r")
    if "\n" in s:
        raise MalformedColouring("colouring document must be one line")
    bad = set(s) - {"B", "W"}
    if bad:
        raise MalformedColouring(f"unexpected characters {sorted(bad)}")
    if n is not None and len(s) != n:
        raise MalformedColouring(f"colouring has length {len(s)}, graph has {n} vertices")
    return Colouring.from_string(s)


def write_colouring(c: Colouring) -> str:
    return c.to_document() + "\n"

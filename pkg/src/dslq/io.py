"""graph6 and edge-list codecs."""

from __future__ import annotations

import os

import numpy as np

from .errors import ParseError
from .graph import Graph

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> sh) & 63)) for sh in (12, 6, 0))
    raise ParseError(f"graph6 cannot encode n={n}")


def to_graph6(g: Graph) -> str:
    n = g.n
    adj = g.adjacency
    bits = [int(adj[i, j]) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise ParseError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"graph6 byte {pos} ({ch!r}) outside the printable range 63..126")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise ParseError("graph6 header uses a form wider than 18 bits; unsupported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        offset = 4
    else:
        n = vals[0]
        body = vals[1:]
        offset = 1
    if n < 1:
        raise ParseError("graph6 header encodes n=0; graphs need at least one vertex")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n} "
            f"(first body byte at {offset})"
        )
    bits = [(v >> (5 - b)) & 1 for v in body for b in range(6)]
    if any(bits[nbits:]):
        raise ParseError(f"graph6 padding bits are not zero (byte {offset + len(body) - 1})")
    adj = np.zeros((n, n), dtype=bool)
    it = iter(bits)
    for j in range(1, n):
        for i in range(j):
            if next(it):
                adj[i, j] = adj[j, i] = True
    return Graph(adj)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based).

    Blank lines and ``#`` comments are ignored. Errors name the 1-based line.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ParseError("edge list is empty")
    lineno, header = rows[0]
    try:
        n, m = (int(t) for t in header.split())
    except ValueError:
        raise ParseError(f"line {lineno}: malformed header {header!r}, expected 'n m'") from None
    if n < 1 or m < 0:
        raise ParseError(f"line {lineno}: header needs n >= 1 and m >= 0")
    if len(rows) - 1 != m:
        raise ParseError(f"line {lineno}: header declares {m} edges, found {len(rows) - 1}")
    adj = np.zeros((n, n), dtype=bool)
    for lineno, line in rows[1:]:
        try:
            u, v = (int(t) for t in line.split())
        except ValueError:
            raise ParseError(f"line {lineno}: malformed edge {line!r}, expected 'u v'") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: label out of range 0..{n - 1} in {line!r}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if adj[u, v]:
            raise ParseError(f"line {lineno}: duplicate edge {u}-{v}")
        adj[u, v] = adj[v, u] = True
    return Graph(adj)


def parse_graph(source: str, fmt: str) -> Graph:
    """Read a graph from a file path or an inline string.

    An inline edge list may separate lines with ``/`` or ``;``.
    """
    if os.path.isfile(source):
        with open(source) as fh:
            text = fh.read()
    else:
        text = source
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("no graph6 data")
        return from_graph6(lines[0])
    if fmt == "edgelist":
        if not os.path.isfile(source):
            text = text.replace("/", "\n").replace(";", "\n")
        return from_edgelist(text)
    raise ParseError(f"unknown graph format {fmt!r}")

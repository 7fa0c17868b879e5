"""Simple undirected graphs and the operations used to assemble extremal families.

Vertices are labelled ``0..n-1``. A :class:`Graph` is immutable: every
operation returns a new graph. Binary operations keep the left operand's
labels and shift the right operand's labels by ``g1.n``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

import numpy as np

from .errors import InvalidParameterError


class Graph:
    __slots__ = ("_adj", "_hash")

    def __init__(self, adjacency):
        adj = np.array(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InvalidParameterError("adjacency must be a square matrix")
        if adj.shape[0] < 1:
            raise InvalidParameterError("a graph needs at least one vertex")
        if not np.array_equal(adj, adj.T):
            raise InvalidParameterError("adjacency must be symmetric")
        if adj.diagonal().any():
            raise InvalidParameterError("self-loops are not allowed")
        adj.setflags(write=False)
        self._adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise InvalidParameterError(f"n must be positive, got {n}")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    @property
    def num_edges(self) -> int:
        return int(self._adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in row-major order."""
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self._adj[v])]

    def degree(self, v: int) -> int:
        return int(self._adj[v].sum())

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        n = self.n
        for u in range(n):
            for v in range(u + 1, n):
                if not self._adj[u, v]:
                    yield u, v

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise InvalidParameterError(f"self-loop at vertex {u}")
        adj = self._adj.copy()
        adj[u, v] = adj[v, u] = True
        return Graph(adj)

    def neighbor_masks(self) -> np.ndarray:
        """Neighbourhood of each vertex as an int64 bitmask (needs ``n <= 62``)."""
        if self.n > 62:
            raise InvalidParameterError("bitmask form needs n <= 62")
        weights = np.int64(1) << np.arange(self.n, dtype=np.int64)
        return (self._adj.astype(np.int64) * weights).sum(axis=1).astype(np.int64)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, np.packbits(self._adj).tobytes()))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


def make_named(kind: str, n: int) -> Graph:
    """Standard graphs: ``complete``, ``cycle``, ``path`` or ``empty``."""
    if n < 1:
        raise InvalidParameterError(f"n must be positive, got {n}")
    if kind == "complete":
        return Graph(~np.eye(n, dtype=bool))
    if kind == "empty":
        return Graph(np.zeros((n, n), dtype=bool))
    if kind == "path":
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        if n < 3:
            raise InvalidParameterError(f"a cycle needs n >= 3, got {n}")
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    raise InvalidParameterError(f"unknown graph kind {kind!r}")


def complete(n: int) -> Graph:
    return make_named("complete", n)


def empty(n: int) -> Graph:
    return make_named("empty", n)


def path(n: int) -> Graph:
    return make_named("path", n)


def cycle(n: int) -> Graph:
    return make_named("cycle", n)


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at label 0."""
    return join(complete(1), empty(leaves))


def _block(g1: Graph, g2: Graph, cross: bool) -> Graph:
    n1, n2 = g1.n, g2.n
    adj = np.zeros((n1 + n2, n1 + n2), dtype=bool)
    adj[:n1, :n1] = g1.adjacency
    adj[n1:, n1:] = g2.adjacency
    if cross:
        adj[:n1, n1:] = True
        adj[n1:, :n1] = True
    return Graph(adj)


def join(g1: Graph, g2: Graph) -> Graph:
    return _block(g1, g2, cross=True)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return _block(g1, g2, cross=False)


def complement(g: Graph) -> Graph:
    adj = ~g.adjacency
    np.fill_diagonal(adj, False)
    return Graph(adj)


def _checked_vertices(g: Graph, s: Iterable[int]) -> list[int]:
    members = sorted(set(int(v) for v in s))
    for v in members:
        if not 0 <= v < g.n:
            raise InvalidParameterError(f"vertex {v} not in graph of order {g.n}")
    return members


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on the vertices outside ``s``; labels keep their order."""
    removed = set(_checked_vertices(g, s))
    keep = [v for v in range(g.n) if v not in removed]
    if not keep:
        raise InvalidParameterError("cannot delete every vertex")
    return Graph(g.adjacency[np.ix_(keep, keep)])


def relabel(g: Graph, order: Iterable[int]) -> Graph:
    """Graph whose vertex ``i`` is vertex ``order[i]`` of ``g``."""
    perm = list(order)
    if sorted(perm) != list(range(g.n)):
        raise InvalidParameterError("order must be a permutation of the vertices")
    return Graph(g.adjacency[np.ix_(perm, perm)])


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)[0]) == g.n


def isolated_count(g: Graph) -> int:
    return int((g.degrees() == 0).sum())


def random_graph(n: int, p: float, rng: np.random.Generator, connected: bool = False) -> Graph:
    """G(n, p) sample. With ``connected=True`` a random spanning tree is laid first."""
    upper = np.triu(rng.random((n, n)) < p, 1)
    if connected and n > 1:
        order = rng.permutation(n)
        for i in range(1, n):
            u, v = order[i], order[rng.integers(0, i)]
            upper[min(u, v), max(u, v)] = True
    return Graph(upper | upper.T)

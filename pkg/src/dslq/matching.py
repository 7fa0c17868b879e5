"""Fractional matchings, deficiency witnesses and {K2, C_k}-factors."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import SizeLimitError
from .graph import Graph, components, delete_vertices, isolated_count

BRUTE_CAP = 24
FACTOR_CAP = 12
# int64 bitmasks; larger scans are infeasible anyway
HARD_CAP = 40


@dataclass(frozen=True)
class DeficiencyWitness:
    s: tuple[int, ...]
    deficiency: int


@dataclass(frozen=True)
class FractionalMatching:
    weights: dict  # (u, v) with u < v -> Fraction

    @property
    def value(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def load(self, n: int) -> list[Fraction]:
        """Total weight at each vertex."""
        out = [Fraction(0)] * n
        for (u, v), w in self.weights.items():
            out[u] += w
            out[v] += w
        return out


def deficiency(g: Graph, s: Iterable[int]) -> int:
    """i(G - S) - |S|."""
    members = set(s)
    if len(members) == g.n:
        return -g.n
    return isolated_count(delete_vertices(g, members)) - len(members)


def max_deficiency_brute(g: Graph, cap: int = BRUTE_CAP) -> DeficiencyWitness:
    """Maximise i(G - S) - |S| over all 2^n subsets.

    Ties go to the smallest |S|, then to the smallest bitmask.
    """
    if g.n > min(cap, HARD_CAP):
        raise SizeLimitError(
            f"brute force limited to n <= {min(cap, HARD_CAP)} (got n={g.n}); "
            "use fractional_matching_number_fast"
        )
    best, mask = _kernels.deficiency_scan(g.neighbor_masks(), g.n)
    s = tuple(v for v in range(g.n) if (int(mask) >> v) & 1)
    return DeficiencyWitness(s, int(best))


def fractional_matching_number_brute(g: Graph, cap: int = BRUTE_CAP) -> Fraction:
    return Fraction(g.n - max_deficiency_brute(g, cap).deficiency, 2)


def bipartite_double_cover(g: Graph) -> Graph:
    """G x K2: vertex (v, 0) is label v, (v, 1) is label n + v."""
    n = g.n
    adj = np.zeros((2 * n, 2 * n), dtype=bool)
    adj[:n, n:] = g.adjacency
    adj[n:, :n] = g.adjacency
    return Graph(adj)


def hopcroft_karp(adj: list[list[int]], n_right: int) -> list[int]:
    """Maximum bipartite matching. ``adj[u]`` lists right neighbours of left vertex u.

    Returns ``match[u]`` = matched right vertex or -1.
    """
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    inf = n_left + n_right + 1
    while True:
        dist = [inf] * n_left
        queue = deque(u for u in range(n_left) if match_l[u] < 0)
        for u in queue:
            dist[u] = 0
        found = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                x = match_r[w]
                if x < 0:
                    found = True
                elif dist[x] == inf:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if not found:
            return match_l
        ptr = [0] * n_left
        for root in range(n_left):
            if match_l[root] >= 0:
                continue
            # iterative layered DFS for an augmenting path from root
            stack = [root]
            while stack:
                u = stack[-1]
                advanced = False
                while ptr[u] < len(adj[u]):
                    w = adj[u][ptr[u]]
                    ptr[u] += 1
                    x = match_r[w]
                    if x < 0:
                        # augment along the stack
                        for depth in range(len(stack) - 1, -1, -1):
                            a = stack[depth]
                            prev = match_l[a]
                            match_l[a] = w
                            match_r[w] = a
                            w = prev
                        stack = []
                        advanced = True
                        break
                    if dist[x] == dist[u] + 1:
                        stack.append(x)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = inf
                    stack.pop()


def _double_cover_matching(g: Graph) -> list[int]:
    adj = [g.neighbors(u) for u in range(g.n)]
    return hopcroft_karp(adj, g.n)


def fractional_matching_number_fast(g: Graph) -> Fraction:
    """Half the maximum matching of the bipartite double cover."""
    return Fraction(sum(1 for w in _double_cover_matching(g) if w >= 0), 2)


def optimal_fractional_matching(g: Graph) -> FractionalMatching:
    """Half-integral optimum: edge uv gets (number of its matched copies) / 2."""
    match = _double_cover_matching(g)
    weights = {e: Fraction(0) for e in g.edges()}
    for u, w in enumerate(match):
        if w >= 0:
            weights[(min(u, w), max(u, w))] += Fraction(1, 2)
    return FractionalMatching(weights)


def has_k2ck_factor(g: Graph, cap: int = BRUTE_CAP) -> tuple[bool, DeficiencyWitness | None]:
    """Tutte-type test: a factor exists iff no S isolates more than |S| vertices.

    When there is no factor and ``n <= cap`` a violating witness is returned.
    """
    if 2 * fractional_matching_number_fast(g) == g.n:
        return True, None
    if g.n <= min(cap, HARD_CAP):
        return False, max_deficiency_brute(g, cap)
    return False, None


def find_factor_backtracking(g: Graph, cap: int = FACTOR_CAP) -> list[tuple[int, int]] | None:
    """Explicit factor whose components are single edges or odd cycles.

    Even cycles are never needed (they split into edges), so only odd
    cycles are tried. Returns the factor's edges, or None.
    """
    n = g.n
    if n > cap:
        raise SizeLimitError(f"backtracking factor search limited to n <= {cap} (got n={n})")
    nbrs = [g.neighbors(v) for v in range(n)]
    deg = [len(x) for x in nbrs]
    order = sorted(range(n), key=lambda v: (deg[v], v))
    for v in range(n):
        nbrs[v].sort(key=lambda u: (deg[u], u))
    adj = g.adjacency
    covered = [False] * n
    chosen: list[tuple[int, int]] = []
    failed: set[int] = set()

    def key() -> int:
        return sum(1 << v for v in range(n) if covered[v])

    def solve() -> bool:
        v = next((u for u in order if not covered[u]), -1)
        if v < 0:
            return True
        state = key()
        if state in failed:
            return False
        covered[v] = True
        for u in nbrs[v]:
            if covered[u]:
                continue
            covered[u] = True
            chosen.append((min(u, v), max(u, v)))
            if solve():
                return True
            chosen.pop()
            covered[u] = False
        if grow(v, [v]):
            return True
        covered[v] = False
        failed.add(state)
        return False

    def grow(start: int, trail: list[int]) -> bool:
        last = trail[-1]
        for u in nbrs[last]:
            if covered[u]:
                continue
            covered[u] = True
            trail.append(u)
            # close odd cycles once, orientation fixed by trail[1] < u
            if len(trail) >= 3 and len(trail) % 2 == 1 and adj[u, start] and trail[1] < u:
                ring = trail + [start]
                edges = [(min(a, b), max(a, b)) for a, b in zip(ring, ring[1:])]
                chosen.extend(edges)
                if solve():
                    return True
                del chosen[-len(edges):]
            if grow(start, trail):
                return True
            trail.pop()
            covered[u] = False
        return False

    if solve():
        return sorted(chosen)
    return None


def is_k2ck_factor(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    """Check that ``edges`` span ``g`` with components that are K2 or cycles."""
    edges = list(edges)
    n = g.n
    if any(not g.has_edge(u, v) for u, v in edges) or len(set(edges)) != len(edges):
        return False
    sub = Graph.from_edges(n, edges)
    degs = sub.degrees()
    if (degs == 0).any() or (degs > 2).any():
        return False
    for comp in components(sub):
        size = len(comp)
        m = sum(1 for u, v in edges if u in comp)
        if size == 2 and m == 1:
            continue
        if size >= 3 and m == size and all(degs[v] == 2 for v in comp):
            continue
        return False
    return True

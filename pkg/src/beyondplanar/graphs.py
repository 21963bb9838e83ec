"""Simple undirected graphs and the basic decision procedures on them.

Graphs are immutable after construction and store a sorted edge array, so
identical constructions compare and serialize identically.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple

import networkx as nx
import numpy as np

from .errors import SimplicityError, UsageError


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_edges", "_codes", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise UsageError("vertex count must be non-negative")
        self.n = int(n)
        pairs = sorted(normalize_edge(int(u), int(v)) for u, v in edges)
        arr = np.array(pairs, dtype=np.int64).reshape(len(pairs), 2)
        if len(pairs) > 0:
            if arr.min() < 0 or arr.max() >= n:
                raise UsageError("edge endpoint out of range")
            if np.any(arr[:, 0] == arr[:, 1]):
                raise SimplicityError("loop edge")
        codes = arr[:, 0] * (self.n + 1) + arr[:, 1]
        if len(pairs) > 1 and np.any(np.diff(codes) == 0):
            raise SimplicityError("duplicate edge")
        self._edges = arr
        self._codes = codes
        self._adj: list[list[int]] | None = None

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self._edges]

    def edge_array(self) -> np.ndarray:
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        u, v = normalize_edge(u, v)
        code = u * (self.n + 1) + v
        i = np.searchsorted(self._codes, code)
        return i < len(self._codes) and self._codes[i] == code

    def adjacency(self) -> list[list[int]]:
        if self._adj is None:
            adj: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self._edges:
                adj[int(u)].append(int(v))
                adj[int(v)].append(int(u))
            for lst in adj:
                lst.sort()
            self._adj = adj
        return self._adj

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._edges, other._edges)

    def __hash__(self) -> int:
        return hash((self.n, self._edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def complete(cls, k: int) -> "Graph":
        return cls(k, [(i, j) for i in range(k) for j in range(i + 1, k)])

    @classmethod
    def cycle(cls, k: int) -> "Graph":
        return cls(k, [(i, (i + 1) % k) for i in range(k)])


class PlanarityReport(NamedTuple):
    planar: bool
    three_connected: bool
    embedding: "object | None"  # PlaneEmbedding when planar


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    adj = g.adjacency()
    seen = bytearray(g.n)
    stack = [0]
    seen[0] = 1
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


def is_biconnected(g: Graph) -> bool:
    if g.n < 3:
        return g.n == 2 and g.m == 1
    return _biconnected(g.adjacency(), g.n)


def _biconnected(adj: list[list[int]], n: int) -> bool:
    """Iterative Hopcroft-Tarjan articulation test; also checks connectivity."""
    disc = [0] * n
    low = [0] * n
    parent = [-1] * n
    timer = 1
    root_children = 0
    stack: list[tuple[int, int]] = [(0, 0)]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, i = stack[-1]
        if i < len(adj[v]):
            stack[-1] = (v, i + 1)
            w = adj[v][i]
            if disc[w] == 0:
                parent[w] = v
                if v == 0:
                    root_children += 1
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, 0))
            elif w != parent[v]:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            p = parent[v]
            if p >= 0:
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    return False
    if any(d == 0 for d in disc):
        return False
    return root_children <= 1


def is_three_connected(g: Graph) -> bool:
    """Exact 3-connectivity.

    A graph on >= 4 vertices is 3-connected iff deleting any single vertex
    leaves a biconnected graph. Quadratic, which is fine at validator scale.
    """
    if g.n < 4:
        return False
    if min(g.degrees()) < 3:
        return False
    if not is_biconnected(g):
        return False
    adj = g.adjacency()
    for v in range(g.n):
        sub_ids = [u for u in range(g.n) if u != v]
        remap = {u: i for i, u in enumerate(sub_ids)}
        sub_adj: list[list[int]] = [[] for _ in range(g.n - 1)]
        for u in sub_ids:
            lst = sub_adj[remap[u]]
            for w in adj[u]:
                if w != v:
                    lst.append(remap[w])
        if not _biconnected(sub_adj, g.n - 1):
            return False
    return True


def is_planar_3connected(g: Graph) -> PlanarityReport:
    """Planarity plus 3-connectivity, with an embedding for planar inputs.

    For 3-connected planar graphs the embedding is unique up to reflection,
    so the returned rotation system is canonical for them.
    """
    from .embeddings import PlaneEmbedding

    planar, cert = nx.check_planarity(g.to_networkx(), counterexample=False)
    three = is_three_connected(g)
    embedding = None
    if planar and g.n > 0:
        data = cert.get_data()
        rotations = [data[v] for v in range(g.n)]
        embedding = PlaneEmbedding(rotations)
    return PlanarityReport(planar, three, embedding)


def girth_at_least(g: Graph, k: int) -> bool:
    """True iff g has no cycle shorter than k (BFS from every vertex)."""
    adj = g.adjacency()
    best = float("inf")
    for s in range(g.n):
        dist = {s: 0}
        par = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if dist[u] * 2 >= best - 1:
                continue
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    queue.append(w)
                elif par[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best < k:
            return False
    return best >= k

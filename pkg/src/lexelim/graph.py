"""Immutable simple undirected graphs on vertices ``0..n-1``.

Every other module builds on :class:`Graph`.  Adjacency is kept as sorted
tuples; frozensets, bitmasks, CSR arrays and a bit-packed adjacency matrix are
derived lazily and cached on the instance.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidEdge, InvalidParameter, InvalidVertex, TooLarge

DEFAULT_MATRIX_CAP = 20_000


class Graph:
    """A finite simple undirected graph with dense integer vertex ids."""

    __slots__ = ("_n", "_adj", "_m", "_cache")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        # Trusted constructor: callers must pass sorted, symmetric, loop-free lists.
        # Use build_graph() for untrusted input.
        self._n = n
        self._adj = tuple(tuple(a) for a in adjacency)
        self._m = sum(len(a) for a in self._adj) // 2
        self._cache: dict = {}

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of ``v``."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @property
    def neighbor_sets(self) -> tuple[frozenset, ...]:
        s = self._cache.get("sets")
        if s is None:
            s = self._cache["sets"] = tuple(frozenset(a) for a in self._adj)
        return s

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit ``u`` set iff ``u`` adjacent)."""
        s = self._cache.get("masks")
        if s is None:
            out = []
            for nbrs in self._adj:
                mask = 0
                for u in nbrs:
                    mask |= 1 << u
                out.append(mask)
            s = self._cache["masks"] = tuple(out)
        return s

    @property
    def csr(self) -> tuple[array, array]:
        """``(indptr, indices)`` int32 arrays; rows are sorted."""
        s = self._cache.get("csr")
        if s is None:
            indptr = array("i", [0]) * (self._n + 1)
            total = 0
            for v, nbrs in enumerate(self._adj):
                total += len(nbrs)
                indptr[v + 1] = total
            indices = array("i", [u for nbrs in self._adj for u in nbrs])
            s = self._cache["csr"] = (indptr, indices)
        return s

    def adjacency_matrix(self, cap: int = DEFAULT_MATRIX_CAP) -> bytearray:
        """Bit-packed dense adjacency matrix, row-major, ``(n + 7) // 8`` bytes per row.

        Raises TooLarge when ``n > cap``.
        """
        s = self._cache.get("matrix")
        if s is not None:
            return s
        if self._n > cap:
            raise TooLarge(f"adjacency matrix needs n <= {cap}, got n = {self._n}")
        row = (self._n + 7) >> 3
        mat = bytearray(row * self._n)
        for u, nbrs in enumerate(self._adj):
            base = u * row
            for v in nbrs:
                mat[base + (v >> 3)] |= 1 << (v & 7)
        self._cache["matrix"] = mat
        return mat

    def has_matrix(self) -> bool:
        return "matrix" in self._cache

    def has_edge(self, u: int, v: int) -> bool:
        mat = self._cache.get("matrix")
        if mat is not None:
            return bool(mat[u * ((self._n + 7) >> 3) + (v >> 3)] >> (v & 7) & 1)
        return v in self.neighbor_sets[u]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with one non-negative integer weight per vertex."""

    graph: Graph
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) != self.graph.n:
            raise InvalidParameter(f"expected {self.graph.n} weights, got {len(w)}")
        if any(x < 0 for x in w):
            raise InvalidParameter("weights must be non-negative")
        object.__setattr__(self, "weights", w)

    @classmethod
    def unit(cls, graph: Graph) -> WeightedGraph:
        return cls(graph, (1,) * graph.n)

    @property
    def n(self) -> int:
        return self.graph.n

    def weight(self, vertices: Iterable[int]) -> int:
        return sum(self.weights[v] for v in vertices)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    >>> build_graph(3, [(0, 1), (1, 2)]).degrees()
    [1, 2, 1]
    """
    if n < 0:
        raise InvalidParameter("vertex count must be non-negative")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) out of range for n = {n}")
        if u == v:
            raise InvalidEdge(f"self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise InvalidEdge(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    return Graph(n, adj)


def graph_from_masks(masks: Sequence[int]) -> Graph:
    """Build from symmetric neighbourhood bitmasks (trusted)."""
    adj = []
    for mask in masks:
        nbrs = []
        while mask:
            low = mask & -mask
            nbrs.append(low.bit_length() - 1)
            mask ^= low
        adj.append(nbrs)
    return Graph(len(masks), adj)


def empty_graph(n: int) -> Graph:
    return Graph(n, [()] * n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [[u for u in range(n) if u != v] for v in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def _check_vertices(G: Graph, S: Iterable[int]) -> list[int]:
    out = sorted(set(S))
    if out and (out[0] < 0 or out[-1] >= G.n):
        raise InvalidVertex(f"vertex set {out} not inside 0..{G.n - 1}")
    return out


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(G[S], idmap)`` where ``idmap[i]`` is the original id of new vertex ``i``.

    New ids follow increasing original id.
    """
    verts = _check_vertices(G, S)
    local = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        adj.append([local[u] for u in G.neighbors(v) if u in local])
    return Graph(len(verts), adj), tuple(verts)


def remove_vertices(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``G - S`` with its id map (see :func:`induced_subgraph`)."""
    gone = set(_check_vertices(G, S))
    return induced_subgraph(G, [v for v in range(G.n) if v not in gone])


def components_within(G: Graph, allowed: Iterable[int]) -> list[list[int]]:
    """Connected components of ``G[allowed]`` as sorted lists, ordered by smallest id."""
    allowed = set(allowed)
    seen: set[int] = set()
    blocks = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        block = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.neighbors(x):
                if y in allowed and y not in seen:
                    seen.add(y)
                    block.append(y)
                    queue.append(y)
        block.sort()
        blocks.append(block)
    return blocks


def components(G: Graph) -> list[list[int]]:
    """Partition of ``V(G)`` into connected components, ordered by smallest id."""
    comp = [-1] * G.n
    blocks = []
    for s in range(G.n):
        if comp[s] >= 0:
            continue
        c = len(blocks)
        comp[s] = c
        block = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.neighbors(x):
                if comp[y] < 0:
                    comp[y] = c
                    block.append(y)
                    queue.append(y)
        block.sort()
        blocks.append(block)
    return blocks


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def complement(G: Graph) -> Graph:
    n = G.n
    adj = []
    for v in range(n):
        nbrs = G.neighbor_sets[v]
        adj.append([u for u in range(n) if u != v and u not in nbrs])
    return Graph(n, adj)


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    verts = _check_vertices(G, S)
    sets = G.neighbor_sets
    for i, u in enumerate(verts):
        nu = sets[u]
        for v in verts[i + 1:]:
            if v not in nu:
                return False
    return True


def is_stable(G: Graph, S: Iterable[int]) -> bool:
    verts = _check_vertices(G, S)
    sets = G.neighbor_sets
    for i, u in enumerate(verts):
        nu = sets[u]
        for v in verts[i + 1:]:
            if v in nu:
                return False
    return True


def bfs_path(G: Graph, source: int, target: int, allowed) -> list[int] | None:
    """Shortest ``source``-``target`` path whose internal vertices lie in ``allowed``.

    ``allowed`` is any container supporting ``in``.  Returns None if absent.
    """
    if source == target:
        return [source]
    parent = {source: source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in G.neighbors(x):
            if y in parent:
                continue
            if y == target:
                path = [y, x]
                while x != source:
                    x = parent[x]
                    path.append(x)
                path.reverse()
                return path
            if y in allowed:
                parent[y] = x
                queue.append(y)
    return None

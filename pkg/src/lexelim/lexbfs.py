"""LexBFS orderings: computation, exact verification, and the last-vertex moplex property."""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _kernels
from .errors import InvalidOrdering, InvalidVertex, LemmaViolation, NotLexBFS, TheoremViolation
from .graph import Graph, bfs_path, components_within, is_connected


class VertexOrdering(Sequence[int]):
    """A permutation of ``0..n-1`` with its inverse.

    ``order[i]`` is the ``i``-th vertex, ``pos[v]`` the position of ``v``
    (both 0-based).  Both are ``array('i')``: no per-vertex Python objects,
    which matters for orderings of tens of thousands of vertices.
    """

    __slots__ = ("order", "pos")

    def __init__(self, order: Iterable[int]):
        try:
            arr = order if isinstance(order, array) and order.typecode == "i" else array("i", order)
        except (TypeError, OverflowError):
            raise InvalidOrdering(f"not a permutation: {order!r}") from None
        n = len(arr)
        if n and (min(arr) < 0 or max(arr) >= n):
            raise InvalidOrdering(f"not a permutation of 0..{n - 1}: {list(arr)}")
        pos = _kernels.inverse_permutation(arr)
        if -1 in pos:  # a repeated vertex leaves its partner's slot empty
            raise InvalidOrdering(f"not a permutation of 0..{n - 1}: {list(arr)}")
        self.order = arr
        self.pos = pos

    @classmethod
    def _trusted(cls, order: array, pos: array) -> "VertexOrdering":
        # kernel output is a permutation by construction; skip the checks
        self = object.__new__(cls)
        self.order = order
        self.pos = pos
        return self

    def __getitem__(self, i):
        return self.order[i]

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexOrdering):
            return self.order == other.order
        if isinstance(other, (tuple, list)):
            return self.order.tolist() == list(other)
        return NotImplemented

    def __hash__(self) -> int:
        # equal to the hash of the same tuple, matching __eq__
        return hash(tuple(self.order))

    def __repr__(self) -> str:
        return f"VertexOrdering({list(self.order)})"

    @property
    def last(self) -> int:
        return self.order[-1]

    def precedes(self, u: int, v: int) -> bool:
        return self.pos[u] < self.pos[v]

    def earlier_neighbors(self, G: Graph, v: int) -> list[int]:
        """Neighbours of ``v`` placed before it, in increasing id order."""
        p = self.pos[v]
        return [u for u in G.neighbors(v) if self.pos[u] < p]


def as_ordering(G: Graph, o) -> VertexOrdering:
    if not isinstance(o, VertexOrdering):
        o = VertexOrdering(o)
    if len(o) != G.n:
        raise InvalidOrdering(f"ordering has {len(o)} vertices, graph has {G.n}")
    return o


def lexbfs(G: Graph, start: int = 0) -> VertexOrdering:
    """LexBFS from ``start`` in O(n + m); ties go to the smallest id.

    >>> from lexelim.graph import cycle_graph
    >>> list(lexbfs(cycle_graph(4), 0))
    [0, 1, 3, 2]
    """
    if G.n == 0 and start == 0:
        return VertexOrdering(())
    if not 0 <= start < G.n:
        raise InvalidVertex(f"start vertex {start} out of range")
    indptr, indices = G.csr
    order = _kernels.lexbfs_order(indptr, indices, G.n, start)
    return VertexOrdering._trusted(order, _kernels.inverse_permutation(order))


def lexbfs_violation(G: Graph, o) -> tuple[int, int, int] | None:
    """A triple ``(c, b, a)`` with ``c < b < a``, ``ca`` an edge, ``cb`` not, and no
    earlier ``d`` adjacent to ``b`` but not ``a``; None if ``o`` is a LexBFS ordering."""
    o = as_ordering(G, o)
    indptr, indices = G.csr
    return _kernels.lexbfs_violation(indptr, indices, o.order)


def is_lexbfs_ordering(G: Graph, o) -> bool:
    """Exact membership test via the four-point characterisation, O(n^3)."""
    return lexbfs_violation(G, o) is None


@dataclass(frozen=True)
class MoplexWitness:
    """Evidence for the last vertex ``z`` of a LexBFS ordering.

    ``complete`` is set when the graph is complete (no component exists).
    Otherwise ``component`` is a component of ``G - N[z]`` and ``evidence`` maps
    every neighbour ``x`` of ``z`` to a neighbour of ``x`` inside the component,
    or to None when ``N[x] = N[z]``.
    """

    z: int
    complete: bool
    component: frozenset = frozenset()
    evidence: dict = field(default_factory=dict)

    def verify(self, G: Graph) -> bool:
        z = self.z
        if self.complete:
            return G.m == G.n * (G.n - 1) // 2
        closed_z = G.neighbor_sets[z] | {z}
        rest = [v for v in range(G.n) if v not in closed_z]
        if sorted(self.component) not in components_within(G, rest):
            return False
        if set(self.evidence) != set(G.neighbors(z)):
            return False
        for x, y in self.evidence.items():
            if y is None:
                if G.neighbor_sets[x] | {x} != closed_z:
                    return False
            elif y not in self.component or y not in G.neighbor_sets[x]:
                return False
        return True


def last_vertex_moplex_witness(G: Graph, o) -> MoplexWitness:
    """Component of ``G - N[z]`` seen by every neighbour of ``z`` not twinned with it.

    ``G`` must be connected.  Raises NotLexBFS for an invalid ordering and
    TheoremViolation if no component works (which would be a bug).
    """
    o = as_ordering(G, o)
    if G.n == 0:
        raise InvalidOrdering("empty graph has no last vertex")
    if not is_connected(G):
        raise ValueError("graph must be connected; handle components separately")
    if not is_lexbfs_ordering(G, o):
        raise NotLexBFS("ordering is not a LexBFS ordering")
    z = o.last
    if G.m == G.n * (G.n - 1) // 2:
        return MoplexWitness(z, True)
    sets = G.neighbor_sets
    closed_z = sets[z] | {z}
    rest = [v for v in range(G.n) if v not in closed_z]
    blocks = components_within(G, rest)
    u = max(rest, key=lambda v: o.pos[v])
    blocks.sort(key=lambda b: u not in b)  # proof's component first
    for block in blocks:
        comp = frozenset(block)
        evidence = {}
        for x in G.neighbors(z):
            if sets[x] | {x} == closed_z:
                evidence[x] = None
                continue
            hit = next((y for y in G.neighbors(x) if y in comp), None)
            if hit is None:
                break
            evidence[x] = hit
        else:
            return MoplexWitness(z, False, comp, evidence)
    raise TheoremViolation(f"no suitable component of G - N[{z}]")


def connecting_path(G: Graph, o, a: int, b: int, c: int) -> list[int]:
    """A ``b``-``c`` path whose internal vertices avoid ``N[z]``, ``z`` the last vertex.

    Intended for ``c < b < a`` in ``o`` with ``ca`` an edge, where such a path
    always exists.  Raises LemmaViolation if the search fails.
    """
    o = as_ordering(G, o)
    for v in (a, b, c):
        if not 0 <= v < G.n:
            raise InvalidVertex(f"vertex {v} out of range")
    z = o.last
    closed_z = G.neighbor_sets[z] | {z}
    allowed = _Outside(closed_z)
    path = bfs_path(G, b, c, allowed)
    if path is None:
        raise LemmaViolation(f"no path from {b} to {c} avoiding N[{z}]")
    return path


class _Outside:
    __slots__ = ("excluded",)

    def __init__(self, excluded):
        self.excluded = excluded

    def __contains__(self, v) -> bool:
        return v not in self.excluded


def all_lexbfs_orderings(G: Graph, start: int | None = None) -> list[VertexOrdering]:
    """Every ordering LexBFS can produce under some tie-breaking (exponential).

    Labels are simulated explicitly, so this is independent of the partition
    refinement in :func:`lexbfs`.
    """
    n = G.n
    if n == 0:
        return [VertexOrdering(())]
    starts = range(n) if start is None else [start]
    out = []

    def extend(prefix, labels):
        if len(prefix) == n:
            out.append(VertexOrdering(prefix))
            return
        remaining = [v for v in range(n) if v not in placed]
        best = max(labels[v] for v in remaining)
        for v in remaining:
            if labels[v] != best:
                continue
            new = dict(labels)
            step = n - len(prefix)
            for u in G.neighbors(v):
                if u not in placed:
                    new[u] = labels[u] + (step,)
            placed.add(v)
            extend(prefix + [v], new)
            placed.discard(v)

    for s in starts:
        placed = {s}
        labels = {v: () for v in range(n)}
        for u in G.neighbors(s):
            labels[u] = (n,)
        extend([s], labels)
    return out

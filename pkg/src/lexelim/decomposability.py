"""Pattern families, neighbourhood shapes, and local decomposability.

Small patterns (at most four vertices) are identified by their sorted degree
sequence, which is a complete isomorphism invariant at that size.  The two
infinite families (all holes, long holes) get dedicated searches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InvalidParameter, InvalidVertex, TooLarge
from .graph import Graph, build_graph, components_within, empty_graph, induced_subgraph, path_graph
from .holes import chordless_cycles, find_hole, is_hole

DEFAULT_CAP = 16


def pattern_key(G: Graph, vertices: Iterable[int] | None = None) -> tuple:
    """Isomorphism key of ``G[vertices]`` (exact for up to four vertices)."""
    if vertices is None:
        return (G.n, tuple(sorted(G.degrees())))
    vs = list(vertices)
    sets = G.neighbor_sets
    members = set(vs)
    return (len(vs), tuple(sorted(len(sets[v] & members) for v in vs)))


@dataclass(frozen=True)
class PatternFamily:
    """A set of forbidden patterns: small graphs, optionally plus holes.

    ``holes`` is None, ``"all"`` (every hole) or ``"long"`` (holes of length at
    least five).  Equality ignores ``name``.
    """

    keys: frozenset = frozenset()
    holes: str | None = None
    name: str = field(default="", compare=False)

    @classmethod
    def of(cls, *graphs: Graph, name: str = "") -> "PatternFamily":
        keys = set()
        for H in graphs:
            if H.n > 4:
                raise InvalidParameter("explicit patterns are limited to four vertices")
            keys.add(pattern_key(H))
        return cls(frozenset(keys), None, name or "custom")

    def __or__(self, other: "PatternFamily") -> "PatternFamily":
        holes = self.holes or other.holes
        if self.holes == "all" or other.holes == "all":
            holes = "all"
        fam = PatternFamily(self.keys | other.keys, holes)
        named = _NAMED.get(fam)
        if named is not None:
            return named
        names = [x for x in (self.name, other.name) if x]
        return PatternFamily(fam.keys, holes, "|".join(names))

    def __str__(self) -> str:
        return self.name

    @property
    def is_empty(self) -> bool:
        return not self.keys and self.holes is None

    @property
    def max_pattern_order(self) -> int:
        return max((k[0] for k in self.keys), default=0)

    def realized_by(self, G: Graph, W) -> bool:
        """True when ``G[W]`` is a member (``W`` in cyclic order for holes)."""
        W = tuple(W)
        if pattern_key(G, W) in self.keys:
            return True
        if self.holes and is_hole(G, W):
            return self.holes == "all" or len(W) >= 5
        return False


S2 = PatternFamily.of(empty_graph(2), name="S2")
S3 = PatternFamily.of(empty_graph(3), name="S3")
P3 = PatternFamily.of(path_graph(3), name="P3")
P3BAR = PatternFamily.of(build_graph(3, [(0, 1)]), name="P3bar")
S3_P3 = PatternFamily(S3.keys | P3.keys, None, "S3,P3")
S3_P3BAR = PatternFamily(S3.keys | P3BAR.keys, None, "S3,P3bar")
P3_P3BAR = PatternFamily(P3.keys | P3BAR.keys, None, "P3,P3bar")
S3_P3_P3BAR = PatternFamily(S3.keys | P3.keys | P3BAR.keys, None, "S3,P3,P3bar")
HOLES = PatternFamily(frozenset(), "all", "Holes")
LONG_HOLES = PatternFamily(frozenset(), "long", "LongHoles")
EMPTY = PatternFamily(frozenset(), None, "empty")

NAMED_FAMILIES = (S2, S3, P3, P3BAR, S3_P3, S3_P3BAR, P3_P3BAR, S3_P3_P3BAR, HOLES, LONG_HOLES)
_NAMED = {f: f for f in (*NAMED_FAMILIES, EMPTY)}


class Shape(str, Enum):
    """Structural descriptions of a neighbourhood, one per small named family."""

    NO_STABLE_3 = "no stable set of size 3"
    UNION_OF_CLIQUES = "disjoint union of cliques"
    COMPLETE_MULTIPARTITE = "complete multipartite"
    TWO_CLIQUES = "disjoint union of at most two cliques"
    MULTIPARTITE_PAIRS = "complete multipartite with parts of size at most 2"
    CLIQUE_OR_STABLE = "clique or stable set"
    CLIQUE_OR_PAIR = "clique or stable set of size 2"
    CLIQUE = "clique"


# the shape that is equivalent to being free of the family
SHAPE_OF_FAMILY = {
    S3: Shape.NO_STABLE_3,
    P3: Shape.UNION_OF_CLIQUES,
    P3BAR: Shape.COMPLETE_MULTIPARTITE,
    S3_P3: Shape.TWO_CLIQUES,
    S3_P3BAR: Shape.MULTIPARTITE_PAIRS,
    P3_P3BAR: Shape.CLIQUE_OR_STABLE,
    S3_P3_P3BAR: Shape.CLIQUE_OR_PAIR,
    S2: Shape.CLIQUE,
}


def _blocks(vs, linked) -> list[list[int]]:
    # components of the relation ``linked`` restricted to vs
    seen = set()
    out = []
    for s in vs:
        if s in seen:
            continue
        seen.add(s)
        block = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in vs:
                if w not in seen and linked(u, w):
                    seen.add(w)
                    block.append(w)
                    stack.append(w)
        out.append(block)
    return out


def structure_of(G: Graph, vertices: Iterable[int]) -> frozenset[Shape]:
    """Every shape description satisfied by ``G[vertices]``."""
    vs = sorted(set(vertices))
    d = len(vs)
    sets = G.neighbor_sets
    members = set(vs)
    deg = {v: len(sets[v] & members) for v in vs}
    m = sum(deg.values()) // 2
    full = d * (d - 1) // 2
    out = set()
    clique = m == full
    if clique:
        out.add(Shape.CLIQUE)
    if clique or m == 0:
        out.add(Shape.CLIQUE_OR_STABLE)
    if clique or (d == 2 and m == 0):
        out.add(Shape.CLIQUE_OR_PAIR)
    # alpha <= 2: the non-neighbours of every vertex form a clique
    if all(all(b in sets[a] for a, b in combinations(sorted(members - sets[v] - {v}), 2)) for v in vs):
        out.add(Shape.NO_STABLE_3)
    comps = _blocks(vs, lambda u, w: w in sets[u])
    size = {v: len(c) for c in comps for v in c}
    if all(deg[v] == size[v] - 1 for v in vs):
        out.add(Shape.UNION_OF_CLIQUES)
        if len(comps) <= 2:
            out.add(Shape.TWO_CLIQUES)
    parts = _blocks(vs, lambda u, w: w not in sets[u])
    psize = {v: len(c) for c in parts for v in c}
    if all(d - 1 - deg[v] == psize[v] - 1 for v in vs):
        out.add(Shape.COMPLETE_MULTIPARTITE)
        if all(len(p) <= 2 for p in parts):
            out.add(Shape.MULTIPARTITE_PAIRS)
    return frozenset(out)


def neighborhood_structure(G: Graph, v: int) -> frozenset[Shape]:
    """Shapes satisfied by ``G[N(v)]``."""
    if not 0 <= v < G.n:
        raise InvalidVertex(f"vertex {v} out of range")
    return structure_of(G, G.neighbors(v))


def pattern_copies(G: Graph, fam: PatternFamily, vertices: Iterable[int] | None = None,
                   cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Induced copies of family members inside ``vertices``.

    Small patterns come first, as sorted tuples in (size, lex) order; holes
    follow in cyclic order.  Hole families need at most ``cap`` vertices.
    """
    vs = sorted(range(G.n) if vertices is None else set(vertices))
    sizes = sorted({k[0] for k in fam.keys})
    sets = G.neighbor_sets
    for r in sizes:
        wanted = {k for k in fam.keys if k[0] == r}
        for W in combinations(vs, r):
            members = set(W)
            key = (r, tuple(sorted(len(sets[v] & members) for v in W)))
            if key in wanted:
                yield W
    if fam.holes:
        if len(vs) > cap:
            raise TooLarge(f"hole enumeration limited to {cap} vertices, got {len(vs)}")
        cycles = chordless_cycles(G, 5 if fam.holes == "long" else 4, vertices=vs)
        yield from sorted(cycles, key=lambda c: (len(c), sorted(c)))


def find_pattern(G: Graph, fam: PatternFamily, vertices: Iterable[int] | None = None,
                 cap: int = DEFAULT_CAP) -> tuple[int, ...] | None:
    """First induced copy of a family member inside ``vertices``, or None.

    For all holes this uses chordal recognition and is not capped; the hole is
    returned in cyclic order.
    """
    vs = sorted(range(G.n) if vertices is None else set(vertices))
    if fam.keys:
        small = PatternFamily(fam.keys)
        hit = next(pattern_copies(G, small, vs), None)
        if hit is not None:
            return hit
    if fam.holes == "all":
        H, idmap = induced_subgraph(G, vs)
        hole = find_hole(H)
        return None if hole is None else tuple(idmap[x] for x in hole)
    if fam.holes == "long":
        return next(pattern_copies(G, PatternFamily(frozenset(), "long"), vs, cap), None)
    return None


def is_family_free(G: Graph, fam: PatternFamily, cap: int = DEFAULT_CAP) -> bool:
    """True when ``G`` contains no induced member of ``fam``.

    >>> from lexelim.graph import complete_graph
    >>> is_family_free(complete_graph(5), S2)
    True
    """
    if fam.holes == "long" and G.n > cap:
        raise TooLarge(f"long-hole search limited to {cap} vertices, got {G.n}")
    return find_pattern(G, fam, cap=cap) is None


@dataclass(frozen=True)
class DecomposabilityCounterexample:
    """A vertex ``v``, a copy ``pattern`` in ``N(v)`` and a component of ``G - N[v]``.

    ``evidence`` maps each pattern vertex that has a non-neighbour in the
    pattern to one of its neighbours inside ``component``.
    """

    vertex: int
    pattern: tuple[int, ...]
    component: tuple[int, ...]
    evidence: dict = field(default_factory=dict, compare=False)

    def verify(self, G: Graph, fam: PatternFamily) -> bool:
        v = self.vertex
        sets = G.neighbor_sets
        W = self.pattern
        if not set(W) <= sets[v] or not fam.realized_by(G, W):
            return False
        closed = sets[v] | {v}
        rest = [u for u in range(G.n) if u not in closed]
        if sorted(self.component) not in components_within(G, rest):
            return False
        comp = set(self.component)
        for y in W:
            if set(W) - sets[y] - {y}:
                z = self.evidence.get(y)
                if z not in comp or z not in sets[y]:
                    return False
        return True


def decomposability_counterexample(G: Graph, fam: PatternFamily, cap: int = DEFAULT_CAP,
                                   vertex: int | None = None) -> DecomposabilityCounterexample | None:
    """Lexicographically first ``(v, copy, component)`` breaking local decomposability.

    ``vertex`` restricts the search to that single ``v``.
    """
    if fam.holes and G.n > cap:
        raise TooLarge(f"hole-family check limited to {cap} vertices, got {G.n}")
    if vertex is not None and not 0 <= vertex < G.n:
        raise InvalidVertex(f"vertex {vertex} out of range")
    sets = G.neighbor_sets
    for v in (range(G.n) if vertex is None else (vertex,)):
        nbrs = sorted(sets[v])
        closed = sets[v] | {v}
        comps = None
        for W in pattern_copies(G, fam, nbrs, cap):
            if comps is None:
                comps = components_within(G, [u for u in range(G.n) if u not in closed])
            members = set(W)
            # vertices of the copy with a non-neighbour inside the copy
            loose = [y for y in W if members - sets[y] - {y}]
            for C in comps:
                cset = set(C)
                if all(sets[y] & cset for y in loose):
                    evidence = {y: min(sets[y] & cset) for y in loose}
                    return DecomposabilityCounterexample(v, tuple(W), tuple(C), evidence)
    return None


def is_locally_decomposable(G: Graph, fam: PatternFamily, cap: int = DEFAULT_CAP) -> bool:
    """Definition-level check: every copy in every ``N(v)`` is separated from every
    component of ``G - N[v]`` by one of its non-universal vertices."""
    return decomposability_counterexample(G, fam, cap) is None

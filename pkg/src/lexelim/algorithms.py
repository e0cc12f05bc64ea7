"""Clique, colouring and enumeration algorithms driven by LexBFS orderings.

Ties between equal-weight cliques go to the lexicographically smallest sorted
vertex tuple among the candidates an algorithm produces.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import compress

from . import _kernels
from .decomposability import HOLES, P3, P3_P3BAR, P3BAR, S3_P3, S3_P3_P3BAR, find_pattern
from .elimination import EliminationCertificate, elimination_violation, perfect_elimination_ordering
from .errors import (
    InvalidParameter, NeighborhoodNotChordal, NotCliqueOrStable, NotCompleteMultipartite,
    NotFound, NotInC2, NotInC7, NotTwoCliques, TooLarge,
)
from .graph import DEFAULT_MATRIX_CAP, Graph, WeightedGraph, components_within, induced_subgraph
from .holes import find_hole
from .lexbfs import as_ordering, lexbfs

BRUTE_FORCE_CAP = 20


@dataclass(frozen=True)
class CliqueResult:
    clique: tuple[int, ...]
    weight: int


@dataclass(frozen=True)
class Coloring:
    """Colours ``1..count`` indexed by vertex."""

    color: tuple[int, ...]
    count: int

    def is_proper(self, G: Graph) -> bool:
        return all(self.color[u] != self.color[v] for u, v in G.edges())


def _best(current: CliqueResult | None, clique, weight: int) -> CliqueResult:
    clique = tuple(sorted(clique))
    if current is None or weight > current.weight or (weight == current.weight and clique < current.clique):
        return CliqueResult(clique, weight)
    return current


def _weights_array(WG: WeightedGraph) -> array:
    return array("q", WG.weights)


def _matrix(G: Graph, cap: int):
    if G.n <= cap:
        return G.adjacency_matrix(cap), (G.n + 7) >> 3
    return None, 0


# --- oracles ----------------------------------------------------------------


def max_clique_bruteforce(WG: WeightedGraph, cap: int = BRUTE_FORCE_CAP) -> CliqueResult:
    """Exact maximum-weight clique by branch and bound over cliques in lex order.

    >>> from lexelim.graph import complete_graph
    >>> max_clique_bruteforce(WeightedGraph(complete_graph(3), (1, 2, 3))).weight
    6
    """
    G = WG.graph
    if G.n > cap:
        raise TooLarge(f"brute-force clique search limited to {cap} vertices, got {G.n}")
    if G.n == 0:
        return CliqueResult((), 0)
    w = WG.weights
    masks = G.masks
    best_w = -1
    best: tuple[int, ...] = ()

    def grow(clique, weight, cand):
        # cliques are visited in lexicographic order, so a tie never replaces the incumbent
        nonlocal best_w, best
        if weight > best_w:
            best_w, best = weight, tuple(clique)
        rest = cand
        bound = weight
        while rest:
            low = rest & -rest
            bound += w[low.bit_length() - 1]
            rest ^= low
        if bound <= best_w:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            clique.append(v)
            grow(clique, weight + w[v], cand & masks[v])
            clique.pop()

    grow([], 0, (1 << G.n) - 1)
    return CliqueResult(best, best_w)


def maximal_cliques_bruteforce(G: Graph, cap: int = BRUTE_FORCE_CAP) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch without pivoting), sorted."""
    if G.n > cap:
        raise TooLarge(f"brute-force enumeration limited to {cap} vertices, got {G.n}")
    masks = G.masks
    out = []

    def expand(R, P, X):
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        while P:
            low = P & -P
            v = low.bit_length() - 1
            expand(R + [v], P & masks[v], X & masks[v])
            P ^= low
            X |= low

    if G.n:
        expand([], (1 << G.n) - 1, 0)
    return sorted(out)


# --- clique algorithms --------------------------------------------------------


def _prefix_best(G: Graph, o, weights) -> CliqueResult:
    # best "vertex plus earlier neighbours" along a perfect elimination ordering
    indptr, indices = G.csr
    totals = _kernels.prefix_clique_weights(indptr, indices, o.order, array("q", weights))
    top = max(totals)
    best = None
    for i, t in enumerate(totals):
        if t == top:
            v = o[i]
            best = _best(best, [v, *o.earlier_neighbors(G, v)], t)
    return best


def _chordal_clique(G: Graph, weights) -> CliqueResult | tuple[int, ...]:
    """Maximum-weight clique of ``G`` if chordal, else a hole of ``G``."""
    if G.n == 0:
        return CliqueResult((), 0)
    res = perfect_elimination_ordering(G)
    if isinstance(res, EliminationCertificate):
        return find_hole(G)
    return _prefix_best(G, res, weights)


def max_clique_chordal(WG: WeightedGraph) -> CliqueResult | EliminationCertificate:
    """Maximum-weight clique of a chordal graph in linear time, or the PEO certificate.

    >>> from lexelim.graph import path_graph
    >>> max_clique_chordal(WeightedGraph(path_graph(3), (5, 1, 5))).weight
    6
    """
    G = WG.graph
    if G.n == 0:
        return CliqueResult((), 0)
    res = perfect_elimination_ordering(G)
    if isinstance(res, EliminationCertificate):
        return res
    return _prefix_best(G, res, WG.weights)


def max_clique_ehf(WG: WeightedGraph) -> CliqueResult | EliminationCertificate:
    """Maximum-weight clique, or a hole inside some earlier neighbourhood.

    Each vertex together with a best clique of its (chordal) earlier
    neighbourhood is a candidate.  If an earlier neighbourhood has a hole the
    ordering is not a hole-elimination ordering, which rules out 4-hole-free
    odd-signable inputs; that hole is returned as the certificate.
    """
    G = WG.graph
    w = WG.weights
    o = lexbfs(G, 0)
    best = CliqueResult((), 0) if G.n == 0 else None
    for i, v in enumerate(o.order):
        H, idmap = induced_subgraph(G, o.earlier_neighbors(G, v))
        res = _chordal_clique(H, [w[u] for u in idmap])
        if not isinstance(res, CliqueResult):
            return EliminationCertificate(i + 1, v, tuple(idmap[x] for x in res), HOLES)
        best = _best(best, [v, *(idmap[x] for x in res.clique)], w[v] + res.weight)
    return best


def max_clique_c2(WG: WeightedGraph) -> CliqueResult:
    """Best of ``v`` plus a maximum clique of ``N(v)``, each neighbourhood solved as chordal.

    Raises NeighborhoodNotChordal with the hole when some ``N(v)`` has one.
    """
    G = WG.graph
    w = WG.weights
    best = CliqueResult((), 0) if G.n == 0 else None
    for v in range(G.n):
        H, idmap = induced_subgraph(G, G.neighbors(v))
        res = _chordal_clique(H, [w[u] for u in idmap])
        if not isinstance(res, CliqueResult):
            hole = tuple(idmap[x] for x in res)
            raise NeighborhoodNotChordal(f"neighbourhood of {v} contains the hole {hole}", v, hole)
        best = _best(best, [v, *(idmap[x] for x in res.clique)], w[v] + res.weight)
    return best


def _anti_components(sets, U: list[int]) -> list[list[int]]:
    # components of the complement of G[U]: unvisited vertices adjacent to the
    # current one stay behind, the rest join its part
    unvisited = list(U)
    parts = []
    while unvisited:
        seed = unvisited.pop(0)
        part = [seed]
        queue = deque([seed])
        while queue:
            u = queue.popleft()
            nu = sets[u]
            keep = []
            for x in unvisited:
                if x in nu:
                    keep.append(x)
                else:
                    part.append(x)
                    queue.append(x)
            unvisited = keep
        parts.append(part)
    return parts


def max_clique_c3(WG: WeightedGraph, verify: bool = False) -> CliqueResult | EliminationCertificate:
    """Maximum-weight clique when every earlier neighbourhood is complete multipartite.

    The heaviest vertex of each part plus ``v_i`` is the best clique at
    position ``i``.  Inputs outside the class may raise NotCompleteMultipartite;
    ``verify`` checks the whole ordering first and returns its certificate.
    """
    G = WG.graph
    w = WG.weights
    sets = G.neighbor_sets
    o = lexbfs(G, 0)
    if verify:
        cert = elimination_violation(G, o, P3BAR)
        if cert is not None:
            return cert
    best = CliqueResult((), 0) if G.n == 0 else None
    for i, v in enumerate(o.order):
        U = o.earlier_neighbors(G, v)
        parts = _anti_components(sets, U)
        d = len(U)
        members = set(U)
        edges = sum(len(sets[u] & members) for u in U) // 2
        if 2 * edges != d * d - sum(len(p) ** 2 for p in parts):
            W = find_pattern(G, P3BAR, U) or ()
            raise NotCompleteMultipartite(
                f"earlier neighbourhood of {v} is not complete multipartite", v, W, i + 1)
        pick = [min(p, key=lambda u: (-w[u], u)) for p in parts]
        best = _best(best, [v, *pick], w[v] + sum(w[u] for u in pick))
    return best


def _two_clique_labels(G: Graph, U: list[int]):
    # X/Y labelling pass; returns (X, Y, None) or (None, None, (x, y, u)) on a stable triple
    sets = G.neighbor_sets
    x = y = -1
    X, Y = [], []
    for u in U:
        if x < 0:
            x = u
            X.append(u)
        elif u in sets[x]:
            X.append(u)
        elif y < 0:
            y = u
            Y.append(u)
        elif u in sets[y]:
            Y.append(u)
        else:
            return None, None, (x, y, u)
    return X, Y, None


def max_clique_c4(WG: WeightedGraph, verify: bool = False,
                  matrix_cap: int = DEFAULT_MATRIX_CAP) -> CliqueResult | EliminationCertificate:
    """Maximum-weight clique when every earlier neighbourhood is at most two cliques.

    One labelling pass per position: the first earlier neighbour ``x`` gets
    X, the first one not adjacent to ``x`` becomes ``y``; later ones join the
    label of whichever of ``x``, ``y`` they see.  Raises NotTwoCliques when a
    vertex sees neither.  Adjacency comes from a bit matrix for up to
    ``matrix_cap`` vertices, binary search otherwise.
    """
    G = WG.graph
    w = WG.weights
    if G.n == 0:
        return CliqueResult((), 0)
    o = lexbfs(G, 0)
    if verify:
        cert = elimination_violation(G, o, S3_P3)
        if cert is not None:
            return cert
    indptr, indices = G.csr
    matrix, row_bytes = _matrix(G, matrix_cap)
    wx, wy, bad = _kernels.c4_scan(indptr, indices, o.order, _weights_array(WG), matrix, row_bytes)
    if bad >= 0:
        v = o[bad]
        _, _, triple = _two_clique_labels(G, o.earlier_neighbors(G, v))
        raise NotTwoCliques(f"earlier neighbourhood of {v} has the stable set {triple}", v, triple, bad + 1)
    top = max(max(wx), max(wy))
    best = None
    hits = set(compress(range(G.n), map(top.__eq__, wx))) | set(compress(range(G.n), map(top.__eq__, wy)))
    for i in sorted(hits):
        v = o[i]
        X, Y, _ = _two_clique_labels(G, o.earlier_neighbors(G, v))
        if wx[i] == top:
            best = _best(best, [v, *X], top)
        if wy[i] == top:
            best = _best(best, [v, *Y], top)
    return best


def max_clique_c6(WG: WeightedGraph, verify: bool = False,
                  matrix_cap: int = DEFAULT_MATRIX_CAP) -> CliqueResult | EliminationCertificate:
    """Maximum-weight clique when every earlier neighbourhood is a clique or stable.

    Raises NotCliqueOrStable when the first earlier neighbour is adjacent to
    some and not to other earlier neighbours.
    """
    G = WG.graph
    w = WG.weights
    if G.n == 0:
        return CliqueResult((), 0)
    o = lexbfs(G, 0)
    if verify:
        cert = elimination_violation(G, o, P3_P3BAR)
        if cert is not None:
            return cert
    indptr, indices = G.csr
    matrix, row_bytes = _matrix(G, matrix_cap)
    totals, bad = _kernels.c6_scan(indptr, indices, o.order, _weights_array(WG), matrix, row_bytes)
    if bad >= 0:
        v = o[bad]
        U = o.earlier_neighbors(G, v)
        W = find_pattern(G, P3_P3BAR, U) or ()
        raise NotCliqueOrStable(f"earlier neighbourhood of {v} is neither a clique nor stable", v, W, bad + 1)
    top = max(totals)
    sets = G.neighbor_sets
    best = None
    for i in compress(range(G.n), map(top.__eq__, totals)):
        v = o[i]
        U = o.earlier_neighbors(G, v)
        if len(U) >= 2 and U[1] not in sets[U[0]]:
            U = [min(U, key=lambda u: (-w[u], u))]
        best = _best(best, [v, *U], top)
    return best


# --- colouring ----------------------------------------------------------------


def greedy_color(G: Graph, o) -> Coloring:
    """Each vertex in turn takes the smallest colour unused by its coloured neighbours."""
    o = as_ordering(G, o)
    indptr, indices = G.csr
    color = tuple(_kernels.greedy_colors(indptr, indices, o.order))
    return Coloring(color, max(color, default=0))


def color_chordal(G: Graph) -> Coloring | EliminationCertificate:
    """Optimal colouring of a chordal graph: greedy along its LexBFS ordering.

    Earlier neighbourhoods are cliques, so no vertex needs more than
    ``omega`` colours.
    """
    res = perfect_elimination_ordering(G)
    if isinstance(res, EliminationCertificate):
        return res
    return greedy_color(G, res)


def _two_coloring(G: Graph) -> Coloring | None:
    color = [0] * G.n
    for s in range(G.n):
        if color[s]:
            continue
        color[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for x in G.neighbors(u):
                if not color[x]:
                    color[x] = 3 - color[u]
                    queue.append(x)
                elif color[x] == color[u]:
                    return None
    return Coloring(tuple(color), max(color, default=0))


def color_universally_signable(G: Graph) -> Coloring:
    """At most ``max(3, omega)`` colours for graphs without Truemper configurations.

    Bipartite graphs get a BFS 2-colouring.  Otherwise every earlier
    neighbourhood along LexBFS must be a clique or a nonadjacent pair
    (NotInC7 if not), and greedy colouring along that ordering is used.
    """
    two = _two_coloring(G)
    if two is not None:
        return two
    o = lexbfs(G, 0)
    sets = G.neighbor_sets
    for i, v in enumerate(o.order):
        U = o.earlier_neighbors(G, v)
        if len(U) <= 2:
            continue
        if any(U[b] not in sets[U[a]] for a in range(len(U)) for b in range(a + 1, len(U))):
            W = find_pattern(G, S3_P3_P3BAR, U) or ()
            raise NotInC7(f"earlier neighbourhood of {v} is neither a clique nor a nonadjacent pair",
                          v, W, i + 1)
    return greedy_color(G, o)


# --- special vertices and maximal cliques ---------------------------------------


class VertexKind(str, Enum):
    SIMPLICIAL = "Simplicial"
    DEGREE2 = "Degree2"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SpecialVertex:
    vertex: int
    kind: VertexKind


def find_simplicial_or_degree2(G: Graph) -> SpecialVertex:
    """The last LexBFS vertex, tagged Simplicial or Degree2.

    Raises NotFound with its neighbourhood when it is neither (the input then
    contains a Truemper configuration).
    """
    if G.n == 0:
        raise InvalidParameter("graph must be nonempty")
    z = lexbfs(G, 0).last
    N = G.neighbors(z)
    sets = G.neighbor_sets
    if all(N[b] in sets[N[a]] for a in range(len(N)) for b in range(a + 1, len(N))):
        return SpecialVertex(z, VertexKind.SIMPLICIAL)
    if len(N) == 2:
        return SpecialVertex(z, VertexKind.DEGREE2)
    raise NotFound(f"neighbourhood of the last vertex {z} is neither a clique nor of size 2", z, N)


def enumerate_maximal_cliques_3wf(G: Graph) -> list[tuple[int, ...]]:
    """Maximal cliques of a 3-wheel-free graph (at most ``m`` of them), sorted.

    Every earlier neighbourhood along LexBFS is a disjoint union of cliques;
    each clique plus ``v_i`` is a candidate, kept when no vertex extends it.
    Raises NotInC2 when some earlier neighbourhood has an induced P3.
    """
    o = lexbfs(G, 0)
    sets = G.neighbor_sets
    found = set()
    for i, v in enumerate(o.order):
        U = o.earlier_neighbors(G, v)
        comps = components_within(G, U) if U else [[]]
        for comp in comps:
            if any(comp[b] not in sets[comp[a]] for a in range(len(comp)) for b in range(a + 1, len(comp))):
                W = find_pattern(G, P3, U) or ()
                raise NotInC2(f"earlier neighbourhood of {v} is not a disjoint union of cliques", v, W, i + 1)
            K = [v, *comp]
            common = set(sets[v])
            for u in comp:
                common &= sets[u]
            if not common:
                found.add(tuple(sorted(K)))
    return sorted(found)

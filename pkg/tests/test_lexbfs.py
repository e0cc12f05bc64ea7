import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import graphs
from lexelim.errors import InvalidOrdering, InvalidVertex, NotLexBFS
from lexelim.graph import (
    build_graph, complete_graph, components_within, cycle_graph, empty_graph, is_connected, path_graph,
)
from lexelim.lexbfs import (
    VertexOrdering, all_lexbfs_orderings, connecting_path, is_lexbfs_ordering,
    last_vertex_moplex_witness, lexbfs, lexbfs_violation,
)


def smallest_id_lexbfs(G, start):
    """Label simulation with explicit label tuples and smallest-id tie-break."""
    n = G.n
    labels = {v: () for v in range(n)}
    order = []
    placed = set()
    nxt = start
    for step in range(n, 0, -1):
        if nxt is None:
            rest = [v for v in range(n) if v not in placed]
            best = max(labels[v] for v in rest)
            nxt = min(v for v in rest if labels[v] == best)
        order.append(nxt)
        placed.add(nxt)
        for u in G.neighbors(nxt):
            if u not in placed:
                labels[u] = labels[u] + (step,)
        nxt = None
    return order


def test_examples():
    assert lexbfs(complete_graph(3), 0) == (0, 1, 2)
    assert lexbfs(path_graph(4), 0) == (0, 1, 2, 3)
    assert lexbfs(cycle_graph(4), 0) == (0, 1, 3, 2)
    assert lexbfs(empty_graph(0)) == ()
    with pytest.raises(InvalidVertex):
        lexbfs(path_graph(3), 3)


def test_disconnected_restart_takes_smallest_unvisited():
    G = build_graph(5, [(3, 4), (1, 2)])
    assert lexbfs(G, 3) == (3, 4, 0, 1, 2)


def test_p3_valid_orderings():
    # a-b-c as 0-1-2
    P3 = path_graph(3)
    want = {(0, 1, 2), (1, 0, 2), (1, 2, 0), (2, 1, 0)}
    assert {tuple(o) for o in all_lexbfs_orderings(P3)} == want
    accepted = {p for p in itertools.permutations(range(3)) if is_lexbfs_ordering(P3, p)}
    assert accepted == want
    assert not is_lexbfs_ordering(P3, (0, 2, 1))
    assert lexbfs_violation(P3, (0, 2, 1)) == (0, 2, 1)


def test_known_orderings():
    assert is_lexbfs_ordering(cycle_graph(4), (0, 1, 3, 2))
    K = complete_graph(5)
    assert all(is_lexbfs_ordering(K, p) for p in itertools.permutations(range(5)))


def test_ordering_validation():
    with pytest.raises(InvalidOrdering):
        VertexOrdering([0, 0, 1])
    with pytest.raises(InvalidOrdering):
        is_lexbfs_ordering(path_graph(3), [0, 1])
    o = VertexOrdering([2, 0, 1])
    assert tuple(o.pos) == (1, 2, 0) and o.last == 1 and o.precedes(2, 1)
    assert o == (2, 0, 1) and o == [2, 0, 1] and hash(o) == hash((2, 0, 1))
    for bad in ([0, 3, 1], [-1, 0, 1], [0.5, 1], ["a"]):
        with pytest.raises(InvalidOrdering):
            VertexOrdering(bad)
    assert len(VertexOrdering([])) == 0


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_lexbfs_matches_label_simulation(G):
    for s in range(G.n):
        o = lexbfs(G, s)
        assert list(o) == smallest_id_lexbfs(G, s)
        assert is_lexbfs_ordering(G, o)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_four_point_check_is_exact(G):
    # the characterisation accepts exactly the orderings some tie-break produces
    produced = {tuple(o) for o in all_lexbfs_orderings(G)}
    accepted = {p for p in itertools.permutations(range(G.n)) if is_lexbfs_ordering(G, p)}
    assert produced == accepted


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_prefix_closure(G):
    o = lexbfs(G, G.n - 1)
    for i in range(1, G.n + 1):
        prefix = o.order[:i]
        local = {v: k for k, v in enumerate(sorted(prefix))}
        H = build_graph(i, [(local[u], local[v]) for u, v in G.edges() if u in local and v in local])
        assert is_lexbfs_ordering(H, [local[v] for v in prefix])


def test_moplex_examples():
    assert last_vertex_moplex_witness(complete_graph(4), (0, 1, 2, 3)).complete
    w = last_vertex_moplex_witness(path_graph(3), (0, 1, 2))
    assert w.component == {0} and w.evidence == {1: 0}
    w = last_vertex_moplex_witness(cycle_graph(4), (0, 1, 3, 2))
    assert w.z == 2 and w.component == {0} and w.evidence == {1: 0, 3: 0}
    assert w.verify(cycle_graph(4))
    with pytest.raises(NotLexBFS):
        last_vertex_moplex_witness(path_graph(3), (0, 2, 1))
    with pytest.raises(ValueError):
        last_vertex_moplex_witness(empty_graph(2), (0, 1))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_moplex_for_every_produced_ordering(G):
    if not is_connected(G):
        return
    orders = all_lexbfs_orderings(G)
    rng = random.Random(G.m)
    for o in rng.sample(orders, min(len(orders), 20)):
        w = last_vertex_moplex_witness(G, o)
        assert w.verify(G)


def test_moplex_evidence_checked_independently():
    G = cycle_graph(6)
    o = lexbfs(G, 0)
    w = last_vertex_moplex_witness(G, o)
    z = o.last
    closed = set(G.neighbors(z)) | {z}
    assert sorted(w.component) in components_within(G, [v for v in range(6) if v not in closed])
    for x, y in w.evidence.items():
        assert y in w.component and y in G.neighbors(x)


def test_connecting_path_examples():
    assert connecting_path(path_graph(4), (0, 1, 2, 3), 2, 1, 0) == [1, 0]
    assert connecting_path(cycle_graph(4), (0, 1, 3, 2), 3, 1, 0) == [1, 0]
    C5 = cycle_graph(5)
    o = lexbfs(C5, 0)
    z = o.last
    closed = set(C5.neighbors(z)) | {z}
    for c, b, a in itertools.combinations(o.order, 3):
        if a in C5.neighbors(c):
            path = connecting_path(C5, o, a, b, c)
            assert path[0] == b and path[-1] == c
            assert not set(path[1:-1]) & closed


def _valid_triples(G, o):
    sets = G.neighbor_sets
    for i, j, k in itertools.combinations(range(G.n), 3):
        c, b, a = o[i], o[j], o[k]
        if a in sets[c]:
            yield a, b, c


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=3, max_n=12))
def test_connecting_path_property(G):
    rng = random.Random(G.n * 1000 + G.m)
    o = lexbfs(G, rng.randrange(G.n))
    z = o.last
    closed = set(G.neighbors(z)) | {z}
    sets = G.neighbor_sets
    for a, b, c in _valid_triples(G, o):
        path = connecting_path(G, o, a, b, c)
        assert path[0] == b and path[-1] == c
        assert all(path[t + 1] in sets[path[t]] for t in range(len(path) - 1))
        assert not set(path[1:-1]) & closed


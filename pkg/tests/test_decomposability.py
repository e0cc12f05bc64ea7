import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from lexelim.configurations import ClassId, in_class
from lexelim.decomposability import (
    HOLES, LONG_HOLES, NAMED_FAMILIES, P3, P3_P3BAR, P3BAR, S2, S3, S3_P3, S3_P3_P3BAR, S3_P3BAR,
    SHAPE_OF_FAMILY, PatternFamily, Shape, decomposability_counterexample, find_pattern,
    is_family_free, is_locally_decomposable, neighborhood_structure, pattern_copies, structure_of,
)
from lexelim.errors import InvalidParameter, InvalidVertex, TooLarge
from lexelim.generators import gen_random
from lexelim.graph import (
    build_graph, complete_graph, cycle_graph, empty_graph, path_graph, remove_vertices,
)
from oracles import atlas, to_nx

SMALL = (S2, S3, P3, P3BAR, S3_P3, S3_P3BAR, P3_P3BAR, S3_P3_P3BAR)


def wheel(rim, nbrs):
    return build_graph(rim + 1, [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in nbrs])


def nx_copies(G, fam, vertices):
    """Induced copies by isomorphism with the family's pattern graphs."""
    patterns = {
        "S2": [nx.empty_graph(2)], "S3": [nx.empty_graph(3)], "P3": [nx.path_graph(3)],
        "P3bar": [_p3bar()],
    }
    members = []
    for name in fam.name.split(","):
        members += patterns[name]
    out = []
    for k in sorted({H.number_of_nodes() for H in members}):
        for W in itertools.combinations(sorted(vertices), k):
            sub = to_nx(G, W)
            if any(nx.is_isomorphic(sub, H) for H in members if H.number_of_nodes() == k):
                out.append(W)
    return out


def _p3bar():
    H = nx.empty_graph(3)
    H.add_edge(0, 1)
    return H


def brute_counterexample(G, fam):
    """Direct reading of the definition, minimal in (v, copy, component)."""
    Gx = to_nx(G)
    for v in range(G.n):
        nbrs = set(Gx[v])
        rest = Gx.subgraph(set(Gx) - nbrs - {v})
        comps = sorted(sorted(c) for c in nx.connected_components(rest))
        for W in nx_copies(G, fam, nbrs):
            for C in comps:
                ok = any(
                    any(u not in Gx[y] for u in W if u != y) and not any(c in Gx[y] for c in C)
                    for y in W
                )
                if not ok:
                    return v, tuple(W), tuple(C)
    return None


def test_family_basics():
    assert S3 | P3 == S3_P3 and (S3 | P3).name == "S3,P3"
    assert P3 | P3BAR | S3 == S3_P3_P3BAR
    assert HOLES | LONG_HOLES == HOLES
    with pytest.raises(InvalidParameter):
        PatternFamily.of(path_graph(5))
    claw = PatternFamily.of(build_graph(4, [(0, 1), (0, 2), (0, 3)]), name="claw")
    star = build_graph(5, [(0, i) for i in range(1, 5)])
    assert len(list(pattern_copies(star, claw))) == 4


def test_is_family_free_examples():
    assert is_family_free(complete_graph(5), S2)
    assert not is_family_free(path_graph(3), P3)
    assert find_pattern(path_graph(3), P3) == (0, 1, 2)
    assert not is_family_free(cycle_graph(4), HOLES)
    assert sorted(find_pattern(cycle_graph(4), HOLES)) == [0, 1, 2, 3]
    assert is_family_free(cycle_graph(4), LONG_HOLES)
    assert not is_family_free(cycle_graph(5), LONG_HOLES)
    with pytest.raises(TooLarge):
        is_family_free(empty_graph(17), LONG_HOLES)
    assert is_family_free(empty_graph(17), HOLES)


def test_neighborhood_structure_examples():
    assert neighborhood_structure(complete_graph(4), 0) == frozenset(Shape)
    # v = 6 sees two disjoint triangles
    two_triangles = build_graph(7, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)] + [(i, 6) for i in range(6)])
    s = neighborhood_structure(two_triangles, 6)
    assert Shape.UNION_OF_CLIQUES in s and Shape.TWO_CLIQUES in s and Shape.CLIQUE not in s
    s = neighborhood_structure(wheel(4, range(4)), 4)
    assert Shape.COMPLETE_MULTIPARTITE in s and Shape.UNION_OF_CLIQUES not in s
    with pytest.raises(InvalidVertex):
        neighborhood_structure(complete_graph(3), 3)


def test_shapes_match_family_freeness_on_atlas():
    # up to isomorphism this covers every graph on at most 7 vertices
    for G in atlas(0, 7):
        shapes = structure_of(G, range(G.n))
        for fam, shape in SHAPE_OF_FAMILY.items():
            assert (shape in shapes) == is_family_free(G, fam), (list(G.edges()), fam.name)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_pattern_copies_match_isomorphism(G):
    vs = range(G.n)
    for fam in SMALL:
        assert list(pattern_copies(G, fam, vs)) == nx_copies(G, fam, vs)


def test_decomposability_examples():
    for n in range(1, 7):
        for fam in NAMED_FAMILIES:
            assert is_locally_decomposable(complete_graph(n), fam)
    cx = decomposability_counterexample(cycle_graph(4), S2)
    assert (cx.vertex, cx.pattern, cx.component) == (0, (1, 3), (2,))
    assert cx.verify(cycle_graph(4), S2)
    W = wheel(6, (0, 2, 4))
    # every component of G - N[centre] misses one of the three rim neighbours
    assert decomposability_counterexample(W, S3, vertex=6) is None
    first = decomposability_counterexample(W, S3)
    assert (first.vertex, first.pattern, first.component) == (0, (1, 5, 6), (2, 3, 4))
    assert first.verify(W, S3)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_counterexample_is_lexicographically_first(G):
    for fam in SMALL:
        cx = decomposability_counterexample(G, fam)
        want = brute_counterexample(G, fam)
        assert (None if cx is None else (cx.vertex, cx.pattern, cx.component)) == want
        if cx is not None:
            assert cx.verify(G, fam)


def test_lemma_equivalences_on_atlas():
    # chordal <=> {S2}; (1-wheel, theta, pyramid)-free <=> {S3};
    # 3-wheel-free <=> {P3}; (2-wheel, prism, pyramid)-free <=> {P3bar}
    pairs = ((S2, ClassId.C8), (S3, ClassId.C1), (P3, ClassId.C2), (P3BAR, ClassId.C3))
    for G in atlas(0, 7):
        for fam, cls in pairs:
            assert is_locally_decomposable(G, fam) == in_class(G, cls), (list(G.edges()), fam.name)


def test_union_of_families_on_atlas():
    base = (S3, P3, P3BAR)
    for G in atlas(0, 7):
        single = {f: is_locally_decomposable(G, f) for f in base}
        for f, g in itertools.combinations(base, 2):
            assert is_locally_decomposable(G, f | g) == (single[f] and single[g])
        assert is_locally_decomposable(G, S3_P3_P3BAR) == all(single.values())


def _random_graphs(count, n_max, seed):
    rng = random.Random(seed)
    for _ in range(count):
        yield gen_random(rng.randint(4, n_max), rng.choice(["1/4", "1/3", "1/2", "2/3"]), rng.getrandbits(32))


def test_hole_families_spot_checks():
    seen_a = seen_b = 0
    for G in _random_graphs(400, 8, 41):
        if in_class(G, ClassId.FOUR_HOLE_FREE_ODD_SIGNABLE):
            seen_a += 1
            assert is_locally_decomposable(G, HOLES)
        if in_class(G, ClassId.SQUARE_THETA_FREE_EVEN_SIGNABLE):
            seen_b += 1
            assert is_locally_decomposable(G, LONG_HOLES)
    assert seen_a > 50 and seen_b > 50


def test_hereditary_closure():
    rng = random.Random(5)
    for G in _random_graphs(150, 8, 7):
        for fam in (S3, P3, P3BAR, HOLES):
            if not is_locally_decomposable(G, fam):
                continue
            v = rng.randrange(G.n)
            H, _ = remove_vertices(G, [v])
            assert is_locally_decomposable(H, fam)

import itertools
import random

import networkx as nx
import pytest

from lexelim.configurations import ClassId, in_class
from lexelim.decomposability import (
    EMPTY, HOLES, LONG_HOLES, NAMED_FAMILIES, P3, P3BAR, S2, S3, is_family_free,
    is_locally_decomposable,
)
from lexelim.elimination import (
    EliminationCertificate, class_family, elimination_ordering, elimination_violation,
    is_elimination_ordering, perfect_elimination_ordering,
)
from lexelim.errors import InvalidOrdering
from lexelim.generators import gen_chordal, gen_random
from lexelim.graph import build_graph, complete_graph, cycle_graph, induced_subgraph, path_graph
from lexelim.lexbfs import VertexOrdering, all_lexbfs_orderings, lexbfs
from oracles import atlas, to_nx

CLASSES = [ClassId(f"C{i}") for i in range(1, 9)]
SMALL_FAMILIES = tuple(f for f in NAMED_FAMILIES if f not in (HOLES, LONG_HOLES))
K23 = build_graph(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])


def test_examples():
    assert is_elimination_ordering(cycle_graph(4), (0, 1, 2, 3), EMPTY)
    cert = elimination_violation(cycle_graph(4), (0, 1, 3, 2), S2)
    assert (cert.position, cert.vertex, cert.witness) == (4, 2, (1, 3))
    for c in CLASSES:
        assert elimination_ordering(complete_graph(3), c) == VertexOrdering((0, 1, 2))
    assert elimination_ordering(path_graph(4), ClassId.C8) == VertexOrdering((0, 1, 2, 3))
    assert isinstance(elimination_ordering(cycle_graph(4), ClassId.C8), EliminationCertificate)
    assert isinstance(perfect_elimination_ordering(K23), EliminationCertificate)
    with pytest.raises(InvalidOrdering):
        is_elimination_ordering(cycle_graph(4), (0, 1, 2), S2)
    with pytest.raises(ValueError):
        class_family(ClassId.ODD_SIGNABLE)


def test_trees_and_generated_chordal_graphs():
    rng = random.Random(3)
    for n in range(2, 40):
        seq = [rng.randrange(n) for _ in range(n - 2)]
        T = nx.from_prufer_sequence(seq) if n > 2 else nx.path_graph(2)
        G = build_graph(n, list(T.edges()))
        assert isinstance(perfect_elimination_ordering(G), VertexOrdering)
    for seed in range(100):
        G = gen_chordal(rng.randint(1, 80), rng.choice(["1/4", "1/2", "3/4", 1]), seed)
        o = perfect_elimination_ordering(G)
        assert isinstance(o, VertexOrdering)
        assert nx.is_chordal(to_nx(G))


def test_peo_kernel_agrees_with_enumeration():
    # the S2 path uses the parent-representative kernel; compare to direct search
    rng = random.Random(11)
    for _ in range(300):
        G = gen_random(rng.randint(2, 9), "1/2", rng.getrandbits(32))
        o = list(range(G.n))
        rng.shuffle(o)
        cert = elimination_violation(G, o, S2)
        first = None
        for i, v in enumerate(o):
            earlier = [u for u in o[:i] if G.has_edge(u, v)]
            bad = [p for p in itertools.combinations(sorted(earlier), 2) if not G.has_edge(*p)]
            if bad:
                first = i + 1, v
                break
        assert (None if cert is None else (cert.position, cert.vertex)) == first
        if cert is not None:
            assert cert.verify(G, o)


def test_lexbfs_eliminates_on_decomposable_graphs():
    # every LexBFS ordering (all tie-breaks) of a locally decomposable graph
    for G in atlas(1, 6):
        orders = all_lexbfs_orderings(G)
        for fam in SMALL_FAMILIES:
            if is_locally_decomposable(G, fam):
                for o in orders:
                    assert is_elimination_ordering(G, o, fam), (list(G.edges()), fam.name, o)


def test_class_members_get_elimination_orderings():
    for G in atlas(1, 7):
        for c in CLASSES:
            if in_class(G, c):
                for s in range(G.n):
                    assert is_elimination_ordering(G, lexbfs(G, s), class_family(c))


def _has_elimination_ordering(G, fam):
    return any(is_elimination_ordering(G, o, fam) for o in itertools.permutations(range(G.n)))


def _every_subgraph_has_free_vertex(G, fam):
    for k in range(1, G.n + 1):
        for S in itertools.combinations(range(G.n), k):
            H, _ = induced_subgraph(G, S)
            if not any(is_family_free(induced_subgraph(H, H.neighbors(v))[0], fam) for v in range(H.n)):
                return False
    return True


def test_existence_equivalence():
    for G in atlas(1, 6):
        for fam in (S2, S3, P3, P3BAR):
            assert _has_elimination_ordering(G, fam) == _every_subgraph_has_free_vertex(G, fam)


def test_certificates_are_sound():
    rng = random.Random(2)
    fams = SMALL_FAMILIES + (HOLES, LONG_HOLES)
    seen = 0
    for _ in range(300):
        G = gen_random(rng.randint(3, 10), rng.choice(["1/3", "1/2", "2/3"]), rng.getrandbits(32))
        o = list(range(G.n))
        rng.shuffle(o)
        for fam in fams:
            cert = elimination_violation(G, o, fam)
            if cert is not None:
                seen += 1
                assert cert.verify(G, o)
    assert seen > 300


def test_hole_family_uses_prefix_chordality():
    rng = random.Random(9)
    for _ in range(200):
        G = gen_random(rng.randint(4, 11), "1/2", rng.getrandbits(32))
        o = lexbfs(G, 0)
        cert = elimination_violation(G, o, HOLES)
        first = None
        for i, v in enumerate(o):
            earlier = o.earlier_neighbors(G, v)
            if not nx.is_chordal(to_nx(G, earlier)):
                first = i + 1
                break
        assert (None if cert is None else cert.position) == first

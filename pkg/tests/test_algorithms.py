import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from lexelim.algorithms import (
    CliqueResult, VertexKind, color_chordal, color_universally_signable, enumerate_maximal_cliques_3wf,
    find_simplicial_or_degree2, greedy_color, max_clique_bruteforce, max_clique_c2, max_clique_c3,
    max_clique_c4, max_clique_c6, max_clique_chordal, max_clique_ehf, maximal_cliques_bruteforce,
)
from lexelim.configurations import ClassId, in_class
from lexelim.decomposability import HOLES
from lexelim.elimination import EliminationCertificate
from lexelim.errors import (
    CertificateError, InvalidParameter, NeighborhoodNotChordal, NotCliqueOrStable, NotCompleteMultipartite, NotFound, NotInC2,
    NotInC7, NotTwoCliques, TooLarge,
)
from lexelim.generators import gen_chordal, gen_random
from lexelim.graph import (
    WeightedGraph, build_graph, complete_graph, cycle_graph, empty_graph, is_clique, path_graph,
    petersen_graph,
)
from lexelim.lexbfs import lexbfs
from oracles import atlas, clique_number, max_weight_clique, maximal_cliques


def W(G, weights=None):
    return WeightedGraph(G, [1] * G.n if weights is None else list(weights))


def universal_wheel(r):
    return build_graph(r + 1, [(i, (i + 1) % r) for i in range(r)] + [(i, r) for i in range(r)])


K33 = build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
OCTAHEDRON = build_graph(6, [(a, b) for a, b in itertools.combinations(range(6), 2) if b != a + 3 or a >= 3])
TWO_TRIANGLES = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
K23 = build_graph(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
STAR = build_graph(5, [(0, i) for i in range(1, 5)])


def test_octahedron_shape():
    assert OCTAHEDRON.m == 12 and all(d == 4 for d in OCTAHEDRON.degrees())


def test_bruteforce_examples():
    assert max_clique_bruteforce(W(complete_graph(3), (1, 2, 3))).weight == 6
    assert max_clique_bruteforce(W(cycle_graph(5))).weight == 2
    assert max_clique_bruteforce(W(empty_graph(2), (7, 7))) == CliqueResult((0,), 7)
    assert max_clique_bruteforce(W(empty_graph(0))) == CliqueResult((), 0)
    with pytest.raises(TooLarge):
        max_clique_bruteforce(W(empty_graph(21)))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=11), st.randoms(use_true_random=False))
def test_bruteforce_matches_networkx(G, rnd):
    weights = [rnd.randint(0, 100) for _ in range(G.n)]
    res = max_clique_bruteforce(W(G, weights))
    assert res.weight == max_weight_clique(G, weights)
    assert is_clique(G, res.clique) and sum(weights[v] for v in res.clique) == res.weight
    assert maximal_cliques_bruteforce(G) == maximal_cliques(G)


def test_chordal_examples():
    assert max_clique_chordal(W(path_graph(3), (5, 1, 5))).weight == 6
    assert max_clique_chordal(W(complete_graph(4))).weight == 4
    assert isinstance(max_clique_chordal(W(cycle_graph(4))), EliminationCertificate)


def test_chordal_matches_oracle():
    rng = random.Random(4)
    for seed in range(200):
        G = gen_chordal(rng.randint(1, 15), rng.choice(["1/3", "1/2", "4/5"]), seed)
        weights = [rng.randint(0, 100) for _ in range(G.n)]
        res = max_clique_chordal(W(G, weights))
        assert res.weight == max_weight_clique(G, weights)
        assert is_clique(G, res.clique)
        assert max_clique_ehf(W(G, weights)).weight == res.weight


def test_ehf_examples():
    assert max_clique_ehf(W(cycle_graph(4))).weight == 2
    res = max_clique_ehf(W(universal_wheel(6)))
    if isinstance(res, EliminationCertificate):
        assert res.family == HOLES
        assert res.verify(universal_wheel(6), lexbfs(universal_wheel(6), 0))
    else:
        assert res.weight == 3


def test_ehf_is_robust():
    rng = random.Random(8)
    certs = cliques = 0
    for _ in range(400):
        G = gen_random(rng.randint(1, 10), rng.choice(["1/3", "1/2", "2/3"]), rng.getrandbits(32))
        weights = [rng.randint(0, 100) for _ in range(G.n)]
        res = max_clique_ehf(W(G, weights))
        if isinstance(res, EliminationCertificate):
            certs += 1
            assert res.verify(G, lexbfs(G, 0))
            assert not in_class(G, ClassId.FOUR_HOLE_FREE_ODD_SIGNABLE)
        else:
            cliques += 1
            assert res.weight == max_weight_clique(G, weights) and is_clique(G, res.clique)
    assert certs > 5 and cliques > 100


def test_class_algorithm_examples():
    assert max_clique_c2(W(petersen_graph())).weight == 2
    assert max_clique_c2(W(complete_graph(4))).weight == 4
    with pytest.raises(NeighborhoodNotChordal) as exc:
        max_clique_c2(W(universal_wheel(6)))
    assert exc.value.vertex == 6 and sorted(exc.value.witness) == list(range(6))
    assert max_clique_c3(W(K33)).weight == 2
    assert max_clique_c3(W(OCTAHEDRON)).weight == 3
    assert max_clique_c3(W(complete_graph(4), (1, 1, 1, 9))).weight == 12
    assert max_clique_c4(W(cycle_graph(5))).weight == 2
    assert max_clique_c4(W(TWO_TRIANGLES, [2] * 6)).weight == 6
    assert max_clique_c4(W(path_graph(4), (1, 5, 5, 1))).weight == 10
    assert max_clique_c6(W(petersen_graph())).weight == 2
    assert max_clique_c6(W(STAR)).weight == 2
    assert max_clique_c6(W(complete_graph(4))).weight == 4


def test_class_algorithm_certificates():
    # LexBFS on K_{2,3} ends at a hub whose earlier neighbours are stable
    with pytest.raises(NotTwoCliques) as exc:
        max_clique_c4(W(K23))
    assert exc.value.vertex == 1 and exc.value.witness == (2, 3, 4)
    # K_{2,3} plus one edge between the 3-side: the last hub sees a P3bar
    G = build_graph(5, list(K23.edges()) + [(2, 4)])
    for algo, err in ((max_clique_c3, NotCompleteMultipartite), (max_clique_c6, NotCliqueOrStable)):
        with pytest.raises(err) as exc:
            algo(W(G))
        assert (exc.value.vertex, exc.value.witness, exc.value.position) == (1, (2, 3, 4), 5)
    cert = max_clique_c3(W(G), verify=True)
    assert (cert.position, cert.vertex, cert.witness) == (5, 1, (2, 3, 4))
    assert cert.verify(G, lexbfs(G, 0))


def _members(c, count, n_max, seed):
    rng = random.Random(seed)
    out = [G for G in atlas(1, 6) if in_class(G, c)]
    while len(out) < count:
        G = gen_random(rng.randint(3, n_max), rng.choice(["1/4", "1/3", "1/2", "2/3", "3/4"]), rng.getrandbits(32))
        if in_class(G, c):
            out.append(G)
    return out


@pytest.mark.parametrize("c, algo", [
    (ClassId.C2, max_clique_c2), (ClassId.C3, max_clique_c3),
    (ClassId.C4, max_clique_c4), (ClassId.C6, max_clique_c6),
])
def test_class_algorithms_match_oracle(c, algo):
    rng = random.Random(str(c))
    for G in _members(c, 250, 10, 17):
        weights = [rng.randint(0, 100) for _ in range(G.n)]
        res = algo(W(G, weights))
        assert res.weight == max_weight_clique(G, weights), (list(G.edges()), weights)
        assert is_clique(G, res.clique) and sum(weights[v] for v in res.clique) == res.weight


def test_kernels_without_matrix_agree():
    rng = random.Random(6)
    for c, algo in ((ClassId.C4, max_clique_c4), (ClassId.C6, max_clique_c6)):
        for G in _members(c, 60, 10, 23):
            weights = [rng.randint(0, 100) for _ in range(G.n)]
            assert algo(W(G, weights), matrix_cap=0) == algo(W(G, weights))


def test_greedy_color_examples():
    for o in itertools.permutations(range(4)):
        assert greedy_color(complete_graph(4), o).count == 4
    for o in itertools.permutations(range(5)):
        col = greedy_color(cycle_graph(5), o)
        assert col.count <= 3 and col.is_proper(cycle_graph(5))


def test_color_universally_signable_examples():
    assert color_universally_signable(cycle_graph(6)).count == 2
    assert color_universally_signable(cycle_graph(5)).count == 3
    assert color_universally_signable(complete_graph(4)).count == 4
    with pytest.raises(NotInC7):
        color_universally_signable(universal_wheel(5))


def test_coloring_bounds():
    for G in _members(ClassId.C7, 150, 10, 31):
        col = color_universally_signable(G)
        assert col.is_proper(G) and col.count <= max(3, clique_number(G))
    for c in (ClassId.C4, ClassId.C5):
        for G in _members(c, 150, 10, 37):
            col = greedy_color(G, lexbfs(G, 0))
            assert col.is_proper(G) and col.count <= 2 * clique_number(G) - 1
    rng = random.Random(1)
    for seed in range(150):
        G = gen_chordal(rng.randint(1, 30), "1/2", seed)
        col = color_chordal(G)
        assert col.is_proper(G) and col.count == clique_number(G)
    assert isinstance(color_chordal(cycle_graph(5)), EliminationCertificate)


def test_simplicial_or_degree2():
    assert find_simplicial_or_degree2(cycle_graph(5)).kind == VertexKind.DEGREE2
    assert find_simplicial_or_degree2(complete_graph(4)).kind == VertexKind.SIMPLICIAL
    sv = find_simplicial_or_degree2(path_graph(4))
    assert sv.vertex in (0, 3) and sv.kind == VertexKind.SIMPLICIAL
    with pytest.raises(InvalidParameter):
        find_simplicial_or_degree2(empty_graph(0))
    with pytest.raises(NotFound):
        find_simplicial_or_degree2(universal_wheel(5))
    for G in _members(ClassId.C7, 150, 10, 43):
        sv = find_simplicial_or_degree2(G)
        N = G.neighbors(sv.vertex)
        if sv.kind == VertexKind.SIMPLICIAL:
            assert is_clique(G, N)
        else:
            assert len(N) == 2 and not G.has_edge(*N)


def test_maximal_cliques_3wf_examples():
    assert enumerate_maximal_cliques_3wf(path_graph(4)) == [(0, 1), (1, 2), (2, 3)]
    assert enumerate_maximal_cliques_3wf(cycle_graph(5)) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert enumerate_maximal_cliques_3wf(complete_graph(3)) == [(0, 1, 2)]
    with pytest.raises(NotInC2):
        enumerate_maximal_cliques_3wf(universal_wheel(4))


def test_maximal_cliques_3wf_match_oracle():
    for G in _members(ClassId.C2, 200, 10, 47):
        cliques = enumerate_maximal_cliques_3wf(G)
        assert cliques == maximal_cliques(G)
        # an isolated vertex is a maximal clique with no edge to charge it to
        isolated = sum(1 for d in G.degrees() if d == 0)
        assert len(cliques) <= G.m + isolated


def test_certificates_carry_positions():
    cases = [(K23, lambda G: max_clique_c4(W(G)))]
    G = universal_wheel(5)
    cases += [(G, lambda G: max_clique_c6(W(G))), (G, color_universally_signable),
              (G, enumerate_maximal_cliques_3wf)]
    for G, call in cases:
        with pytest.raises(CertificateError) as exc:
            call(G)
        o = lexbfs(G, 0)
        e = exc.value
        assert o[e.position - 1] == e.vertex
        assert set(e.witness) <= set(o.earlier_neighbors(G, e.vertex))

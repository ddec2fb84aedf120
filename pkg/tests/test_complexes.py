import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from hyperhopf import Clutter, Graph, discrete, disjoint_sum, euler_character, restrict
from hyperhopf.complexes import (
    SimplicialComplex, boundary_simplex, clique_complex, euler_char_complex, independence_complex,
    intersection_graph, is_chordal, is_eulerian_complex, is_flag, join, minimal_nonfaces, nerve,
    partition_polynomial, restrict_complex, simplex, skeleton, zeta_K_alpha,
)
from hyperhopf.euler import is_eulerian, is_odd_clutter
from hyperhopf.setfam import ValidationError, mask_of, members
from hyperhopf.symfun import chromatic_polynomial, compositions
from hyperhopf.verify import labeled_clutters

from conftest import (
    C1, C2, K3, TWIN_EULERIAN, hypergraphs, partition_functions, random_hypergraph, single_edge,
)


def brute_has_chordless_cycle(g):
    """Search every vertex subset of size >= 4 for an induced cycle."""
    for r in range(4, g.number_of_nodes() + 1):
        for sub in itertools.combinations(g.nodes, r):
            h = g.subgraph(sub)
            if all(d == 2 for _, d in h.degree()) and nx.is_connected(h):
                return True
    return False


def as_graph(g):
    return Graph.from_edges(g.number_of_nodes(), [list(e) for e in g.edges])


def is_induced_cycle(G, cycle):
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    adj = G.adjacency()
    for i, j in itertools.combinations(range(k), 2):
        adjacent = bool(adj[cycle[i]] >> cycle[j] & 1)
        if adjacent != ((j - i) % k in (1, k - 1)):
            return False
    return True


def clutters_up_to(n):
    for m in range(n + 1):
        for edges in labeled_clutters(m):
            yield Clutter(m, edges)


def complex_on(n, faces):
    return SimplicialComplex.from_facets(n, faces)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_complex_keeps_maximal_facets():
    K = complex_on(4, [[0, 1], [0, 1, 2], [3]])
    assert K.facets == (mask_of([0, 1, 2]),)
    assert K.is_face(mask_of([0, 2])) and K.is_face(mask_of([3]))
    assert not K.is_face(mask_of([2, 3]))
    assert K.to_json() == {"vertices": 4, "facets": [[0, 1, 2]]}
    with pytest.raises(ValidationError):
        complex_on(2, [[0, 2]])


def test_nerve_examples():
    assert nerve(TWIN_EULERIAN) == simplex(2)
    two = Clutter.from_edges(4, [[0, 1], [2, 3]])
    assert nerve(two) == SimplicialComplex(2)
    # vertices of the nerve follow the edge order (size, then lexicographic)
    assert [list(members(e)) for e in C1.edges][0] == [0, 8, 9]
    assert nerve(C1).n == 4


def test_intersection_graph_examples():
    path = Clutter.from_edges(4, [[0, 1], [1, 2], [2, 3]])
    G = intersection_graph(path)
    assert G.edge_lists() == [[0, 1], [1, 2]]
    assert intersection_graph(Clutter.from_edges(6, [[0, 1], [2, 3], [4, 5]])).edges == ()
    assert not is_chordal(intersection_graph(C2))[0]


@settings(max_examples=30, deadline=None)
@given(hypergraphs(max_n=6))
def test_intersection_graph_is_nerve_skeleton(H):
    assert intersection_graph(H) == skeleton(nerve(H))


# ---------------------------------------------------------------------------
# chordality and flag complexes
# ---------------------------------------------------------------------------

def test_chordal_examples():
    c4 = Graph.from_edges(4, [[0, 1], [1, 2], [2, 3], [0, 3]])
    ok, cycle = is_chordal(c4)
    assert not ok and sorted(cycle) == [0, 1, 2, 3] and is_induced_cycle(c4, cycle)
    assert is_chordal(Graph.from_edges(4, [[0, 1], [1, 2], [1, 3]])) == (True, None)
    assert is_chordal(Graph.from_edges(4, [list(e) for e in itertools.combinations(range(4), 2)]))[0]
    assert is_chordal(Graph(0))[0]


def test_chordal_matches_brute_force_on_atlas():
    checked = 0
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() > 7:
            continue
        G = as_graph(g)
        ok, cycle = is_chordal(G)
        assert ok == (not brute_has_chordless_cycle(g)), list(g.edges)
        assert ok == nx.is_chordal(g)
        if not ok:
            assert is_induced_cycle(G, cycle)
        checked += 1
    assert checked == 1253


def test_flag_examples():
    ok, witness = is_flag(nerve(C1))
    assert not ok
    # e4, e1, e2 sit at nerve indices 0, 1, 3
    assert witness == [0, 1, 3]
    assert is_flag(boundary_simplex(3)) == (False, [0, 1, 2])
    assert is_flag(simplex(4)) == (True, None)


def test_flag_iff_clique_complex_of_skeleton(rng):
    for _ in range(150):
        n = rng.randint(0, 6)
        faces = [rng.sample(range(n), rng.randint(2, n)) for _ in range(rng.randint(0, 4))] if n >= 2 else []
        K = complex_on(n, faces)
        assert is_flag(K)[0] == (K == clique_complex(skeleton(K)))


def test_clique_complex_is_flag(rng):
    for _ in range(60):
        n = rng.randint(0, 7)
        pairs = [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        assert is_flag(clique_complex(Graph.from_edges(n, [list(p) for p in pairs])))[0]


# ---------------------------------------------------------------------------
# clutter <-> complex
# ---------------------------------------------------------------------------

def test_independence_complex_examples():
    for n in range(2, 7):
        assert independence_complex(single_edge(n)) == boundary_simplex(n)
        assert minimal_nonfaces(boundary_simplex(n)) == single_edge(n)
    for n in range(5):
        assert independence_complex(discrete(n)) == simplex(n)
        assert minimal_nonfaces(simplex(n)) == Clutter(n)
    assert independence_complex(K3) == SimplicialComplex(3)
    assert minimal_nonfaces(complex_on(3, [[0, 1], [1, 2]])) == Clutter.from_edges(3, [[0, 2]])


def test_round_trips_exhaustive():
    for C in clutters_up_to(5):
        K = independence_complex(C)
        assert minimal_nonfaces(K) == C
        assert independence_complex(minimal_nonfaces(K)) == K


def test_join_examples():
    assert join(simplex(2), simplex(3)) == simplex(5)
    square = join(boundary_simplex(2), boundary_simplex(2))
    assert square.facet_lists() == [[0, 2], [0, 3], [1, 2], [1, 3]]
    K = complex_on(3, [[0, 1]])
    assert join(K, SimplicialComplex(0)) == K
    assert join(SimplicialComplex(0), K) == K


def test_ind_of_disjoint_sum_is_join(rng):
    for _ in range(60):
        A = random_hypergraph(rng.randint(0, 4), rng, cls=Clutter)
        B = random_hypergraph(rng.randint(0, 4), rng, cls=Clutter)
        assert independence_complex(disjoint_sum(A, B)) == join(independence_complex(A),
                                                               independence_complex(B))


def test_ind_commutes_with_restriction(rng):
    for _ in range(60):
        C = random_hypergraph(rng.randint(1, 7), rng, cls=Clutter)
        I = rng.randrange(1 << C.n)
        assert restrict_complex(independence_complex(C), I) == independence_complex(restrict(C, I))


# ---------------------------------------------------------------------------
# partition counts
# ---------------------------------------------------------------------------

def test_zeta_K_alpha_examples():
    from math import factorial
    for n in range(1, 6):
        for alpha in compositions(n):
            multinomial = factorial(n)
            for a in alpha:
                multinomial //= factorial(a)
            assert zeta_K_alpha(simplex(n), alpha) == multinomial
    assert zeta_K_alpha(boundary_simplex(2), (2,)) == 0
    with pytest.raises(ValueError):
        zeta_K_alpha(simplex(3), (1, 1))


def test_zeta_K_alpha_matches_hypergraph_side(rng):
    from hyperhopf import zeta_alpha
    for _ in range(30):
        C = random_hypergraph(rng.randint(1, 6), rng, cls=Clutter)
        K = independence_complex(C)
        for alpha in compositions(C.n):
            assert zeta_K_alpha(K, alpha) == zeta_alpha(C, alpha)


def test_partition_polynomial_examples():
    for n in range(5):
        assert partition_polynomial(simplex(n)) == [0] * n + [1]
    assert partition_polynomial(boundary_simplex(2)) == [0, -1, 1]
    assert partition_polynomial(boundary_simplex(3)) == [0, -1, 0, 1]
    with pytest.raises(ValueError):
        partition_polynomial(simplex(2), "other")


def test_partition_polynomial_matches_brute_force(rng):
    for _ in range(40):
        C = random_hypergraph(rng.randint(0, 5), rng, cls=Clutter)
        K = independence_complex(C)
        poly = partition_polynomial(K)
        assert poly == partition_polynomial(K, "direct")
        assert poly == chromatic_polynomial(minimal_nonfaces(K))
        for m in range(5):
            assert poly(m) == partition_functions(K, m)


def test_euler_char_complex_examples():
    assert euler_char_complex(SimplicialComplex(0)) == 1
    for n in range(1, 6):
        assert euler_char_complex(simplex(n)) == 0
    K = complex_on(4, [[0, 2, 3], [1, 2, 3]])  # {0,1} is a minimal nonface
    assert euler_char_complex(restrict_complex(K, [0, 1])) == -2


def test_euler_char_matches_hypergraph_side():
    for C in clutters_up_to(5):
        assert euler_char_complex(independence_complex(C)) == euler_character(C)


# ---------------------------------------------------------------------------
# eulerian complexes
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 8))
def test_boundary_simplex_parity(n):
    for method in ("nonfaces", "direct"):
        assert is_eulerian_complex(boundary_simplex(n), method)[0] == (n % 2 == 1)
    assert is_eulerian_complex(simplex(n))[0]


def test_eulerian_routes_agree_and_skeleton_complete():
    for C in clutters_up_to(5):
        K = independence_complex(C)
        direct = is_eulerian_complex(K, "direct")
        assert direct == is_eulerian_complex(K, "nonfaces")
        assert direct[0] == is_eulerian(C)[0]
        if direct[0]:
            assert len(skeleton(K).edges) == K.n * (K.n - 1) // 2


def test_tree_nerve_eulerian_iff_odd(rng):
    seen = {True: 0, False: 0}
    for _ in range(300):
        C = random_hypergraph(rng.randint(3, 8), rng, max_edges=4, cls=Clutter)
        G = intersection_graph(C)
        if not C.edges or not nx.is_tree(nx.Graph([tuple(e) for e in G.edge_lists()]) if G.edges
                                         else nx.empty_graph(len(C.edges))):
            continue
        if not is_flag(nerve(C))[0]:
            continue
        odd = is_odd_clutter(C)[0]
        assert is_eulerian_complex(independence_complex(C))[0] == odd
        seen[odd] += 1
    assert seen[True] and seen[False]


def test_eulerian_unknown_method():
    with pytest.raises(ValueError):
        is_eulerian_complex(simplex(2), "other")

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperhopf import (
    EMPTY, BoundError, Clutter, Hypergraph, ValidationError, canonical_code, connected_components,
    contract, delete, discrete, disjoint_sum, from_code, is_building_set, is_discrete,
    minimal_edges, restrict,
)
from hyperhopf.setfam import mask_of, relabel

from conftest import K3, PATH3, all_hypergraphs, hypergraphs

H5 = Hypergraph.from_edges(5, [[0, 1, 2], [2, 3, 4]])


def test_invariants_rejected():
    with pytest.raises(ValidationError):
        Hypergraph.from_edges(3, [[0]])
    with pytest.raises(ValidationError):
        Hypergraph.from_edges(2, [[0, 2]])
    with pytest.raises(ValidationError):
        Hypergraph(3, (3, 3))
    with pytest.raises(ValidationError):
        Clutter.from_edges(3, [[0, 1], [0, 1, 2]])


def test_restrict_examples():
    assert restrict(H5, [0, 1, 2]) == Hypergraph.from_edges(3, [[0, 1, 2]])
    assert restrict(H5, [0, 1]) == discrete(2)
    assert restrict(H5, range(5)) == H5
    # relabeling is order preserving
    assert restrict(H5, [2, 3, 4]) == Hypergraph.from_edges(3, [[0, 1, 2]])
    with pytest.raises(ValidationError):
        restrict(H5, [5])


def test_disjoint_sum_examples():
    assert disjoint_sum(discrete(2), discrete(3)) == discrete(5)
    e = Hypergraph.from_edges(2, [[0, 1]])
    assert disjoint_sum(e, e) == Hypergraph.from_edges(4, [[0, 1], [2, 3]])
    assert disjoint_sum(H5, EMPTY) == H5
    assert disjoint_sum(EMPTY, H5) == H5


def test_minimal_edges_examples():
    assert minimal_edges(Hypergraph.from_edges(4, [[0, 1], [0, 1, 2]])) == Clutter.from_edges(4, [[0, 1]])
    assert minimal_edges(K3) == K3
    H = Hypergraph.from_edges(3, [[0, 1], [1, 2], [0, 1, 2]])
    assert minimal_edges(H) == PATH3


def test_is_discrete():
    assert is_discrete(discrete(5))
    assert not is_discrete(Hypergraph.from_edges(2, [[0, 1]]))
    assert is_discrete(EMPTY)


def test_building_set():
    assert is_building_set(discrete(4))
    assert not is_building_set(Hypergraph.from_edges(3, [[0, 1], [1, 2]]))
    assert is_building_set(Hypergraph.from_edges(3, [[0, 1], [1, 2], [0, 1, 2]]))


def test_delete_examples():
    assert delete(PATH3, [0, 1]) == Clutter.from_edges(3, [[1, 2]])
    assert delete(Clutter.from_edges(2, [[0, 1]]), [0, 1]) == discrete(2)
    C = Clutter.from_edges(5, [[0, 1, 2], [2, 3, 4]])
    assert delete(C, [2, 3, 4]) == Clutter.from_edges(5, [[0, 1, 2]])
    with pytest.raises(ValidationError):
        delete(C, [0, 1])


def test_contract_examples():
    C = Clutter.from_edges(5, [[0, 1, 2], [2, 3, 4]])
    # {2,3,4} meets e in {2}: image {3,4,fresh} is the whole new vertex set
    assert contract(C, [0, 1, 2]) == Clutter.from_edges(3, [[0, 1, 2]])
    assert contract(Clutter.from_edges(4, [[0, 1], [2, 3]]), [0, 1]) == Clutter.from_edges(3, [[0, 1]])
    assert contract(K3, [0, 1]) == Clutter.from_edges(2, [[0, 1]])
    with pytest.raises(ValidationError):
        contract(C, [0, 1])


def test_contract_minimalizes():
    C = Clutter.from_edges(5, [[0, 1], [1, 2], [2, 3, 4]])
    # images: {fresh, 2} and {2,3,4}; the latter stays since it avoids e
    assert contract(C, [0, 1]) == Clutter.from_edges(4, [[0, 3], [0, 1, 2]])
    C = Clutter.from_edges(4, [[0, 1], [0, 2, 3], [1, 2, 3]])
    # both images become {fresh, 2, 3} and merge
    assert contract(C, [0, 1]) == Clutter.from_edges(3, [[0, 1, 2]])


def test_connected_components():
    assert connected_components(H5) == [0b11111]
    assert connected_components(Hypergraph.from_edges(5, [[0, 1, 2]])) == [0b111, 0b1000, 0b10000]
    assert connected_components(discrete(3)) == [1, 2, 4]


def test_canonical_examples():
    assert canonical_code(Hypergraph.from_edges(2, [[0, 1]])) == canonical_code(Hypergraph.from_edges(2, [[1, 0]]))
    p1 = Hypergraph.from_edges(3, [[0, 1], [1, 2]])
    p2 = Hypergraph.from_edges(3, [[1, 0], [0, 2]])
    assert canonical_code(p1) == canonical_code(p2)
    assert canonical_code(K3) != canonical_code(p1)
    with pytest.raises(BoundError):
        canonical_code(discrete(13))


def test_from_code_roundtrip():
    for H in (H5, K3, EMPTY, discrete(4)):
        assert canonical_code(from_code(canonical_code(H))) == canonical_code(H)


def _brute_code(H):
    return min(tuple(sorted(relabel(H, perm).edges)) for perm in itertools.permutations(range(H.n)))


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_canonical_matches_brute_force_classes(n):
    ours, brute = {}, {}
    for H in all_hypergraphs(n):
        ours.setdefault(canonical_code(H), set()).add(H)
        brute.setdefault(_brute_code(H), set()).add(H)
    assert {frozenset(v) for v in ours.values()} == {frozenset(v) for v in brute.values()}


def test_canonical_separates_random_pairs():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(4, 6)
        pool = [m for m in range(1 << n) if bin(m).count("1") >= 2]
        k = rng.randint(0, 5)
        a = Hypergraph(n, tuple(rng.sample(pool, k)))
        b = Hypergraph(n, tuple(rng.sample(pool, k)))
        assert (canonical_code(a) == canonical_code(b)) == (_brute_code(a) == _brute_code(b))


@settings(max_examples=150, deadline=None)
@given(hypergraphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_invariant_under_relabeling(H, r):
    perm = list(range(H.n))
    r.shuffle(perm)
    assert canonical_code(relabel(H, perm)) == canonical_code(H)


def test_canonical_symmetric_instances_are_fast():
    # complete graphs, cycles and discrete sets exercise the twin and refinement pruning
    K8 = Hypergraph(8, tuple((1 << i) | (1 << j) for i in range(8) for j in range(i + 1, 8)))
    cycle = Hypergraph(12, tuple((1 << i) | (1 << (i + 1) % 12) for i in range(12)))
    assert canonical_code(K8)[0] == 8
    assert canonical_code(cycle) == canonical_code(relabel(cycle, [(5 * i) % 12 for i in range(12)]))
    assert canonical_code(discrete(12)) == (12, ())


@settings(max_examples=100, deadline=None)
@given(hypergraphs(), st.data())
def test_restrict_functorial(H, data):
    I = data.draw(st.integers(0, H.vertex_mask))
    J = data.draw(st.integers(0, H.vertex_mask)) & I
    # image of J inside the relabeled I
    from hyperhopf.setfam import compress
    assert restrict(restrict(H, I), compress(J, I)) == restrict(H, J)


@settings(max_examples=100, deadline=None)
@given(hypergraphs(), st.data())
def test_minimal_edges_commutes_with_restrict(H, data):
    I = data.draw(st.integers(0, H.vertex_mask))
    assert minimal_edges(restrict(H, I)) == restrict(minimal_edges(H), I)
    assert minimal_edges(minimal_edges(H)) == minimal_edges(H)


@settings(max_examples=100, deadline=None)
@given(hypergraphs(max_n=4), hypergraphs(max_n=4))
def test_minimal_edges_commutes_with_sum(A, B):
    assert minimal_edges(disjoint_sum(A, B)) == disjoint_sum(minimal_edges(A), minimal_edges(B))


@settings(max_examples=150, deadline=None)
@given(hypergraphs(max_n=7), st.data())
def test_contract_shape(H, data):
    C = minimal_edges(H)
    if not C.edges:
        return
    e = data.draw(st.sampled_from(C.edges))
    q = contract(C, e)
    assert q.n == C.n - bin(e).count("1") + 1
    assert isinstance(q, Clutter)
    assert all(bin(f).count("1") >= 2 for f in q.edges)


def test_mask_helpers():
    assert mask_of([0, 2]) == 5

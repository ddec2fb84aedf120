import itertools
import random
import sys

import pytest
from hypothesis import strategies as st

from hyperhopf import Clutter, Hypergraph
from hyperhopf.setfam import members


def one_based(n, edges, cls=Clutter):
    return cls.from_edges(n, [[v - 1 for v in e] for e in edges])


E1, E2, E3, E4 = [1, 2, 3, 4, 5], [5, 6, 7, 8, 9], [3, 4, 5, 6, 7], [1, 9, 10]
E5, E6 = [1, 10, 11], [9, 11, 12]

# two clutters with the same Ψ; only TWIN_EULERIAN is eulerian
TWIN = one_based(5, [[1, 2, 3], [2, 3, 4], [1, 3, 4, 5]])
TWIN_EULERIAN = one_based(5, [[1, 2, 3], [3, 4, 5]])
# eulerian although two edges meet in an even set
EVEN_MEET = one_based(8, [[1, 2, 3, 6, 7], [3, 4, 5, 7, 8], [1, 2, 3, 4, 5]])
C1 = one_based(10, [E1, E2, E3, E4])
C2 = one_based(12, [E1, E2, E3, E5, E6])

K3 = Clutter.from_edges(3, [[0, 1], [1, 2], [0, 2]])
PATH3 = Clutter.from_edges(3, [[0, 1], [1, 2]])
EDGE2 = Clutter.from_edges(2, [[0, 1]])


def single_edge(n):
    return Clutter(n, ((1 << n) - 1,))


def proper_colorings(H, m):
    """Colorings V -> [m] with no monochromatic edge."""
    count = 0
    for f in itertools.product(range(m), repeat=H.n):
        if all(len({f[v] for v in members(e)}) > 1 for e in H.edges):
            count += 1
    return count


def partition_functions(K, m):
    """Maps V -> [m] whose color classes are faces of K."""
    count = 0
    for f in itertools.product(range(m), repeat=K.n):
        classes = {}
        for v, c in enumerate(f):
            classes[c] = classes.get(c, 0) | 1 << v
        if all(K.is_face(cls) for cls in classes.values()):
            count += 1
    return count


def ordered_set_partitions(vertices):
    """Ordered decompositions of a list into nonempty blocks."""
    vertices = list(vertices)
    if not vertices:
        yield ()
        return
    n = len(vertices)
    for k in range(1, n + 1):
        for labels in itertools.product(range(k), repeat=n):
            if len(set(labels)) == k:
                yield tuple(sum(1 << v for v, lab in zip(vertices, labels) if lab == j) for j in range(k))


def random_hypergraph(n, rng, max_edges=6, cls=Hypergraph):
    edges = set()
    if n >= 2:
        for _ in range(rng.randint(0, max_edges)):
            edges.add(sum(1 << v for v in rng.sample(range(n), rng.randint(2, n))))
    H = Hypergraph(n, tuple(edges))
    if cls is Clutter:
        from hyperhopf import minimal_edges
        return minimal_edges(H)
    return H


def all_hypergraphs(n):
    candidates = [m for m in range(1 << n) if bin(m).count("1") >= 2]
    for bits in range(1 << len(candidates)):
        yield Hypergraph(n, tuple(c for i, c in enumerate(candidates) if bits >> i & 1))


@pytest.fixture
def rng():
    return random.Random(20261019)


@st.composite
def hypergraphs(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return Hypergraph(n)
    pool = [m for m in range(1 << n) if bin(m).count("1") >= 2]
    edges = draw(st.sets(st.sampled_from(pool), max_size=6))
    return Hypergraph(n, tuple(edges))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)

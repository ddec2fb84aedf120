"""Simplicial complexes stored by facets, and the clutter/complex dictionary.

A complex on ``0..n-1`` keeps only facets with at least two vertices; every
singleton is a face, so isolated vertices need no facet.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .hopf import independence_table
from .setfam import (
    BoundError,
    Clutter,
    Graph,
    Hypergraph,
    ValidationError,
    compress,
    edge_key,
    mask_of,
    members,
    popcount,
    submasks,
)
from .symfun import IntPolynomial, binomial_expansion, chromatic_polynomial, compositions

MAX_COMPLEX_VERTICES = 20


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("vertex count must be non-negative")
        full = (1 << self.n) - 1
        for f in self.facets:
            if f & ~full:
                raise ValidationError(f"facet {list(members(f))} has a vertex outside 0..{self.n - 1}")
        kept = [f for f in set(self.facets) if popcount(f) >= 2]
        maximal = [f for f in kept if not any(g != f and g & f == f for g in kept)]
        object.__setattr__(self, "facets", tuple(sorted(maximal, key=edge_key)))

    @classmethod
    def from_facets(cls, n: int, facets):
        return cls(n, tuple(mask_of(f) for f in facets))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def is_face(self, mask: int) -> bool:
        if popcount(mask) <= 1:
            return mask & ~self.vertex_mask == 0
        return any(mask & f == mask for f in self.facets)

    def maximal_faces(self) -> tuple[int, ...]:
        """Facets including isolated vertices; ``(0,)`` for the empty complex."""
        covered = 0
        for f in self.facets:
            covered |= f
        out = list(self.facets) + [1 << v for v in range(self.n) if not covered >> v & 1]
        return tuple(sorted(out, key=edge_key)) or (0,)

    def face_table(self) -> list[bool]:
        """``table[I]`` is True iff I is a face."""
        if self.n > MAX_COMPLEX_VERTICES:
            raise BoundError(f"at most {MAX_COMPLEX_VERTICES} vertices supported, got {self.n}")
        size = 1 << self.n
        face = [False] * size
        for f in self.maximal_faces():
            face[f] = True
        # downward closure
        for v in range(self.n):
            bit = 1 << v
            for m in range(size):
                if not m & bit and face[m | bit]:
                    face[m] = True
        return face

    def faces(self):
        table = self.face_table()
        return [m for m in range(1 << self.n) if table[m]]

    def facet_lists(self) -> list[list[int]]:
        return [list(members(f)) for f in self.facets]

    def to_json(self) -> dict:
        return {"vertices": self.n, "facets": self.facet_lists()}

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={self.facet_lists()})"


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, ((1 << n) - 1,) if n >= 2 else ())


def boundary_simplex(n: int) -> SimplicialComplex:
    """∂Δ[n]: all proper subsets of an n-set."""
    full = (1 << n) - 1
    return SimplicialComplex(n, tuple(full ^ (1 << v) for v in range(n)) if n >= 3 else ())


def _facets_of_table(n: int, table: list[bool]) -> tuple[int, ...]:
    full = (1 << n) - 1
    out = []
    for m, ok in enumerate(table):
        if not ok or popcount(m) < 2:
            continue
        rest = full & ~m
        maximal = True
        while rest:
            low = rest & -rest
            if table[m | low]:
                maximal = False
                break
            rest ^= low
        if maximal:
            out.append(m)
    return tuple(out)


# ---------------------------------------------------------------------------
# nerve and intersection graph
# ---------------------------------------------------------------------------

def nerve(C: Hypergraph) -> SimplicialComplex:
    """N(C) on the edge indices of C (edges in size-then-lexicographic order)."""
    stars = []
    for v in range(C.n):
        star = 0
        for i, e in enumerate(C.edges):
            if e >> v & 1:
                star |= 1 << i
        if star:
            stars.append(star)
    return SimplicialComplex(len(C.edges), tuple(stars))


def intersection_graph(C: Hypergraph) -> Graph:
    pairs = [(1 << i) | (1 << j)
             for (i, a), (j, b) in combinations(enumerate(C.edges), 2) if a & b]
    return Graph(len(C.edges), tuple(pairs))


# ---------------------------------------------------------------------------
# chordality
# ---------------------------------------------------------------------------

def mcs_order(G: Graph) -> list[int]:
    """Maximum cardinality search; returns vertices in visiting order."""
    adj = G.adjacency()
    weight = [0] * G.n
    unvisited = set(range(G.n))
    order = []
    while unvisited:
        v = max(sorted(unvisited), key=lambda u: weight[u])
        order.append(v)
        unvisited.remove(v)
        for u in members(adj[v]):
            if u in unvisited:
                weight[u] += 1
    return order


def _is_peo(G: Graph, elimination: list[int]) -> bool:
    """Check a perfect elimination ordering (each vertex's later neighbors form a clique)."""
    adj = G.adjacency()
    pos = {v: i for i, v in enumerate(elimination)}
    for v in elimination:
        later = [u for u in members(adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        need = 0
        for u in later:
            if u != parent:
                need |= 1 << u
        if need & ~adj[parent]:
            return False
    return True


def chordless_cycle(G: Graph) -> list[int] | None:
    """Some induced cycle of length at least 4, or None."""
    adj = G.adjacency()
    for v in range(G.n):
        nb = members(adj[v])
        for u, w in combinations(nb, 2):
            if adj[u] >> w & 1:
                continue
            blocked = (adj[v] | (1 << v)) & ~((1 << u) | (1 << w))
            path = _shortest_path(adj, u, w, blocked)
            if path is not None:
                return [v] + path
    return None


def _shortest_path(adj, src, dst, blocked):
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            out = []
            while x is not None:
                out.append(x)
                x = prev[x]
            return out[::-1]
        for y in members(adj[x] & ~blocked):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def is_chordal(G: Graph) -> tuple[bool, list[int] | None]:
    """Chordality via MCS plus PEO verification; witness is a chordless cycle."""
    order = mcs_order(G)
    if _is_peo(G, order[::-1]):
        return True, None
    cycle = chordless_cycle(G)
    assert cycle is not None, "MCS rejected a graph without a chordless cycle"
    return False, cycle


# ---------------------------------------------------------------------------
# clutter <-> complex
# ---------------------------------------------------------------------------

def minimal_nonfaces(K: SimplicialComplex) -> Clutter:
    table = K.face_table()
    out = []
    for m, ok in enumerate(table):
        if ok:
            continue
        if all(table[m ^ (1 << v)] for v in members(m)):
            out.append(m)
    return Clutter(K.n, tuple(out))


def independence_complex(C: Hypergraph) -> SimplicialComplex:
    """Ind(C): vertex sets containing no edge of C."""
    if C.n > MAX_COMPLEX_VERTICES:
        raise BoundError(f"at most {MAX_COMPLEX_VERTICES} vertices supported, got {C.n}")
    return SimplicialComplex(C.n, _facets_of_table(C.n, independence_table(C)))


def is_flag(K: SimplicialComplex) -> tuple[bool, list[int] | None]:
    """Flag iff every minimal nonface has two elements; witness is a larger one."""
    big = [e for e in minimal_nonfaces(K).edges if popcount(e) >= 3]
    if not big:
        return True, None
    return False, list(members(min(big, key=edge_key)))


def clique_complex(G: Graph) -> SimplicialComplex:
    """Complex of all cliques of G."""
    adj = G.adjacency()
    table = [True] * (1 << G.n)
    for m in range(1 << G.n):
        for v in members(m):
            if (m & ~(1 << v)) & ~adj[v]:
                table[m] = False
                break
    return SimplicialComplex(G.n, _facets_of_table(G.n, table))


def skeleton(K: SimplicialComplex) -> Graph:
    """1-skeleton."""
    pairs = set()
    for f in K.facets:
        for u, w in combinations(members(f), 2):
            pairs.add((1 << u) | (1 << w))
    return Graph(K.n, tuple(pairs))


def restrict_complex(K: SimplicialComplex, I) -> SimplicialComplex:
    mask = I if isinstance(I, int) else mask_of(I)
    if mask & ~K.vertex_mask:
        raise ValidationError("restriction set is not inside the vertex range")
    return SimplicialComplex(popcount(mask), tuple(compress(f & mask, mask) for f in K.facets))


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """K1 ∗ K2 on the vertex set 0..n1-1 followed by n1..n1+n2-1."""
    facets = [a | (b << K1.n) for a in K1.maximal_faces() for b in K2.maximal_faces()]
    return SimplicialComplex(K1.n + K2.n, tuple(facets))


# ---------------------------------------------------------------------------
# partition counts
# ---------------------------------------------------------------------------

def zeta_K_alpha(K: SimplicialComplex, alpha) -> int:
    """Ordered decompositions of the vertex set into faces of sizes ``alpha``."""
    alpha = tuple(alpha)
    if any(a < 1 for a in alpha) or sum(alpha) != K.n:
        raise ValueError(f"{alpha} is not a composition of {K.n}")
    table = K.face_table()
    by_size: dict[int, list[int]] = {}
    for m, ok in enumerate(table):
        if ok:
            by_size.setdefault(popcount(m), []).append(m)
    states = {0: 1}
    for a in alpha:
        nxt: dict[int, int] = {}
        for used, cnt in states.items():
            for block in by_size.get(a, ()):
                if not block & used:
                    nxt[used | block] = nxt.get(used | block, 0) + cnt
        states = nxt
    return states.get(K.vertex_mask, 0)


def _ordered_face_partitions(K: SimplicialComplex) -> list[int]:
    """Ordered decompositions into k nonempty faces, for each k."""
    counts = [0] * (K.n + 1)
    for alpha in compositions(K.n):
        counts[len(alpha)] += zeta_K_alpha(K, alpha)
    return counts


def partition_polynomial(K: SimplicialComplex, method: str = "nonfaces") -> IntPolynomial:
    """Number of partition functions V -> [m] as a polynomial in m."""
    if method == "nonfaces":
        return chromatic_polynomial(minimal_nonfaces(K))
    if method == "direct":
        return binomial_expansion(_ordered_face_partitions(K))
    raise ValueError(f"unknown method {method!r}")


def euler_char_complex(K: SimplicialComplex) -> int:
    """Σ (-1)^|I| over splittings V = I ⊔ I^c into two faces."""
    table = K.face_table()
    full = K.vertex_mask
    return sum((-1) ** popcount(I) for I in submasks(full) if table[I] and table[full ^ I])


def zeta_K_inverse_table(K: SimplicialComplex) -> list[int]:
    """ζ_K⁻¹(K|_I) for every vertex mask I."""
    table = K.face_table()
    f = [0] * (1 << K.n)
    f[0] = 1
    for mask in range(1, 1 << K.n):
        f[mask] = -sum(f[mask ^ A] for A in submasks(mask) if A and table[A])
    return f


def is_eulerian_complex(K: SimplicialComplex, method: str = "nonfaces") -> tuple[bool, list[int] | None]:
    """Eulerian test; witness is a vertex set whose restriction violates the condition."""
    if method == "nonfaces":
        from .euler import is_eulerian

        return is_eulerian(minimal_nonfaces(K))
    if method == "direct":
        table = K.face_table()
        zinv = zeta_K_inverse_table(K)
        bad = [I for I in range(1, 1 << K.n) if not table[I] and zinv[I]]
        if not bad:
            return True, None
        return False, list(members(min(bad, key=edge_key)))
    raise ValueError(f"unknown method {method!r}")


__all__ = [
    "SimplicialComplex", "simplex", "boundary_simplex", "nerve", "intersection_graph",
    "mcs_order", "is_chordal", "chordless_cycle", "is_flag", "clique_complex",
    "independence_complex", "minimal_nonfaces", "restrict_complex", "join", "skeleton",
    "zeta_K_alpha", "partition_polynomial", "euler_char_complex", "is_eulerian_complex",
    "zeta_K_inverse_table",
]

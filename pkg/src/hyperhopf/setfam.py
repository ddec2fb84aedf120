"""Hypergraphs and clutters on small vertex sets.

Vertex sets are stored as integer bitmasks (bit ``v`` set means vertex ``v``
belongs to the set).  Every object lives on the contiguous vertex range
``0..n-1``; operations that drop vertices relabel the survivors by the
order-preserving map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

MAX_CANONICAL_VERTICES = 12

VertexSpec = Union[int, Iterable[int]]


class ValidationError(ValueError):
    """An instance violates the invariants of its type."""


class BoundError(ValueError):
    """An input exceeds a hard size bound of an exponential algorithm."""


# ---------------------------------------------------------------------------
# bitmask helpers
# ---------------------------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 0:
            raise ValidationError(f"negative vertex {v}")
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    """Sorted vertices of a bitmask."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself (descending)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(mask: int, domain: int) -> int:
    """Relabel the bits of ``mask`` (a subset of ``domain``) onto 0..|domain|-1."""
    out = 0
    j = 0
    while domain:
        low = domain & -domain
        if mask & low:
            out |= 1 << j
        domain ^= low
        j += 1
    return out


def edge_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Ordering of edges: by size, then lexicographically by sorted vertices."""
    return popcount(mask), members(mask)


def _as_mask(vs: VertexSpec) -> int:
    if isinstance(vs, int):
        if vs < 0:
            raise ValidationError("vertex mask must be non-negative")
        return vs
    return mask_of(vs)


# ---------------------------------------------------------------------------
# types
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A hypergraph on vertices ``0..n-1``.

    ``edges`` holds distinct bitmasks of size at least two, sorted by
    :func:`edge_key`.  Use :meth:`from_edges` to build one from vertex lists.
    """

    n: int
    edges: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("vertex count must be non-negative")
        full = (1 << self.n) - 1
        for e in self.edges:
            if e & ~full:
                raise ValidationError(f"edge {list(members(e))} has a vertex outside 0..{self.n - 1}")
            if popcount(e) < 2:
                raise ValidationError(f"edge {list(members(e))} has fewer than two vertices")
        if len(set(self.edges)) != len(self.edges):
            raise ValidationError("edges must be distinct")
        ordered = tuple(sorted(self.edges, key=edge_key))
        if ordered != self.edges:
            object.__setattr__(self, "edges", ordered)

    # a clutter and a hypergraph with the same edges are the same set family
    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]):
        return cls(n, tuple(mask_of(e) for e in edges))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_lists(self) -> list[list[int]]:
        return [list(members(e)) for e in self.edges]

    def to_json(self) -> dict:
        return {"vertices": self.n, "edges": self.edge_lists()}

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={self.edge_lists()})"


class Clutter(Hypergraph):
    """A hypergraph whose edges form an antichain."""

    def __post_init__(self):
        super().__post_init__()
        es = self.edges
        for i, a in enumerate(es):
            for b in es[i + 1:]:
                # edges are sorted by size, so only a ⊆ b is possible
                if a & b == a:
                    raise ValidationError(
                        f"edge {list(members(a))} is contained in {list(members(b))}")


class Graph(Hypergraph):
    """A simple undirected graph: a 2-uniform hypergraph."""

    def __post_init__(self):
        super().__post_init__()
        for e in self.edges:
            if popcount(e) != 2:
                raise ValidationError("graph edges must have exactly two vertices")

    def neighbors(self, v: int) -> int:
        out = 0
        bit = 1 << v
        for e in self.edges:
            if e & bit:
                out |= e ^ bit
        return out

    def adjacency(self) -> list[int]:
        adj = [0] * self.n
        for e in self.edges:
            u, w = members(e)
            adj[u] |= 1 << w
            adj[w] |= 1 << u
        return adj


def discrete(n: int) -> Hypergraph:
    """The discrete hypergraph D_n."""
    return Hypergraph(n)


EMPTY = Hypergraph(0)


def _rebuild(H: Hypergraph, n: int, edges) -> Hypergraph:
    """Same concrete type as ``H`` where the type's invariant is preserved."""
    return type(H)(n, tuple(edges))


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def restrict(H: Hypergraph, I: VertexSpec) -> Hypergraph:
    """H|_I relabeled onto 0..|I|-1."""
    mask = _as_mask(I)
    if mask & ~H.vertex_mask:
        raise ValidationError(f"restriction set {list(members(mask))} is not inside 0..{H.n - 1}")
    kept = [compress(e, mask) for e in H.edges if e & mask == e]
    return _rebuild(H, popcount(mask), kept)


def disjoint_sum(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    edges = list(H1.edges) + [e << H1.n for e in H2.edges]
    cls = type(H1) if type(H1) is type(H2) else Hypergraph
    return cls(H1.n + H2.n, tuple(edges))


def minimal_edges(H: Hypergraph) -> Clutter:
    """The clutter of inclusion-minimal edges of H."""
    kept: list[int] = []
    for e in H.edges:  # ascending size: any proper subset comes first
        if not any(f & e == f for f in kept):
            kept.append(e)
    return Clutter(H.n, tuple(kept))


def is_discrete(H: Hypergraph) -> bool:
    return not H.edges


def is_building_set(H: Hypergraph) -> bool:
    es = set(H.edges)
    for a in H.edges:
        for b in H.edges:
            if a & b and (a | b) not in es:
                return False
    return True


def _edge_mask_in(C: Hypergraph, e: VertexSpec) -> int:
    m = _as_mask(e)
    if m not in C.edges:
        raise ValidationError(f"{list(members(m))} is not an edge")
    return m


def delete(C: Clutter, e: VertexSpec) -> Clutter:
    m = _edge_mask_in(C, e)
    return Clutter(C.n, tuple(f for f in C.edges if f != m))


def contract(C: Clutter, e: VertexSpec) -> Clutter:
    """C/e: the edge e collapses to one fresh vertex, placed last.

    The survivors ``V \\ e`` keep their relative order on 0..n-|e|-1 and the
    fresh vertex gets label n-|e|.  Images are minimalized.
    """
    m = _edge_mask_in(C, e)
    rest = C.vertex_mask & ~m
    fresh = 1 << popcount(rest)
    images = set()
    for f in C.edges:
        if f == m:
            continue
        img = compress(f & rest, rest)
        if f & m:
            img |= fresh
        assert popcount(img) >= 2, "contraction image of an antichain edge is too small"
        images.add(img)
    H = Hypergraph(popcount(rest) + 1, tuple(images))
    return minimal_edges(H)


def connected_components(H: Hypergraph) -> list[int]:
    """Vertex masks of the connected components, sorted by minimum vertex."""
    comps: list[int] = []
    for e in H.edges:
        merged = e
        rest = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                rest.append(c)
        comps = rest + [merged]
    covered = 0
    for c in comps:
        covered |= c
    for v in range(H.n):
        if not covered >> v & 1:
            comps.append(1 << v)
    return sorted(comps, key=lambda c: (c & -c))


def relabel(H: Hypergraph, perm) -> Hypergraph:
    """Image of H under the vertex map ``v -> perm[v]``."""
    edges = []
    for e in H.edges:
        img = 0
        for v in members(e):
            img |= 1 << perm[v]
        edges.append(img)
    return _rebuild(H, H.n, edges)


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

CanonicalCode = tuple  # (n, tuple of sorted vertex tuples)


def _refine(n: int, edges: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered vertex partition.

    A vertex's signature is the sorted multiset, over edges through it, of the
    sorted cell indices of that edge's vertices.  Cells split by signature and
    the pieces stay in signature order, so the procedure commutes with
    relabeling.
    """
    incident = [[e for e in edges if e >> v & 1] for v in range(n)]
    while True:
        cell_of = [0] * n
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                sig[v] = tuple(sorted(
                    tuple(sorted(cell_of[u] for u in members(e))) for e in incident[v]))
            groups: dict = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                new_cells.append(groups[key])
        cells = new_cells
        if not changed:
            return cells


def _twin_classes(n: int, edges: tuple[int, ...]) -> list[int]:
    """Representative of each vertex's twin class.

    u and v are twins when the transposition (u v) is an automorphism.
    """
    es = set(edges)
    rep = list(range(n))
    for u in range(n):
        if rep[u] != u:
            continue
        for v in range(u + 1, n):
            if rep[v] != v:
                continue
            bu, bv = 1 << u, 1 << v
            ok = True
            for e in edges:
                if bool(e & bu) != bool(e & bv):
                    if (e ^ bu ^ bv) not in es:
                        ok = False
                        break
            if ok:
                rep[v] = u
    return rep


@lru_cache(maxsize=1 << 16)
def _canonical(n: int, edges: tuple[int, ...]) -> tuple:
    if not edges:
        return ()
    twins = _twin_classes(n, edges)
    best = None

    def leaf(cells):
        label = [0] * n
        for i, cell in enumerate(cells):
            label[cell[0]] = i
        out = []
        for e in edges:
            out.append(tuple(sorted(label[v] for v in members(e))))
        out.sort(key=lambda t: (len(t), t))
        return tuple(out)

    def search(cells):
        nonlocal best
        cells = _refine(n, edges, cells)
        if len(cells) == n:
            cand = leaf(cells)
            if best is None or cand < best:
                best = cand
            return
        target = min((i for i, c in enumerate(cells) if len(c) > 1),
                     key=lambda i: (len(cells[i]), i))
        seen_reps = set()
        for v in cells[target]:
            if twins[v] in seen_reps:
                continue
            seen_reps.add(twins[v])
            rest = [u for u in cells[target] if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(n))])
    return best


def canonical_code(H: Hypergraph) -> CanonicalCode:
    """Isomorphism-class code ``(n, edges)``; equal iff isomorphic."""
    if H.n > MAX_CANONICAL_VERTICES:
        raise BoundError(f"canonical form supports at most {MAX_CANONICAL_VERTICES} vertices, got {H.n}")
    return (H.n, _canonical(H.n, H.edges))


def from_code(code: CanonicalCode) -> Hypergraph:
    n, edges = code
    return Hypergraph.from_edges(n, edges)


def code_n(code: CanonicalCode) -> int:
    return code[0]

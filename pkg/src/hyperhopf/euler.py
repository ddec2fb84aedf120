"""Eulerian hypergraphs, Dehn–Sommerville checks and clutter predicates.

Every predicate returns ``(flag, witness)``; the witness is ``None`` when the
flag holds and otherwise the smallest violation, where vertex and edge sets
are ordered by size and then lexicographically.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .complexes import intersection_graph, is_chordal, is_flag, nerve
from .hopf import independence_table, zeta_inverse_table
from .setfam import (
    BoundError,
    Clutter,
    Hypergraph,
    canonical_code,
    edge_key,
    from_code,
    members,
    minimal_edges,
    popcount,
    restrict,
    submasks,
)
from .symfun import MAX_POWERSUM_EDGES, compositions, psi, subclutter_partitions


def _violation_key(mask: int):
    return edge_key(mask)


def is_eulerian(H: Hypergraph) -> tuple[bool, list[int] | None]:
    """For every nonempty I, H|_I is discrete or ζ⁻¹(H|_I) = 0."""
    indep = independence_table(H)
    zinv = zeta_inverse_table(H)
    bad = [I for I in range(1, 1 << H.n) if not indep[I] and zinv[I]]
    if not bad:
        return True, None
    return False, list(members(min(bad, key=_violation_key)))


def is_eulerian_hypergraph_via_clutter(H: Hypergraph) -> bool:
    return is_eulerian(minimal_edges(H))[0]


def relation5_sums(H: Hypergraph, table: dict | None = None):
    """Yield (α, i, sum) for every composition α of n and position i (1-based).

    The j-th summand is ζ of α with a_i replaced by (j, a_i - j); a zero part
    is dropped, since ζ on degree zero is the counit.
    """
    if table is None:
        table = psi(H).coeffs
    for alpha in compositions(H.n):
        for i, a in enumerate(alpha):
            total = 0
            for j in range(a + 1):
                beta = alpha[:i] + tuple(x for x in (j, a - j) if x) + alpha[i + 1:]
                total += (-1) ** j * table.get(beta, 0)
            yield alpha, i + 1, total


def check_relation5(H: Hypergraph) -> tuple[bool, dict | None]:
    for alpha, i, total in relation5_sums(H):
        if total:
            return False, {"composition": list(alpha), "position": i, "sum": total}
    return True, None


def odd_subalgebra_defect(H: Hypergraph) -> dict:
    """Coefficients of (id ⊗ (ζ̄ - ζ⁻¹) ⊗ id)∘Δ⁽²⁾(H), keyed by pairs of codes."""
    indep = independence_table(H)
    zinv = zeta_inverse_table(H)
    full = H.vertex_mask
    codes: dict[int, tuple] = {}

    def code(mask):
        if mask not in codes:
            codes[mask] = canonical_code(restrict(H, mask))
        return codes[mask]

    acc: dict = defaultdict(int)
    for J in submasks(full):
        zbar = (-1) ** popcount(J) if indep[J] else 0
        c = zbar - zinv[J]
        if not c:
            continue
        rest = full & ~J
        for I in submasks(rest):
            acc[(code(I), code(rest & ~I))] += c
    return {k: v for k, v in acc.items() if v}


def in_odd_subalgebra(H: Hypergraph) -> tuple[bool, dict | None]:
    defect = odd_subalgebra_defect(H)
    if not defect:
        return True, None
    key = min(defect)
    return False, {
        "left": from_code(key[0]).to_json(),
        "right": from_code(key[1]).to_json(),
        "coefficient": defect[key],
    }


def _edge_subsets(C: Hypergraph):
    """Nonempty edge-index subsets in size-then-lexicographic order."""
    m = len(C.edges)
    if m > MAX_POWERSUM_EDGES:
        raise BoundError(f"at most {MAX_POWERSUM_EDGES} edges supported, got {m}")
    for r in range(1, m + 1):
        yield from combinations(range(m), r)


def is_odd_clutter(C: Hypergraph) -> tuple[bool, list[list[int]] | None]:
    """|∩C'| is odd for every face C' of the nerve, singletons included."""
    for idx in _edge_subsets(C):
        common = C.vertex_mask
        for i in idx:
            common &= C.edges[i]
        if common and popcount(common) % 2 == 0:
            return False, [list(members(C.edges[i])) for i in idx]
    return True, None


def satisfies_star(C: Hypergraph) -> tuple[bool, list[int] | None]:
    """Every edge lies strictly inside the union of the other edges."""
    for e in C.edges:
        others = 0
        for f in C.edges:
            if f != e:
                others |= f
        if not (e & others == e and e != others):
            return False, list(members(e))
    return True, None


def odd_partition_property(C: Hypergraph) -> tuple[bool, list[list[int]] | None]:
    """λ(S) has only odd parts for every subclutter S."""
    bad = [chosen for chosen, lam in subclutter_partitions(C) if any(x % 2 == 0 for x in lam)]
    if not bad:
        return True, None
    worst = min(bad, key=lambda s: (popcount(s), members(s)))
    return False, [list(members(C.edges[i])) for i in members(worst)]


# ---------------------------------------------------------------------------
# aggregate report
# ---------------------------------------------------------------------------

FLAG_NAMES = (
    "is_eulerian",
    "satisfies_relation5",
    "in_odd_subalgebra",
    "is_odd_clutter",
    "nerve_is_flag",
    "intersection_graph_chordal",
    "satisfies_star",
    "odd_partition_property",
)


@dataclass
class ClassificationReport:
    is_eulerian: bool
    satisfies_relation5: bool
    in_odd_subalgebra: bool
    is_odd_clutter: bool
    nerve_is_flag: bool
    intersection_graph_chordal: bool
    satisfies_star: bool
    odd_partition_property: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def implications(self) -> dict[str, bool]:
        """Theorem implications evaluated on this instance; all must hold."""
        odd_chordal_flag = self.is_odd_clutter and self.intersection_graph_chordal and self.nerve_is_flag
        return {
            "clique": not odd_chordal_flag or self.is_eulerian,
            "converse": not (self.is_eulerian and self.satisfies_star) or odd_chordal_flag,
            "coincide": not self.odd_partition_property or self.is_eulerian,
            "prop": not self.is_eulerian or (self.satisfies_relation5 and self.in_odd_subalgebra),
        }

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in FLAG_NAMES}

    def to_json(self) -> dict:
        out = dict(self.flags())
        out["implications"] = self.implications
        out["witnesses"] = {k: self.witnesses[k] for k in sorted(self.witnesses)}
        return out


def _edges_of(C: Hypergraph, indices) -> list[list[int]]:
    return [list(members(C.edges[i])) for i in indices]


def classify(C: Hypergraph) -> ClassificationReport:
    if not isinstance(C, Clutter):
        C = Clutter(C.n, C.edges)
    results = {}
    results["is_eulerian"] = is_eulerian(C)
    results["satisfies_relation5"] = check_relation5(C)
    results["in_odd_subalgebra"] = in_odd_subalgebra(C)
    results["is_odd_clutter"] = is_odd_clutter(C)
    flag, nonface = is_flag(nerve(C))
    results["nerve_is_flag"] = (flag, None if flag else _edges_of(C, nonface))
    chordal, cycle = is_chordal(intersection_graph(C))
    results["intersection_graph_chordal"] = (chordal, None if chordal else _edges_of(C, cycle))
    results["satisfies_star"] = satisfies_star(C)
    results["odd_partition_property"] = odd_partition_property(C)
    witnesses = {name: w for name, (ok, w) in results.items() if not ok}
    return ClassificationReport(**{name: ok for name, (ok, _) in results.items()}, witnesses=witnesses)


__all__ = [
    "is_eulerian", "is_eulerian_hypergraph_via_clutter", "check_relation5", "relation5_sums",
    "in_odd_subalgebra", "odd_subalgebra_defect", "is_odd_clutter", "satisfies_star",
    "odd_partition_property", "classify", "ClassificationReport", "FLAG_NAMES",
]

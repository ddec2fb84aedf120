"""Exhaustive and sampled verification of the structural theorems on small clutters."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .euler import classify, is_eulerian
from .setfam import BoundError, Clutter, Hypergraph, canonical_code, from_code, minimal_edges, popcount
from .symfun import is_odd_sym, psi_powersum

CHECKS = ("prop", "hc", "clique", "converse", "coincide", "odd-psi")
MAX_EXHAUSTIVE_VERTICES = 5
MAX_SAMPLE_VERTICES = 8
MAX_HC_VERTICES = 4


def labeled_clutters(n: int):
    """Every clutter on 0..n-1 with edges of size at least two."""
    candidates = sorted((m for m in range(1 << n) if popcount(m) >= 2),
                        key=lambda m: (popcount(m), m))

    def extend(start, chosen):
        yield tuple(chosen)
        for idx in range(start, len(candidates)):
            c = candidates[idx]
            # candidates come in size order: only a chosen edge can sit inside c
            if any(e & c == e for e in chosen):
                continue
            chosen.append(c)
            yield from extend(idx + 1, chosen)
            chosen.pop()

    yield from extend(0, [])


def clutter_classes(n: int) -> list[tuple]:
    """Canonical codes of all clutter isomorphism classes on n vertices, sorted."""
    return sorted({canonical_code(Clutter(n, edges)) for edges in labeled_clutters(n)})


def grown_clutter_classes(n: int) -> list[tuple]:
    """Clutter classes on n vertices found by adding one incomparable edge at a time.

    Every antichain with k + 1 edges extends one with k edges, so growing
    class representatives level by level reaches every class without
    listing labeled clutters.  Practical up to n = 6 (16143 classes).
    """
    if n > MAX_SAMPLE_VERTICES - 2:
        raise BoundError(f"class growth supports at most {MAX_SAMPLE_VERTICES - 2} vertices")
    candidates = [m for m in range(1 << n) if popcount(m) >= 2]
    level = {canonical_code(Clutter(n))}
    seen = set(level)
    while level:
        nxt = set()
        for code in level:
            edges = from_code(code).edges
            for c in candidates:
                if not any(e & c == e or e & c == c for e in edges):
                    nxt.add(canonical_code(Clutter(n, edges + (c,))))
        level = nxt - seen
        seen |= level
    return sorted(seen)


def hypergraph_classes(n: int) -> list[tuple]:
    """Canonical codes of all hypergraph isomorphism classes on n vertices."""
    candidates = [m for m in range(1 << n) if popcount(m) >= 2]
    codes = set()
    for bits in range(1 << len(candidates)):
        edges = tuple(c for i, c in enumerate(candidates) if bits >> i & 1)
        codes.add(canonical_code(Hypergraph(n, edges)))
    return sorted(codes)


def random_clutter(n: int, rng: random.Random, max_edges: int = 8) -> Clutter:
    edges = set()
    if n < 2:
        return Clutter(n)
    for _ in range(rng.randint(0, max_edges)):
        size = rng.randint(2, n)
        edges.add(sum(1 << v for v in rng.sample(range(n), size)))
    return minimal_edges(Hypergraph(n, tuple(edges)))


def check_clutter(code) -> dict:
    """Flags and violated checks for one clutter class."""
    H = from_code(code)
    C = Clutter(H.n, H.edges)
    report = classify(C)
    flags = report.flags()
    failed = [name for name, ok in report.implications.items() if not ok]
    odd_psi = True
    if report.is_eulerian:
        odd_psi = is_odd_sym(psi_powersum(C))
        if not odd_psi:
            failed.append("odd-psi")
    return {"code": code, "flags": flags, "failed": failed, "odd_psi": odd_psi}


def check_hypergraph(code) -> dict:
    H = from_code(code)
    direct = is_eulerian(H)[0]
    via = is_eulerian(minimal_edges(H))[0]
    return {"code": code, "failed": [] if direct == via else ["hc"]}


@dataclass
class VerificationReport:
    max_vertices: int
    mode: str
    checks: tuple[str, ...]
    per_n: dict = field(default_factory=dict)
    hypergraphs_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def total(self, key: str) -> int:
        return sum(row[key] for row in self.per_n.values())

    def to_json(self) -> dict:
        return {
            "max_vertices": self.max_vertices,
            "mode": self.mode,
            "checks": list(self.checks),
            "per_n": {str(n): self.per_n[n] for n in sorted(self.per_n)},
            "totals": {key: self.total(key) for key in ("clutters", "eulerian", "gds_not_eulerian",
                                                        "odd_subalgebra_not_eulerian")},
            "hypergraphs_checked": self.hypergraphs_checked,
            "violations": self.violations,
        }


def _map(fn, items, workers: int):
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=16))


def run_verification(max_vertices: int, checks=CHECKS, sample: int = 0, seed: int = 0,
                     workers: int = 1, hc_max_vertices: int = MAX_HC_VERTICES) -> VerificationReport:
    """Check every requested theorem implication over clutters on at most ``max_vertices``.

    With ``sample == 0`` all isomorphism classes are visited (``max_vertices``
    at most 5).  Otherwise each n in 0..max_vertices contributes ``sample``
    random clutters drawn from ``seed``.
    """
    checks = tuple(checks)
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}; choose from {CHECKS}")
    if sample == 0 and max_vertices > MAX_EXHAUSTIVE_VERTICES:
        raise BoundError(f"exhaustive mode supports at most {MAX_EXHAUSTIVE_VERTICES} vertices; use sampling")
    if max_vertices > MAX_SAMPLE_VERTICES:
        raise BoundError(f"at most {MAX_SAMPLE_VERTICES} vertices supported")

    report = VerificationReport(max_vertices, "sample" if sample else "exhaustive", checks)
    rng = random.Random(seed)
    clutter_checks = set(checks) - {"hc"}
    for n in range(max_vertices + 1):
        if sample:
            codes = sorted({canonical_code(random_clutter(n, rng)) for _ in range(sample)})
        else:
            codes = clutter_classes(n)
        row = {"clutters": len(codes), "eulerian": 0, "gds_not_eulerian": 0,
               "odd_subalgebra_not_eulerian": 0}
        if clutter_checks:
            for res in _map(check_clutter, codes, workers):
                flags = res["flags"]
                row["eulerian"] += flags["is_eulerian"]
                if not flags["is_eulerian"]:
                    row["gds_not_eulerian"] += flags["satisfies_relation5"]
                    row["odd_subalgebra_not_eulerian"] += flags["in_odd_subalgebra"]
                for name in res["failed"]:
                    if name in clutter_checks:
                        report.violations.append({"check": name, "instance": from_code(res["code"]).to_json()})
        report.per_n[n] = row

    if "hc" in checks:
        for n in range(min(max_vertices, hc_max_vertices) + 1):
            codes = hypergraph_classes(n)
            report.hypergraphs_checked += len(codes)
            for res in _map(check_hypergraph, codes, workers):
                if res["failed"]:
                    report.violations.append({"check": "hc", "instance": from_code(res["code"]).to_json()})
    return report

"""Hopf algebra of hypergraphs: coproducts, characters and antipodes.

Elements of the k-fold tensor power are :class:`LinearCombo` objects keyed by
tuples of canonical codes, so isomorphic terms are collected together.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .setfam import (
    EMPTY,
    BoundError,
    Clutter,
    Hypergraph,
    canonical_code,
    connected_components,
    contract,
    delete,
    disjoint_sum,
    edge_key,
    from_code,
    minimal_edges,
    popcount,
    restrict,
    submasks,
)

MAX_ANTIPODE_VERTICES = 8
MAX_SUBSET_DP_VERTICES = 12

ZETA_INVERSE_METHODS = ("deletion-contraction", "takeuchi-sum", "antipode-then-zeta", "subset-dp")


# ---------------------------------------------------------------------------
# linear combinations of tensor words
# ---------------------------------------------------------------------------

@dataclass
class LinearCombo:
    """Integer combination of k-fold tensors of hypergraph isomorphism classes."""

    k: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        for key, c in list(self.terms.items()):
            if len(key) != self.k:
                raise ValueError(f"tensor {key!r} does not have arity {self.k}")
            if c == 0:
                del self.terms[key]

    @classmethod
    def collect(cls, k: int, pairs) -> "LinearCombo":
        acc: dict = defaultdict(int)
        for key, c in pairs:
            acc[key] += c
        return cls(k, {key: c for key, c in acc.items() if c})

    def coefficient(self, *codes) -> int:
        return self.terms.get(tuple(codes), 0)

    def mass(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, LinearCombo):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __add__(self, other: "LinearCombo") -> "LinearCombo":
        if self.k != other.k:
            raise ValueError("arity mismatch")
        return LinearCombo.collect(self.k, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return LinearCombo(self.k, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "LinearCombo":
        return LinearCombo(self.k, {key: c * v for key, v in self.terms.items()})

    def items(self):
        return sorted(self.terms.items())

    def to_json(self) -> list[dict]:
        return [
            {"coefficient": c, "tensor": [from_code(code).to_json() for code in key]}
            for key, c in self.items()
        ]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.items():
            word = " ⊗ ".join(f"{from_code(code)!r}" for code in key)
            parts.append(f"{c:+d}·[{word}]")
        return " ".join(parts)


def element(H: Hypergraph) -> LinearCombo:
    """H as a degree-one linear combination."""
    return LinearCombo(1, {(canonical_code(H),): 1})


# ---------------------------------------------------------------------------
# coproducts
# ---------------------------------------------------------------------------

def _ordered_decompositions(mask: int, k: int):
    """Ordered k-tuples of disjoint (possibly empty) masks covering ``mask``."""
    if k == 1:
        yield (mask,)
        return
    for first in submasks(mask):
        for rest in _ordered_decompositions(mask & ~first, k - 1):
            yield (first,) + rest


def iterated_coproduct(H: Hypergraph, k: int) -> LinearCombo:
    """Sum over ordered decompositions V = I_1 ⊔ ... ⊔ I_k of ⊗ H|_{I_j}."""
    if k < 1:
        raise ValueError("tensor arity must be at least 1")
    codes: dict[int, tuple] = {}

    def code(mask):
        if mask not in codes:
            codes[mask] = canonical_code(restrict(H, mask))
        return codes[mask]

    pairs = ((tuple(code(m) for m in blocks), 1)
             for blocks in _ordered_decompositions(H.vertex_mask, k))
    return LinearCombo.collect(k, pairs)


def coproduct(H: Hypergraph) -> LinearCombo:
    return iterated_coproduct(H, 2)


# ---------------------------------------------------------------------------
# independence and composition counts
# ---------------------------------------------------------------------------

def independence_table(H: Hypergraph) -> list[bool]:
    """``table[I]`` is True iff H|_I is discrete, for every vertex mask I."""
    size = 1 << H.n
    dependent = [False] * size
    for e in H.edges:
        dependent[e] = True
    for v in range(H.n):
        bit = 1 << v
        for m in range(size):
            if m & bit and dependent[m ^ bit]:
                dependent[m] = True
    return [not d for d in dependent]


def _check_composition(H: Hypergraph, alpha) -> tuple[int, ...]:
    alpha = tuple(alpha)
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition {alpha} has a non-positive part")
    if sum(alpha) != H.n:
        raise ValueError(f"composition {alpha} does not sum to {H.n}")
    return alpha


def _independent_by_size(H: Hypergraph, indep=None) -> list[list[int]]:
    if indep is None:
        indep = independence_table(H)
    by_size: list[list[int]] = [[] for _ in range(H.n + 1)]
    for m, ok in enumerate(indep):
        if ok:
            by_size[popcount(m)].append(m)
    return by_size


def zeta_alpha(H: Hypergraph, alpha) -> int:
    """Number of ordered decompositions into discrete blocks of sizes ``alpha``."""
    alpha = _check_composition(H, alpha)
    by_size = _independent_by_size(H)
    states = {0: 1}
    for a in alpha:
        nxt: dict[int, int] = defaultdict(int)
        for used, cnt in states.items():
            for block in by_size[a]:
                if not block & used:
                    nxt[used | block] += cnt
        states = nxt
    return states.get(H.vertex_mask, 0)


def zeta_alpha_table(H: Hypergraph) -> dict[tuple[int, ...], int]:
    """ζ_α(H) for every composition α of n, including zeros.

    Compositions are grown part by part and share their prefix states.
    """
    by_size = _independent_by_size(H)
    full = H.vertex_mask
    out: dict[tuple[int, ...], int] = {}

    def grow(prefix, states, remaining):
        if remaining == 0:
            out[prefix] = states.get(full, 0)
            return
        for a in range(1, remaining + 1):
            nxt: dict[int, int] = defaultdict(int)
            for used, cnt in states.items():
                for block in by_size[a]:
                    if not block & used:
                        nxt[used | block] += cnt
            grow(prefix + (a,), nxt, remaining - a)

    grow((), {0: 1}, H.n)
    return out


def ordered_block_counts(H: Hypergraph) -> list[int]:
    """``c[k]`` = number of ordered decompositions into k nonempty discrete blocks."""
    indep = independence_table(H)
    n = H.n
    # unordered partitions into independent blocks, by block count, via the
    # block containing the lowest remaining vertex
    memo: dict[int, list[int]] = {0: [1] + [0] * n}

    def count(mask):
        if mask in memo:
            return memo[mask]
        low = mask & -mask
        rest = mask ^ low
        acc = [0] * (n + 1)
        for sub in submasks(rest):
            block = sub | low
            if indep[block]:
                for k, c in enumerate(count(mask ^ block)):
                    if c:
                        acc[k + 1] += c
        memo[mask] = acc
        return acc

    unordered = count(H.vertex_mask)
    fact = 1
    out = []
    for k, c in enumerate(unordered):
        if k:
            fact *= k
        out.append(c * fact)
    return out


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """A multiplicative functional, evaluated on hypergraphs."""

    name: str
    rule: Callable[[Hypergraph], int]

    def __call__(self, H: Hypergraph) -> int:
        return self.rule(H)

    def on_code(self, code) -> int:
        return self.rule(from_code(code))

    def on_combo(self, x: LinearCombo) -> int:
        """Apply the character to every tensor factor and multiply."""
        total = 0
        for key, c in x.terms.items():
            v = c
            for code in key:
                v *= self.on_code(code)
                if not v:
                    break
            total += v
        return total


def convolve(phi: Character, psi: Character) -> Character:
    """(φψ)(H) = Σ_I φ(H|_I) ψ(H|_{V∖I})."""

    def rule(H):
        full = H.vertex_mask
        return sum(phi(restrict(H, I)) * psi(restrict(H, full & ~I)) for I in submasks(full))

    return Character(f"{phi.name}*{psi.name}", rule)


def character_power(phi: Character, m: int) -> Character:
    """φ^m for m ≥ 0 by repeated convolution (φ^0 = ε)."""
    if m < 0:
        raise ValueError("use zeta_inverse for negative powers")
    out = COUNIT
    for _ in range(m):
        out = convolve(out, phi)
    return out


ZETA = Character("zeta", lambda H: 1 if not H.edges else 0)
ZETA_BAR = Character("zeta_bar", lambda H: (-1) ** H.n if not H.edges else 0)
COUNIT = Character("counit", lambda H: 1 if H.n == 0 else 0)


def euler_character(H: Hypergraph) -> int:
    """χ(H) = (ζ̄ζ)(H): signed count of splittings into two discrete halves."""
    indep = independence_table(H)
    full = H.vertex_mask
    return sum((-1) ** popcount(I) for I in submasks(full) if indep[I] and indep[full ^ I])


# ---------------------------------------------------------------------------
# antipode
# ---------------------------------------------------------------------------

def _check_antipode_bound(H: Hypergraph):
    if H.n > MAX_ANTIPODE_VERTICES:
        raise BoundError(f"antipode supports at most {MAX_ANTIPODE_VERTICES} vertices, got {H.n}")


def antipode_takeuchi(H: Hypergraph) -> LinearCombo:
    """Signed sum over ordered decompositions of V into nonempty blocks.

    Each term H|_{I_1} ⊔ ... ⊔ H|_{I_k} is the hypergraph on V keeping the
    edges that lie inside a single block; it is tracked as a bitmask over the
    edge indices of H until the final canonicalization.
    """
    _check_antipode_bound(H)
    if H.n == 0:
        return element(EMPTY)
    edges = H.edges
    inside = {}

    def edges_within(block):
        if block not in inside:
            acc = 0
            for i, e in enumerate(edges):
                if e & block == e:
                    acc |= 1 << i
            inside[block] = acc
        return inside[block]

    @lru_cache(maxsize=None)
    def signed(mask) -> dict:
        # Σ over ordered decompositions of ``mask``: (-1)^k [edge subset]
        if mask == 0:
            return {0: 1}
        acc: dict[int, int] = defaultdict(int)
        for first in submasks(mask):
            if not first:
                continue
            kept = edges_within(first)
            for sub, c in signed(mask & ~first).items():
                acc[kept | sub] -= c
        return dict(acc)

    pairs = []
    for sub, c in signed(H.vertex_mask).items():
        chosen = tuple(e for i, e in enumerate(edges) if sub >> i & 1)
        pairs.append(((canonical_code(Hypergraph(H.n, chosen)),), c))
    return LinearCombo.collect(1, pairs)


@lru_cache(maxsize=1 << 16)
def _product_code(a, b):
    return canonical_code(disjoint_sum(from_code(a), from_code(b)))


@lru_cache(maxsize=1 << 14)
def _antipode_of_code(code) -> tuple:
    H = from_code(code)
    if H.n == 0:
        return ((code, 1),)
    acc: dict = defaultdict(int)
    acc[code] -= 1
    full = H.vertex_mask
    for I in submasks(full):
        if I == 0 or I == full:
            continue
        left = canonical_code(restrict(H, I))
        for term, c in _antipode_of_code(canonical_code(restrict(H, full & ~I))):
            acc[_product_code(left, term)] -= c
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def antipode_recursive(H: Hypergraph) -> LinearCombo:
    """S(H) = -H - Σ_{∅≠I⊊V} H|_I · S(H|_{V∖I}), memoized on isomorphism classes."""
    _check_antipode_bound(H)
    return LinearCombo(1, {(k,): v for k, v in _antipode_of_code(canonical_code(H))})


def antipode(H: Hypergraph, method: str = "recursive") -> LinearCombo:
    if method == "recursive":
        return antipode_recursive(H)
    if method == "takeuchi":
        return antipode_takeuchi(H)
    raise ValueError(f"unknown antipode method {method!r}")


def convolution_identity(H: Hypergraph, method: str = "recursive") -> LinearCombo:
    """m∘(S⊗id)∘Δ(H), collected on isomorphism classes; should equal ε(H)·H_∅."""
    acc: dict = defaultdict(int)
    full = H.vertex_mask
    for I in submasks(full):
        right = canonical_code(restrict(H, full & ~I))
        for (term,), c in antipode(restrict(H, I), method).terms.items():
            acc[(_product_code(term, right),)] += c
    return LinearCombo.collect(1, acc.items())


# ---------------------------------------------------------------------------
# Möbius character
# ---------------------------------------------------------------------------

def zeta_inverse_table(H: Hypergraph) -> list[int]:
    """ζ⁻¹(H|_I) for every vertex mask I, bottom-up over the subset lattice.

    Uses Σ_{A⊆I} ζ(H|_A) ζ⁻¹(H|_{I∖A}) = ε(H|_I).
    """
    if H.n > MAX_SUBSET_DP_VERTICES:
        raise BoundError(f"subset DP supports at most {MAX_SUBSET_DP_VERTICES} vertices, got {H.n}")
    indep = independence_table(H)
    f = [0] * (1 << H.n)
    f[0] = 1
    for mask in range(1, 1 << H.n):
        total = 0
        for A in submasks(mask):
            if A and indep[A]:
                total += f[mask ^ A]
        f[mask] = -total
    return f


def _dc_pick(C) -> int:
    """Lexicographically smallest edge of maximum size."""
    top = max(popcount(e) for e in C.edges)
    return min((e for e in C.edges if popcount(e) == top), key=edge_key)


@lru_cache(maxsize=1 << 16)
def _zinv_dc(n: int, edges: tuple[int, ...]) -> int:
    if not edges:
        return (-1) ** n
    C = Clutter(n, edges)
    comps = connected_components(C)
    if len(comps) > 1:
        out = 1
        for comp in comps:
            part = restrict(C, comp)
            out *= _zinv_dc(part.n, part.edges)
            if not out:
                break
        return out
    e = _dc_pick(C)
    d = delete(C, e)
    q = contract(C, e)
    return _zinv_dc(d.n, d.edges) - _zinv_dc(q.n, q.edges)


def zeta_inverse(H: Hypergraph, method: str = "deletion-contraction") -> int:
    """Möbius character ζ⁻¹(H) = χ(H, -1)."""
    if method == "deletion-contraction":
        C = minimal_edges(H)
        return _zinv_dc(C.n, C.edges)
    if method == "takeuchi-sum":
        return sum((-1) ** len(alpha) * z for alpha, z in zeta_alpha_table(H).items())
    if method == "antipode-then-zeta":
        return ZETA.on_combo(antipode_recursive(H))
    if method == "subset-dp":
        return zeta_inverse_table(H)[H.vertex_mask]
    raise ValueError(f"unknown method {method!r}; expected one of {ZETA_INVERSE_METHODS}")


ZETA_INVERSE = Character("zeta_inverse", zeta_inverse)


__all__ = [
    "LinearCombo", "Character", "ZETA", "ZETA_BAR", "COUNIT", "ZETA_INVERSE",
    "element", "coproduct", "iterated_coproduct", "zeta_alpha", "zeta_alpha_table",
    "ordered_block_counts", "independence_table", "antipode_takeuchi",
    "antipode_recursive", "antipode", "convolution_identity", "zeta_inverse",
    "zeta_inverse_table", "euler_character", "convolve", "character_power",
]

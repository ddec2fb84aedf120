"""Quasisymmetric and symmetric functions with integer coefficients.

QSym elements are expanded in the monomial basis M_α (keys are compositions),
Sym elements in the power-sum basis p_λ (keys are partitions, descending).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable

from .hopf import ordered_block_counts, zeta_alpha_table
from .setfam import BoundError, Hypergraph, connected_components, minimal_edges, popcount

MAX_POWERSUM_EDGES = 20


class _IntCombination:
    """Mapping from basis keys to nonzero integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        acc: dict = defaultdict(int)
        for key, c in dict(coeffs or {}).items():
            acc[self._normalize(key)] += c
        self.coeffs = {k: v for k, v in acc.items() if v}

    @staticmethod
    def _normalize(key):
        return tuple(key)

    def __getitem__(self, key):
        return self.coeffs.get(self._normalize(key), 0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        acc = Counter(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] += v
        return type(self)(acc)

    def __neg__(self):
        return type(self)({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c: int):
        return type(self)({k: c * v for k, v in self.coeffs.items()})

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.coeffs}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        sym = self._symbol
        return " ".join(f"{v:+d}·{sym}{list(k)}" for k, v in self.items())


class QSymElement(_IntCombination):
    _symbol = "M"

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return qsym_multiply(self, other)

    def to_json(self) -> list[dict]:
        return [{"composition": list(k), "coeff": v} for k, v in self.items()]


class SymElement(_IntCombination):
    _symbol = "p"

    @staticmethod
    def _normalize(key):
        return tuple(sorted(key, reverse=True))

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        acc: Counter = Counter()
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                acc[self._normalize(a + b)] += x * y
        return SymElement(acc)

    def items(self):
        # reverse lexicographic: (n) first, (1^n) last
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), [-p for p in kv[0]]))

    def to_json(self) -> list[dict]:
        return [{"partition": list(k), "coeff": v} for k, v in self.items()]


def M(*alpha) -> QSymElement:
    return QSymElement({tuple(alpha): 1})


def p(*lam) -> SymElement:
    return SymElement({tuple(lam): 1})


QSYM_ONE = M()
SYM_ONE = p()


# ---------------------------------------------------------------------------
# compositions and partitions
# ---------------------------------------------------------------------------

def compositions(n: int):
    """All compositions of n, lexicographic."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def partitions(n: int, largest: int | None = None):
    """Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n)."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def quasi_shuffle(a: tuple, b: tuple) -> tuple:
    """Overlapping shuffles of two compositions, as (composition, multiplicity) pairs."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: Counter = Counter()
    for comp, c in quasi_shuffle(a[1:], b):
        acc[(a[0],) + comp] += c
    for comp, c in quasi_shuffle(a, b[1:]):
        acc[(b[0],) + comp] += c
    for comp, c in quasi_shuffle(a[1:], b[1:]):
        acc[(a[0] + b[0],) + comp] += c
    return tuple(sorted(acc.items()))


def qsym_multiply(f: QSymElement, g: QSymElement) -> QSymElement:
    acc: Counter = Counter()
    for a, x in f.coeffs.items():
        for b, y in g.coeffs.items():
            for comp, c in quasi_shuffle(a, b):
                acc[comp] += x * y * c
    return QSymElement(acc)


@lru_cache(maxsize=None)
def _powersum_monomial(lam: tuple) -> QSymElement:
    out = QSYM_ONE
    for part in lam:
        out = qsym_multiply(out, M(part))
    return out


def powersum_to_monomial(f: SymElement, n: int | None = None) -> QSymElement:
    """Monomial expansion using p_k = M_(k) and the quasi-shuffle product."""
    degs = f.degrees()
    if len(degs) > 1:
        raise ValueError(f"element is not homogeneous (degrees {sorted(degs)})")
    if n is not None and degs and degs != {n}:
        raise ValueError(f"element has degree {degs.pop()}, expected {n}")
    out = QSymElement()
    for lam, c in f.coeffs.items():
        out = out + c * _powersum_monomial(lam)
    return out


# ---------------------------------------------------------------------------
# the canonical morphism
# ---------------------------------------------------------------------------

def psi(H: Hypergraph, method: str = "auto") -> QSymElement:
    """Ψ(H) = Σ_α ζ_α(H) M_α.

    ``method="subsets"`` counts decompositions directly; ``"powersum"`` goes
    through the subclutter expansion of the minimal-edge clutter.  ``"auto"``
    uses the power-sum route when the clutter has few edges.
    """
    if method == "auto":
        method = "powersum" if len(minimal_edges(H).edges) <= 14 else "subsets"
    if method == "subsets":
        return QSymElement(zeta_alpha_table(H))
    if method == "powersum":
        return powersum_to_monomial(psi_powersum(minimal_edges(H)), H.n)
    raise ValueError(f"unknown method {method!r}")


def subclutter_partitions(C: Hypergraph):
    """Yield (edge-index mask, λ(S)) for every subclutter S ⊆ C.

    λ(S) lists the component sizes of S on the full vertex set.
    """
    m = len(C.edges)
    if m > MAX_POWERSUM_EDGES:
        raise BoundError(f"subclutter enumeration supports at most {MAX_POWERSUM_EDGES} edges, got {m}")
    edges = C.edges

    def walk(i, chosen, comps):
        if i == m:
            sizes = [popcount(c) for c in comps]
            covered = 0
            for c in comps:
                covered |= c
            sizes += [1] * (C.n - popcount(covered))
            yield chosen, tuple(sorted(sizes, reverse=True))
            return
        yield from walk(i + 1, chosen, comps)
        e = edges[i]
        merged = e
        rest = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                rest.append(c)
        yield from walk(i + 1, chosen | 1 << i, rest + [merged])

    yield from walk(0, 0, [])


def psi_powersum(C: Hypergraph) -> SymElement:
    """Ψ(C) = Σ_{S ⊆ C} (-1)^{|S|} p_{λ(S)}."""
    acc: Counter = Counter()
    for chosen, lam in subclutter_partitions(C):
        acc[lam] += -1 if popcount(chosen) & 1 else 1
    return SymElement(acc)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class IntPolynomial:
    """Integer polynomial in one variable; ``coeffs[i]`` multiplies m**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    def __call__(self, m: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * m + c
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == IntPolynomial(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                terms.append(f"{c:+d}" + ("" if i == 0 else "m" if i == 1 else f"m^{i}"))
        return "IntPolynomial(" + (" ".join(terms) or "0") + ")"


def _falling_factorial_coeffs(k: int) -> list[int]:
    """Coefficients of m(m-1)...(m-k+1), constant term first."""
    poly = [1]
    for j in range(k):
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= j * c
        poly = nxt
    return poly


def binomial_expansion(counts: list[int]) -> IntPolynomial:
    """Σ_k counts[k]·binom(m, k) as an integer polynomial in m."""
    acc = [Fraction(0)] * (len(counts) + 1)
    for k, c in enumerate(counts):
        if not c:
            continue
        scale = Fraction(c, factorial(k))
        for i, a in enumerate(_falling_factorial_coeffs(k)):
            acc[i] += scale * a
    for i, a in enumerate(acc):
        if a.denominator != 1:
            raise ArithmeticError(f"non-integer coefficient {a} of m^{i}")
    return IntPolynomial(int(a) for a in acc)


def chromatic_polynomial(H: Hypergraph) -> IntPolynomial:
    """χ(H, m) = Σ_k c_k binom(m, k), c_k the ordered decompositions into k discrete blocks."""
    return binomial_expansion(ordered_block_counts(H))


def eval_chromatic(H: Hypergraph, m: int) -> int:
    return chromatic_polynomial(H)(m)


def principal_specialization(f: QSymElement, m: int) -> int:
    """f(1^m), using M_α(1^m) = binom(m, k(α))."""
    if len(f.degrees()) > 1:
        raise ValueError("element is not homogeneous")
    total = 0
    for alpha, c in f.coeffs.items():
        k = len(alpha)
        total += c * (comb(m, k) if m >= 0 else _binom_poly(m, k))
    return total


def _binom_poly(m: int, k: int) -> int:
    num = 1
    for j in range(k):
        num *= m - j
    return num // factorial(k)


# ---------------------------------------------------------------------------
# the D_λ basis
# ---------------------------------------------------------------------------

def d_lambda_psi(lam) -> SymElement:
    """Ψ(D_λ) = Π_{λ_i > 1} (p_{1^{λ_i}} - p_{λ_i}) · p_1^{#{λ_i = 1}}."""
    out = SYM_ONE
    for part in lam:
        if part < 1:
            raise ValueError("partition parts must be positive")
        if part == 1:
            out = out * p(1)
        else:
            out = out * (p(*[1] * part) - p(part))
    return out


def transition_matrix(n: int) -> tuple[list[tuple[int, ...]], list[list[int]]]:
    """Matrix of Ψ(D_λ) in the p-basis; rows and columns in reverse lexicographic order."""
    if n > 12:
        raise BoundError("transition matrix supports degrees up to 12")
    index = list(partitions(n))
    rows = []
    for lam in index:
        f = d_lambda_psi(lam)
        rows.append([f[mu] for mu in index])
    return index, rows


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def is_odd_sym(f: SymElement) -> bool:
    """Whether f lies in span{p_λ : all parts of λ odd}."""
    return all(part % 2 for lam in f.coeffs for part in lam)


def hypergraph_lambda(C: Hypergraph, chosen: int) -> tuple[int, ...]:
    """λ(S) for the subclutter selected by an edge-index mask."""
    S = Hypergraph(C.n, tuple(e for i, e in enumerate(C.edges) if chosen >> i & 1))
    return tuple(sorted((popcount(c) for c in connected_components(S)), reverse=True))


__all__ = [
    "QSymElement", "SymElement", "IntPolynomial", "M", "p", "compositions", "partitions",
    "quasi_shuffle", "qsym_multiply", "powersum_to_monomial", "psi", "psi_powersum",
    "subclutter_partitions", "chromatic_polynomial", "eval_chromatic",
    "principal_specialization", "d_lambda_psi", "transition_matrix", "is_odd_sym",
    "binomial_expansion", "matmul",
]

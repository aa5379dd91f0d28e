"""PBW normal words, Hilbert series coefficients and the GK-dimension readout."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb

from .freealg import Generator, NCPoly, Word, generators, word_key
from .gsb import Reducer
from .linalg import rank
from .qlaurent import ZERO
from .quantum_matrix import RelationSet

__all__ = [
    "PBWWord",
    "HilbertData",
    "PatternCheck",
    "is_normal",
    "enumerate_normal",
    "hilbert",
    "hilbert_closed_form",
    "cumulative",
    "gk_dimension_readout",
    "check_pattern_hypothesis",
    "single_index_labels",
    "reduced_span_rank",
    "quotient_dimension_bruteforce",
]


@dataclass(frozen=True)
class PBWWord:
    """A multiset of generators, written in descending order (``Z[n,n]`` first)."""

    word: Word

    @classmethod
    def from_exponents(cls, exponents: dict) -> "PBWWord":
        letters = []
        for g in sorted(exponents, reverse=True):
            k = exponents[g]
            if k < 0:
                raise ValueError("exponents must be nonnegative")
            letters.extend([Generator(*g)] * k)
        return cls(tuple(letters))

    @property
    def exponents(self) -> dict[Generator, int]:
        return dict(Counter(self.word))

    @property
    def degree(self) -> int:
        return len(self.word)

    def as_poly(self) -> NCPoly:
        return NCPoly.word(self.word)

    def __str__(self) -> str:
        if not self.word:
            return "1"
        parts = []
        for g in sorted(self.exponents, reverse=True):
            k = self.exponents[g]
            parts.append(str(g) if k == 1 else f"{g}^{k}")
        return "*".join(parts)


@dataclass(frozen=True)
class HilbertData:
    n: int
    coefficients: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class PatternCheck:
    holds: bool
    witness: tuple[Generator, ...] | None
    reason: str = ""

    def matches_generator_order(self) -> bool:
        """True when the witness is the row-major generator order itself."""
        return self.witness is not None and list(self.witness) == sorted(self.witness)


def is_normal(w: Word) -> bool:
    """No adjacent pair ``x y`` with ``x < y``; equal neighbours are fine."""
    return all(w[k] >= w[k + 1] for k in range(len(w) - 1))


def enumerate_normal(n: int, d: int) -> list[PBWWord]:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    desc = sorted(generators(n), reverse=True)
    return [PBWWord(w) for w in combinations_with_replacement(desc, d)]


def hilbert(n: int, D: int) -> HilbertData:
    if D < 0:
        raise ValueError("max degree must be nonnegative")
    return HilbertData(n, tuple(len(enumerate_normal(n, d)) for d in range(D + 1)))


def hilbert_closed_form(n: int, D: int) -> list[int]:
    """Coefficients of ``1/(1-t)^(n^2)`` up to ``t^D``."""
    return [comb(n * n + d - 1, d) for d in range(D + 1)]


def cumulative(coefficients) -> list[int]:
    out, total = [], 0
    for c in coefficients:
        total += c
        out.append(total)
    return out


def gk_dimension_readout(n: int, D: int) -> int:
    """Degree of the polynomial growth of ``d -> dim(A_0 + ... + A_d)``.

    Sampled cumulative dimensions must equal ``C(n^2 + d, n^2)`` exactly.
    The degree is read from finite differences: the first order at which
    the differences become constant and nonzero.
    """
    N = n * n
    if D < N + 1:
        raise ValueError(f"need D >= {N + 1} sample degrees to pin down the growth degree")
    cum = cumulative(hilbert(n, D).coefficients)
    for d, value in enumerate(cum):
        if value != comb(N + d, N):
            raise AssertionError(f"cumulative dimension {value} at degree {d}, expected {comb(N + d, N)}")
    diffs = cum
    for r in range(len(cum)):
        nxt = [b - a for a, b in zip(diffs, diffs[1:])]
        if nxt and all(x == 0 for x in nxt) and any(diffs):
            return r
        diffs = nxt
    raise AssertionError("not enough samples to determine the growth degree")


def single_index_labels(n: int) -> list[Generator]:
    """``z_1, ..., z_{n^2}``: ``z_m`` is the m-th largest generator, so ``z_1 = Z[n,n]``."""
    return sorted(generators(n), reverse=True)


def check_pattern_hypothesis(S: RelationSet) -> PatternCheck:
    """Are the leading words exactly the pairs ``x y`` with ``x < y`` for some total order?

    Reversing a witness handles the other orientation (all ``x y`` with
    ``x > y``), so one search covers both. The witness lists the generators
    in increasing order.
    """
    gens = generators(S.n)
    lead = {r.leading_word for r in S.relations}
    if any(len(w) != 2 for w in lead):
        return PatternCheck(False, None, "a leading word is not quadratic")
    if any(w[0] == w[1] for w in lead):
        return PatternCheck(False, None, "a leading word is a square")
    # a tournament: exactly one orientation of every unordered pair
    for a, b in combinations_with_replacement(gens, 2):
        if a != b and ((a, b) in lead) == ((b, a) in lead):
            how = "in both orders" if (a, b) in lead else "in neither order"
            return PatternCheck(False, None, f"pair {a}, {b} is a leading word {how}")
    # transitive iff the out-degrees are a permutation of 0..N-1
    out_degree = {g: sum(1 for h in gens if (g, h) in lead) for g in gens}
    if sorted(out_degree.values()) != list(range(len(gens))):
        return PatternCheck(False, None, "leading pairs contain a cycle")
    witness = tuple(sorted(gens, key=lambda g: -out_degree[g]))
    expected = {(x, y) for k, x in enumerate(witness) for y in witness[k + 1:]}
    if expected != lead:
        return PatternCheck(False, None, "inconsistent with the induced order")
    return PatternCheck(True, witness)


def _matrix(polys: list[NCPoly]) -> tuple[list[list], list[Word]]:
    cols = sorted({w for p in polys for w in p.terms}, key=word_key, reverse=True)
    where = {w: k for k, w in enumerate(cols)}
    rows = []
    for p in polys:
        row = [ZERO] * len(cols)
        for w, c in p.terms.items():
            row[where[w]] = c
        rows.append(row)
    return rows, cols


def reduced_span_rank(S: RelationSet, d: int) -> int:
    """Rank of the normal forms of all ``(n^2)^d`` words of degree ``d``."""
    red = Reducer(S)
    polys = [red.normal_form(w) for w in product(generators(S.n), repeat=d)]
    rows, _ = _matrix([p for p in polys if p])
    return rank(rows)


def quotient_dimension_bruteforce(S: RelationSet, d: int) -> int:
    """``(n^2)^d - dim J_d`` where ``J_d`` is spanned by all ``u s v`` with ``|u| + 2 + |v| = d``.

    Works purely in the free algebra: no reduction and no use of the basis
    property, so it independently checks the PBW count.
    """
    gens = generators(S.n)
    total = len(gens) ** d
    if d < 2:
        return total
    products = []
    for left in range(d - 1):
        right = d - 2 - left
        for u in product(gens, repeat=left):
            for v in product(gens, repeat=right):
                for r in S.relations:
                    products.append(r.poly.lmul_word(u, v))
    rows, _ = _matrix(products)
    return total - rank(rows)

"""Bounded search for nonzero left-ideal elements supported on ordered monomials in a subset.

Generators are also labelled ``z_1, ..., z_{n^2}`` with ``z_1 = Z[n,n]`` the
largest, so a monomial ``z_{i_1}^a ... z_{i_r}^b`` with increasing labels is a
PBW normal word. For a left ideal ``L`` and a subset ``U`` of generators, the
search looks for a nonzero element of ``L`` whose words use only letters
from ``U``. The ideal is explored only up to a degree bound, so "no witness"
means none up to that degree, never that none exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .freealg import Generator, NCPoly, Word, render_word, word_key
from .gsb import Reducer, reduce
from .linalg import echelon
from .pbw import PBWWord, enumerate_normal, is_normal, single_index_labels
from .qlaurent import ZERO, LaurentPoly
from .quantum_matrix import RelationSet, build_relations

__all__ = [
    "EliminationProblem",
    "IdealProduct",
    "EliminationOutcome",
    "ideal_products",
    "truncated_ideal_basis",
    "is_in_span_T",
    "find_witness",
    "reconstruct",
]


@dataclass(frozen=True)
class EliminationProblem:
    n: int
    ideal_generators: tuple[NCPoly, ...]
    subset: tuple[Generator, ...]
    degree_bound: int

    def __post_init__(self):
        object.__setattr__(self, "ideal_generators", tuple(self.ideal_generators))
        object.__setattr__(self, "subset", tuple(Generator(*g) for g in self.subset))
        if not self.subset:
            raise ValueError("the generator subset must be nonempty")
        labels = {g: m for m, g in enumerate(single_index_labels(self.n), start=1)}
        for g in self.subset:
            if g not in labels:
                raise ValueError(f"{g} is not a generator for n={self.n}")
        idx = [labels[g] for g in self.subset]
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError("subset must be duplicate-free and increasing in the z_1..z_N labelling")
        if any(not g for g in self.ideal_generators):
            raise ValueError("ideal generators must be nonzero")
        if self.degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")

    @property
    def labels(self) -> list[int]:
        order = {g: m for m, g in enumerate(single_index_labels(self.n), start=1)}
        return [order[g] for g in self.subset]


@dataclass(frozen=True)
class IdealProduct:
    multiplier: PBWWord
    generator: int
    value: NCPoly  # normal form of multiplier * ideal_generators[generator]


@dataclass
class EliminationOutcome:
    witness: NCPoly | None
    explored_dimension: int
    combination: list[tuple[LaurentPoly, IdealProduct]] = field(default_factory=list)
    quotient_growth: list[int] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.witness is not None


def ideal_products(prob: EliminationProblem, S: RelationSet | None = None) -> list[IdealProduct]:
    """``NF(m * g)`` for every normal word ``m`` and generator ``g`` with ``deg m + deg g <= D``.

    Normal words span the algebra and reduction is linear, so these span the
    part of ``L`` reachable within the bound (all of ``L`` in degrees ``<= D``
    when the generators are homogeneous). Zero products are dropped.
    """
    S = S or build_relations(prob.n)
    if S.n != prob.n:
        raise ValueError("relation set built for a different n")
    if prob.ideal_generators and prob.degree_bound < max(g.degree() for g in prob.ideal_generators):
        raise ValueError("degree bound is below the degree of an ideal generator")
    red = Reducer(S)
    out = []
    for gi, g in enumerate(prob.ideal_generators):
        g_nf = red.reduce(g)
        for d in range(prob.degree_bound - g.degree() + 1):
            for m in enumerate_normal(prob.n, d):
                value = red.reduce(NCPoly.word(m.word) * g_nf)
                if value:
                    out.append(IdealProduct(m, gi, value))
    return out


def truncated_ideal_basis(prob: EliminationProblem, S: RelationSet | None = None) -> list[NCPoly]:
    return [p.value for p in ideal_products(prob, S)]


def is_in_span_T(p: NCPoly, subset) -> bool:
    """Does every word of the normal-form polynomial ``p`` use only letters from ``subset``?"""
    for w in p.terms:
        if not is_normal(w):
            raise ValueError(f"{render_word(w)} is not a normal word")
    allowed = {Generator(*g) for g in subset}
    return p.letters() <= allowed


def _columns(products: list[IdealProduct], allowed: set) -> tuple[list[Word], int]:
    words = {w for p in products for w in p.value.terms}
    inside = sorted((w for w in words if set(w) <= allowed), key=word_key, reverse=True)
    outside = sorted((w for w in words if not set(w) <= allowed), key=word_key, reverse=True)
    return outside + inside, len(outside)


def _rows(products: list[IdealProduct], cols: list[Word]) -> list[list[LaurentPoly]]:
    where = {w: k for k, w in enumerate(cols)}
    rows = []
    for p in products:
        row = [ZERO] * len(cols)
        for w, c in p.value.terms.items():
            row[where[w]] = c
        rows.append(row)
    return rows


def find_witness(
    prob: EliminationProblem,
    S: RelationSet | None = None,
    pivoting: str = "first",
    growth: bool = False,
) -> EliminationOutcome:
    """Search ``L`` up to the degree bound for a nonzero element supported on ``U``-words.

    Columns are ordered with non-``U`` words first, so after row echelon
    reduction any row whose pivot lies among the ``U`` columns is supported
    on ``U`` words only. The elimination tracks row combinations, so the
    witness comes with its expression in the ideal products.

    With ``growth=True`` the outcome also lists, for each ``d <= D``, the
    dimension of the degree ``<= d`` part of the quotient as seen from the
    explored products. That number is advisory only.
    """
    S = S or build_relations(prob.n)
    products = ideal_products(prob, S)
    allowed = set(prob.subset)
    cols, first_inside = _columns(products, allowed)
    rows = _rows(products, cols)
    reduced = echelon(rows, track=True, pivoting=pivoting)

    witness = None
    combination: list[tuple[LaurentPoly, IdealProduct]] = []
    for row in reduced:
        if row.pivot >= first_inside:
            witness = NCPoly({cols[k]: c for k, c in enumerate(row.entries) if c})
            combination = [(c, products[k]) for k, c in enumerate(row.combination) if c]
            break

    quotient = []
    if growth:
        N = prob.n * prob.n
        for d in range(prob.degree_bound + 1):
            sub = [p for p in products if p.value.degree() <= d]
            sub_cols, _ = _columns(sub, allowed)
            r = len(echelon(_rows(sub, sub_cols))) if sub else 0
            quotient.append(comb(N + d, N) - r)
    return EliminationOutcome(witness, len(reduced), combination, quotient)


def reconstruct(prob: EliminationProblem, outcome: EliminationOutcome, S: RelationSet | None = None) -> NCPoly:
    """Recompute ``sum c * m * g`` from the recorded combination, reducing from scratch."""
    S = S or build_relations(prob.n)
    total = NCPoly()
    for c, prod in outcome.combination:
        g = prob.ideal_generators[prod.generator]
        total = total + (NCPoly.word(prod.multiplier.word) * g).scale(c)
    return reduce(total, S)

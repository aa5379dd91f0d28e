"""Defining relations of the quantized matrix algebra M_q(n).

Four families, each stored as a monic polynomial ``leading word - lower terms``:

    A  Z[i,j] Z[i,k] - q Z[i,k] Z[i,j]                       j < k
    B  Z[i,j] Z[k,j] - q Z[k,j] Z[i,j]                       i < k
    C  Z[i,j] Z[s,t] - Z[s,t] Z[i,j]                         i < s, t < j
    D  Z[i,j] Z[s,t] - Z[s,t] Z[i,j] - (q - q^-1) Z[i,t] Z[s,j]   i < s, j < t
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb

from .freealg import Generator, NCPoly, Word, word_key
from .qlaurent import GENERIC, ONE, Q, QUANTUM_CORRECTION, QMode, lp_eval

__all__ = [
    "RelationClass",
    "Relation",
    "RelationSet",
    "build_relations",
    "classify_pair",
    "expected_class_counts",
]


class RelationClass(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @property
    def letter(self) -> str:
        return self.value.lower()


@dataclass(frozen=True)
class Relation:
    cls: RelationClass
    indices: tuple[int, ...]
    poly: NCPoly

    @property
    def leading_word(self) -> Word:
        return self.poly.leading()[0]

    @property
    def name(self) -> str:
        prefix = {"A": "f", "B": "g", "C": "h", "D": "h'"}[self.cls.value]
        return prefix + "_" + "".join(str(i) for i in self.indices)

    def tail(self) -> NCPoly:
        """Lower terms with sign flipped, i.e. what the leading word rewrites to."""
        w = self.leading_word
        return NCPoly.word(w) - self.poly


@dataclass(frozen=True)
class RelationSet:
    n: int
    mode: QMode
    relations: tuple[Relation, ...]
    index: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def lookup(self, u: Generator, v: Generator) -> Relation | None:
        return self.index.get((u, v))

    def without(self, relation: Relation) -> "RelationSet":
        """A copy with one relation removed. Only meant for mutation tests."""
        kept = tuple(r for r in self.relations if r is not relation)
        return RelationSet(self.n, self.mode, kept, {r.leading_word: r for r in kept})

    def class_counts(self) -> dict[str, int]:
        counts = {c.value: 0 for c in RelationClass}
        for r in self.relations:
            counts[r.cls.value] += 1
        return counts


def classify_pair(u: Generator, v: Generator) -> RelationClass | None:
    """Class of the relation whose leading word is ``u v``; ``None`` for descending pairs."""
    if u == v:
        raise ValueError(f"no relation has leading word {u}{v}")
    if u > v:
        return None
    i, j = u
    s, t = v
    if i == s:
        return RelationClass.A
    if j == t:
        return RelationClass.B
    return RelationClass.C if t < j else RelationClass.D


def _relation(cls: RelationClass, u: Generator, v: Generator, indices, mode: QMode) -> Relation:
    uv = NCPoly.word((u, v))
    vu = NCPoly.word((v, u))
    if cls in (RelationClass.A, RelationClass.B):
        poly = uv - vu.scale(lp_eval(Q, mode))
    elif cls is RelationClass.C:
        poly = uv - vu
    else:
        (i, j), (s, t) = u, v
        poly = uv - vu - NCPoly.word((Generator(i, t), Generator(s, j))).scale(
            lp_eval(QUANTUM_CORRECTION, mode)
        )
    rel = Relation(cls, tuple(indices), poly)
    lead, coeff = poly.leading()
    if lead != (u, v) or coeff != ONE:
        raise AssertionError(f"relation {rel.name} is not monic with leading word {u}{v}")
    return rel


def build_relations(n: int, mode: QMode = GENERIC) -> RelationSet:
    """Emit the four relation families for ``M_q(n)`` in the given q-mode."""
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = range(1, n + 1)
    rels: list[Relation] = []
    for i in rng:
        for j in rng:
            for k in rng:
                if j < k:
                    rels.append(_relation(RelationClass.A, Generator(i, j), Generator(i, k), (i, j, i, k), mode))
    for j in rng:
        for i in rng:
            for k in rng:
                if i < k:
                    rels.append(_relation(RelationClass.B, Generator(i, j), Generator(k, j), (i, j, k, j), mode))
    for i in rng:
        for s in rng:
            for j in rng:
                for t in rng:
                    if i < s and t < j:
                        rels.append(_relation(RelationClass.C, Generator(i, j), Generator(s, t), (i, j, s, t), mode))
                    elif i < s and j < t:
                        rels.append(_relation(RelationClass.D, Generator(i, j), Generator(s, t), (i, j, s, t), mode))

    index: dict[Word, Relation] = {}
    for r in rels:
        w = r.leading_word
        if w in index:
            raise AssertionError(f"leading word collision: {r.name} and {index[w].name}")
        index[w] = r
    rels.sort(key=lambda r: word_key(r.leading_word))
    return RelationSet(n, mode, tuple(rels), index)


def expected_class_counts(n: int) -> dict[str, int]:
    pairs = comb(n, 2)
    return {"A": n * pairs, "B": n * pairs, "C": pairs * pairs, "D": pairs * pairs}

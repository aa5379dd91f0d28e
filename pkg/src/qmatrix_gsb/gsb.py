"""Reduction modulo the relations and the composition (overlap) check.

A set of monic relations is a Groebner-Shirshov basis when every composition
of two relations reduces to zero. Here that is checked exhaustively: every
overlap of two leading words is enumerated, its composition is formed and
fully reduced with exact coefficients.
"""

from __future__ import annotations

import heapq
import os
import random
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .freealg import Generator, NCPoly, Word, render_word, word_key
from .qlaurent import ZERO
from .quantum_matrix import Relation, RelationClass, RelationSet

__all__ = [
    "STRATEGIES",
    "ReductionStep",
    "Reducer",
    "reduce",
    "Ambiguity",
    "CompositionReport",
    "GsbVerdict",
    "FamilyRow",
    "FAMILY_ROWS",
    "find_ambiguities",
    "find_inclusions",
    "composition",
    "family_of",
    "check_ambiguity",
    "verify_gsb",
]

STRATEGIES = ("leftmost", "rightmost", "random")


@dataclass(frozen=True)
class ReductionStep:
    position: int
    relation: str
    word: Word
    produced: tuple[Word, ...]


def _reducible_positions(w: Word, index: dict) -> list[int]:
    return [k for k in range(len(w) - 1) if (w[k], w[k + 1]) in index]


def reduce(
    p: NCPoly,
    S: RelationSet,
    strategy: str = "leftmost",
    rng: random.Random | None = None,
    trace: list | None = None,
) -> NCPoly:
    """Normal form of ``p`` modulo the relations in ``S``.

    The default strategy rewrites the largest reducible word first, at its
    leftmost reducible position. ``rightmost`` picks the rightmost position
    instead; ``random`` picks both the word and the position at random.
    Pass a list as ``trace`` to collect one :class:`ReductionStep` per rewrite.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "random" and rng is None:
        rng = random.Random()
    index = S.index
    tails = _tails(S)
    terms: dict[Word, object] = dict(p.terms)
    pending = {w for w in terms if _reducible_positions(w, index)}
    heap = [(_neg_key(w), w) for w in pending]
    heapq.heapify(heap)

    while pending:
        if strategy == "random":
            w = rng.choice(sorted(pending, key=word_key))
            pending.discard(w)
        else:
            _, w = heapq.heappop(heap)
            if w not in pending:
                continue
            pending.discard(w)
        c = terms.pop(w, None)
        if c is None:
            continue
        positions = _reducible_positions(w, index)
        if strategy == "leftmost":
            k = positions[0]
        elif strategy == "rightmost":
            k = positions[-1]
        else:
            k = rng.choice(positions)
        rel = index[(w[k], w[k + 1])]
        prefix, suffix = w[:k], w[k + 2:]
        produced = []
        for tail_word, tail_coeff in tails[rel.leading_word]:
            nw = prefix + tail_word + suffix
            produced.append(nw)
            s = terms.get(nw, ZERO) + c * tail_coeff
            if s:
                terms[nw] = s
                if nw not in pending and _reducible_positions(nw, index):
                    pending.add(nw)
                    heapq.heappush(heap, (_neg_key(nw), nw))
            else:
                terms.pop(nw, None)
                pending.discard(nw)
        if trace is not None:
            trace.append(ReductionStep(k, rel.name, w, tuple(produced)))
    return NCPoly(terms)


class _NegKey:
    """Inverts deg-rlex so that ``heapq`` (a min-heap) yields the largest word."""

    __slots__ = ("key",)

    def __init__(self, w: Word):
        self.key = word_key(w)

    def __lt__(self, other: "_NegKey") -> bool:
        return self.key > other.key

    def __eq__(self, other) -> bool:
        return self.key == other.key


def _neg_key(w: Word) -> _NegKey:
    return _NegKey(w)


_TAIL_CACHE: dict[int, tuple[RelationSet, dict]] = {}


def _tails(S: RelationSet) -> dict[Word, list]:
    cached = _TAIL_CACHE.get(id(S))
    if cached is not None and cached[0] is S:
        return cached[1]
    tails = {r.leading_word: r.tail().items() for r in S.relations}
    _TAIL_CACHE[id(S)] = (S, tails)
    return tails


class Reducer:
    """Memoized normal forms of words, for bulk reduction.

    ``normal_form(w)`` caches per word, so reducing many polynomials that
    share subwords (PBW enumeration, elimination matrices) stays cheap.
    Results agree with :func:`reduce` because the relations are confluent.
    """

    def __init__(self, S: RelationSet):
        self.S = S
        self._cache: dict[Word, NCPoly] = {}
        self._tails = _tails(S)

    def normal_form(self, w: Word) -> NCPoly:
        w = tuple(w)
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        positions = _reducible_positions(w, self.S.index)
        if not positions:
            result = NCPoly.word(w)
        else:
            k = positions[0]
            rel = self.S.index[(w[k], w[k + 1])]
            result = NCPoly()
            for tail_word, c in self._tails[rel.leading_word]:
                result = result + self.normal_form(w[:k] + tail_word + w[k + 2:]).scale(c)
        self._cache[w] = result
        return result

    def reduce(self, p: NCPoly) -> NCPoly:
        out = NCPoly()
        for w, c in p.terms.items():
            out = out + self.normal_form(w).scale(c)
        return out


# -- ambiguities ----------------------------------------------------------


@dataclass(frozen=True)
class Ambiguity:
    left: Relation
    right: Relation
    overlap_word: Word

    def __post_init__(self):
        lw, rw, w = self.left.leading_word, self.right.leading_word, self.overlap_word
        if len(w) >= len(lw) + len(rw) or w[: len(lw)] != lw or w[len(w) - len(rw):] != rw:
            raise ValueError(f"{render_word(w)} is not an overlap of {self.left.name} and {self.right.name}")

    @property
    def family(self) -> tuple[RelationClass, RelationClass]:
        return (self.left.cls, self.right.cls)

    def __str__(self) -> str:
        return f"({self.left.name}, {self.right.name})_{render_word(self.overlap_word)}"


def find_ambiguities(S: RelationSet) -> list[Ambiguity]:
    """All intersection ambiguities: leading words ``XY`` and ``YZ`` overlapping in ``XYZ``.

    Written for arbitrary-length leading words; for the quadratic relations
    here every overlap has length 1 and the result is one ambiguity per
    strictly ascending generator triple.
    """
    by_prefix: dict[Generator, list[Relation]] = {}
    for r in S.relations:
        by_prefix.setdefault(r.leading_word[0], []).append(r)
    out = []
    for f in S.relations:
        lw = f.leading_word
        for k in range(1, len(lw)):
            suffix = lw[k:]
            for g in by_prefix.get(suffix[0], ()):
                rw = g.leading_word
                if len(rw) <= len(suffix):
                    continue
                if rw[: len(suffix)] == suffix:
                    out.append(Ambiguity(f, g, lw + rw[len(suffix):]))
    out.sort(key=lambda a: word_key(a.overlap_word))
    return out


def find_inclusions(S: RelationSet) -> list[tuple[Relation, Relation]]:
    """Pairs ``(f, g)`` with ``g != f`` whose leading word occurs inside ``f``'s."""
    out = []
    lead = {r.leading_word: r for r in S.relations}
    for f in S.relations:
        lw = f.leading_word
        for a in range(len(lw)):
            for b in range(a + 1, len(lw) + 1):
                g = lead.get(lw[a:b])
                if g is not None and g is not f:
                    out.append((f, g))
    return out


def composition(amb: Ambiguity) -> NCPoly:
    """``left * c - a * right`` where the overlap word is ``lead(left) c = a lead(right)``."""
    w = amb.overlap_word
    c = w[len(amb.left.leading_word):]
    a = w[: len(w) - len(amb.right.leading_word)]
    return amb.left.poly.lmul_word(right=c) - amb.right.poly.lmul_word(left=a)


# -- the proof-table rows -------------------------------------------------


@dataclass(frozen=True)
class FamilyRow:
    label: str
    pattern: tuple[str, str, str]
    conditions: str

    def __str__(self) -> str:
        word = "".join(f"Z_{p}" for p in self.pattern)
        return f"{self.label}: {word}, {self.conditions}"

    def match(self, w: Word) -> dict[str, int] | None:
        """Bind the index variables to ``w``; ``None`` if inconsistent or a condition fails."""
        if len(w) != len(self.pattern):
            return None
        env: dict[str, int] = {}
        for (r, c), names in zip(w, self.pattern):
            for name, value in zip(names, (r, c)):
                if env.setdefault(name, value) != value:
                    return None
        for chain in self.conditions.split(","):
            names = [x.strip() for x in chain.split("<")]
            if not all(env[a] < env[b] for a, b in zip(names, names[1:])):
                return None
        return env


FAMILY_ROWS: tuple[FamilyRow, ...] = (
    FamilyRow("(a^a) w", ("ij", "ik", "is"), "j<k<s"),
    FamilyRow("(a^b) w1", ("ij", "ik", "sk"), "j<k, i<s"),
    FamilyRow("(a^b) w2", ("ij", "kj", "ks"), "i<k, j<s"),
    FamilyRow("(b^b) w", ("ij", "kj", "sj"), "i<k<s"),
    FamilyRow("(a^c) w1", ("ij", "st", "sk"), "i<s, t<j, t<k"),
    FamilyRow("(a^c) w2", ("ij", "ik", "st"), "j<k, i<s, t<k"),
    FamilyRow("(c^c) w", ("ij", "st", "kl"), "i<s<k, l<t<j"),
    FamilyRow("(b^c) w1", ("ij", "kj", "st"), "i<k<s, t<j"),
    FamilyRow("(b^c) w2", ("ij", "st", "kt"), "i<s<k, t<j"),
    FamilyRow("(a^d) w1", ("ij", "st", "sk"), "i<s, j<t<k"),
    FamilyRow("(a^d) w2", ("ij", "ik", "st"), "i<s, j<k<t"),
    FamilyRow("(b^d) w1", ("ij", "kj", "st"), "i<k<s, j<t"),
    FamilyRow("(b^d) w2", ("st", "ij", "kj"), "s<i<k, t<j"),
    FamilyRow("(c^d) w1", ("ij", "st", "kl"), "i<s<k, t<j, t<l"),
    FamilyRow("(c^d) w2", ("kl", "ij", "st"), "k<i<s, t<j, l<j"),
    FamilyRow("(d^d) w", ("ij", "st", "kl"), "i<s<k, j<t<l"),
)


def family_of(amb: Ambiguity) -> FamilyRow:
    """The unique table row whose pattern and index conditions fit the overlap word."""
    hits = [row for row in FAMILY_ROWS if row.match(amb.overlap_word) is not None]
    if len(hits) != 1:
        found = ", ".join(r.label for r in hits) or "no row"
        raise AssertionError(f"{amb} matches {found}; expected exactly one")
    row = hits[0]
    # the row's class pair must agree with the relations that actually overlap
    expected = sorted(re.findall(r"[abcd]", row.label.split()[0]))
    actual = sorted(c.letter for c in amb.family)
    if expected != actual:
        raise AssertionError(f"{amb} has family {actual} but matched row {row.label}")
    return row


# -- verification ---------------------------------------------------------


@dataclass
class CompositionReport:
    ambiguity: Ambiguity
    row: str
    composition: NCPoly
    remainder: NCPoly
    step_count: int
    steps: list[ReductionStep] | None = None

    @property
    def trivial(self) -> bool:
        return not self.remainder

    def as_record(self) -> dict:
        rec = {
            "overlap": render_word(self.ambiguity.overlap_word),
            "left": self.ambiguity.left.name,
            "right": self.ambiguity.right.name,
            "row": self.row,
            "trivial": self.trivial,
            "steps": self.step_count,
            "remainder": str(self.remainder),
        }
        if self.steps is not None:
            rec["trace"] = [
                {"position": s.position, "relation": s.relation, "word": render_word(s.word)}
                for s in self.steps
            ]
        return rec


@dataclass
class GsbVerdict:
    n: int
    total_ambiguities: int
    failures: list[CompositionReport]
    family_histogram: dict[str, int]
    inclusions: int = 0
    reports: list[CompositionReport] = field(default_factory=list, repr=False)

    @property
    def confirmed(self) -> bool:
        return not self.failures and self.inclusions == 0

    @property
    def trivial_count(self) -> int:
        return self.total_ambiguities - len(self.failures)

    def summary(self) -> str:
        status = "basis confirmed" if self.confirmed else "NOT a Groebner-Shirshov basis"
        return (
            f"n={self.n}: {self.trivial_count}/{self.total_ambiguities} compositions trivial; {status}"
        )


def check_ambiguity(amb: Ambiguity, S: RelationSet, keep_trace: bool = False) -> CompositionReport:
    comp = composition(amb)
    steps: list[ReductionStep] = []
    remainder = reduce(comp, S, trace=steps)
    return CompositionReport(
        amb, family_of(amb).label, comp, remainder, len(steps), steps if keep_trace else None
    )


_WORKER_S: RelationSet | None = None


def _init_worker(S: RelationSet) -> None:
    global _WORKER_S
    _WORKER_S = S


def _check_chunk(args: tuple[Sequence[Ambiguity], bool]) -> list[CompositionReport]:
    chunk, keep_trace = args
    return [check_ambiguity(a, _WORKER_S, keep_trace) for a in chunk]


def verify_gsb(
    S: RelationSet,
    parallel: bool = False,
    jobs: int | None = None,
    keep_trace: bool = False,
) -> GsbVerdict:
    """Reduce every composition of ``S`` and collect the non-trivial ones."""
    inclusions = find_inclusions(S)
    ambiguities = find_ambiguities(S)
    if parallel and len(ambiguities) > 1:
        jobs = jobs or os.cpu_count() or 1
        size = max(1, -(-len(ambiguities) // (4 * jobs)))
        chunks = [ambiguities[i : i + size] for i in range(0, len(ambiguities), size)]
        with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(S,)) as pool:
            reports = [r for part in pool.map(_check_chunk, [(c, keep_trace) for c in chunks]) for r in part]
    else:
        reports = [check_ambiguity(a, S, keep_trace) for a in ambiguities]
    histogram = Counter(r.row for r in reports)
    return GsbVerdict(
        n=S.n,
        total_ambiguities=len(reports),
        failures=[r for r in reports if not r.trivial],
        family_histogram=dict(sorted(histogram.items())),
        inclusions=len(inclusions),
        reports=reports,
    )


def ambiguity_for_triple(S: RelationSet, triple: Iterable[Generator]) -> Ambiguity:
    """The ambiguity on the overlap word ``x y z`` of an ascending triple."""
    x, y, z = (Generator(*g) for g in triple)
    left, right = S.lookup(x, y), S.lookup(y, z)
    if left is None or right is None:
        raise ValueError(f"{x}{y}{z} is not an overlap of two leading words")
    return Ambiguity(left, right, (x, y, z))

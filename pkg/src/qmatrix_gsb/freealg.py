"""The free associative algebra on the generators ``Z[i,j]``.

Words are tuples of :class:`Generator`, stored left to right exactly as
written. The monomial order is deg-rlex: shorter words are smaller, and
words of equal length are compared starting from their LAST letter::

    u = Z43 Z21 Z31        compare   Z31 vs Z41  -> Z31 < Z41
    v = Z41 Z23 Z41                  ^^^ rightmost letters decide first
    so u < v, even though Z43 > Z41 at the left end.

Generators themselves are ordered row-major: ``Z[k,l] < Z[i,j]`` iff
``k < i`` or ``k == i and l < j``.
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping, NamedTuple

from .qlaurent import ONE, ZERO, LaurentPoly

__all__ = [
    "Generator",
    "Word",
    "NCPoly",
    "generators",
    "word_key",
    "cmp_generators",
    "cmp_words",
    "leading_word",
    "render_word",
    "random_word",
]


class Generator(NamedTuple):
    """``Z[row,col]``. Tuple comparison is exactly the row-major generator order."""

    row: int
    col: int

    def __str__(self) -> str:
        return f"Z[{self.row},{self.col}]"


Word = tuple  # tuple[Generator, ...]; the empty tuple is the word 1


def generators(n: int) -> list[Generator]:
    """All ``n*n`` generators in ascending order."""
    return [Generator(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def word_key(w: Word) -> tuple:
    """Sort key realizing deg-rlex: degree first, then letters read right to left."""
    return (len(w), w[::-1])


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def cmp_generators(a: Generator, b: Generator) -> int:
    return _cmp(tuple(a), tuple(b))


def cmp_words(u: Word, v: Word) -> int:
    """Three-way deg-rlex comparison: -1 if ``u < v``, 0 if equal, 1 if ``u > v``."""
    return _cmp(word_key(u), word_key(v))


def render_word(w: Word) -> str:
    if not w:
        return "1"
    return "*".join(str(g) for g in w)


def random_word(n: int, length: int, rng: random.Random) -> Word:
    return tuple(Generator(rng.randint(1, n), rng.randint(1, n)) for _ in range(length))


class NCPoly:
    """A noncommutative polynomial: finite map from words to nonzero Laurent coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, object] | None = None):
        clean: dict[Word, LaurentPoly] = {}
        if terms:
            for w, c in terms.items():
                c = LaurentPoly.coerce(c)
                if c:
                    w = tuple(Generator(*g) for g in w)
                    clean[w] = clean.get(w, ZERO) + c
                    if not clean[w]:
                        del clean[w]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "NCPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def word(cls, w: Iterable, coeff=ONE) -> "NCPoly":
        return cls({tuple(w): coeff})

    @classmethod
    def gen(cls, i: int, j: int) -> "NCPoly":
        return cls._raw({(Generator(i, j),): ONE})

    @classmethod
    def scalar(cls, c) -> "NCPoly":
        return cls({(): c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Word, LaurentPoly]:
        return dict(self._terms)

    def items(self) -> list[tuple[Word, LaurentPoly]]:
        """Terms in descending deg-rlex order; the leading term comes first."""
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]), reverse=True)

    def words(self) -> list[Word]:
        return [w for w, _ in self.items()]

    def coefficient(self, w: Word) -> LaurentPoly:
        return self._terms.get(tuple(w), ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(len(w) for w in self._terms)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._terms}) <= 1

    def letters(self) -> set[Generator]:
        return {g for w in self._terms for g in w}

    def leading(self) -> tuple[Word, LaurentPoly]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading word")
        w = max(self._terms, key=word_key)
        return w, self._terms[w]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            try:
                other = NCPoly.scalar(other)
            except TypeError:
                return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NCPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            try:
                other = NCPoly.scalar(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "NCPoly":
        return NCPoly.scalar(other) - self

    def scale(self, c) -> "NCPoly":
        c = LaurentPoly.coerce(c)
        if not c:
            return NCPoly()
        if c.is_one():
            return self
        return NCPoly._raw({w: v * c for w, v in self._terms.items() if v * c})

    def __mul__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        out: dict[Word, LaurentPoly] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                out[w] = out.get(w, ZERO) + c1 * c2
        return NCPoly._raw({w: c for w, c in out.items() if c})

    def __rmul__(self, other) -> "NCPoly":
        # scalars commute with everything
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, e: int) -> "NCPoly":
        if e < 0:
            raise ValueError("negative powers of noncommutative polynomials are undefined")
        result = NCPoly.scalar(1)
        for _ in range(e):
            result = result * self
        return result

    def lmul_word(self, left: Word = (), right: Word = ()) -> "NCPoly":
        """``left * self * right`` for words ``left`` and ``right``."""
        return NCPoly._raw({left + w + right: c for w, c in self._terms.items()})

    def map_coefficients(self, fn) -> "NCPoly":
        return NCPoly({w: fn(c) for w, c in self._terms.items()})

    # -- comparison, rendering --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, NCPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for idx, (w, c) in enumerate(self.items()):
            negative, body = _render_coefficient_term(c, w)
            if idx == 0:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"NCPoly({self})"


def _render_coefficient_term(c: LaurentPoly, w: Word) -> tuple[bool, str]:
    """Split a term into (is_negative, text without the sign)."""
    word_text = render_word(w) if w else ""
    negative = c.leading_coefficient() < 0
    if negative:
        c = -c
    if c.is_monomial():
        if c.is_one():
            return negative, word_text or "1"
        coeff = str(c)
        if c.is_constant() and c.constant_value().denominator != 1 and word_text:
            coeff = f"({coeff})"
    else:
        coeff = f"({c})"
    if not word_text:
        return negative, coeff
    return negative, f"{coeff}*{word_text}"


def leading_word(p: NCPoly) -> tuple[Word, LaurentPoly]:
    """The deg-rlex maximal word of ``p`` together with its coefficient."""
    return p.leading()

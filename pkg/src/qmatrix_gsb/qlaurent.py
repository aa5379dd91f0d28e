"""Laurent polynomials in the quantum parameter ``q`` over the rationals.

Every coefficient in the engine lives here. Values are immutable; the
rationals themselves are :class:`fractions.Fraction`, which is already
arbitrary precision and always kept in lowest terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "QMode",
    "GENERIC",
    "ZERO",
    "ONE",
    "Q",
    "Q_INV",
    "QUANTUM_CORRECTION",
    "lp_add",
    "lp_mul",
    "lp_eval",
    "lp_gcd",
]


class LaurentPoly:
    """A finite sum ``sum c_k q^k`` with ``c_k`` rational and ``k`` any integer.

    Zero coefficients are never stored, so the zero polynomial has no terms
    and equality is plain dictionary equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[int(exp)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c, exp: int) -> "LaurentPoly":
        return cls({exp: c})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Rational)):
            return cls.const(x)
        raise TypeError(f"cannot use {type(x).__name__} as a Laurent coefficient")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterable[tuple[int, Fraction]]:
        return sorted(self._terms.items(), reverse=True)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def is_monomial(self) -> bool:
        """True for ``c q^k`` with ``c != 0``; these are the units of the ring."""
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(0, Fraction(0))

    def max_exp(self) -> int:
        return max(self._terms)

    def min_exp(self) -> int:
        return min(self._terms)

    def leading_coefficient(self) -> Fraction:
        return self._terms[max(self._terms)]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict[int, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if not self.is_monomial():
                raise ZeroDivisionError("only monomials are invertible")
            (k, c), = self._terms.items()
            return LaurentPoly._raw({k * e: Fraction(1) / c ** (-e)})
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return ZERO
        return LaurentPoly._raw({e: v * c for e, v in self._terms.items()})

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises ``ArithmeticError`` if it does not divide."""
        if not other._terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self._terms:
            return ZERO
        num = _to_dense(self)
        den = _to_dense(other)
        quo, rem = _poly_divmod(num, den)
        if any(rem):
            raise ArithmeticError(f"{other} does not divide {self}")
        shift = self.min_exp() - other.min_exp()
        return LaurentPoly({i + shift: c for i, c in enumerate(quo)})

    # -- comparison, hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == LaurentPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation, rendering --------------------------------------------

    def evaluate(self, value) -> Fraction:
        value = Fraction(value)
        if value == 0:
            raise ValueError("q must be nonzero")
        return sum((c * value ** k for k, c in self._terms.items()), Fraction(0))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (k, c) in enumerate(self.items()):
            body = _render_term(abs(c), k)
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _render_term(c: Fraction, k: int) -> str:
    if k == 0:
        return str(c)
    power = "q" if k == 1 else f"q^{k}"
    if c == 1:
        return power
    if c.denominator == 1:
        return f"{c}*{power}"
    return f"({c})*{power}"


def _to_dense(p: LaurentPoly) -> list[Fraction]:
    lo = p.min_exp()
    dense = [Fraction(0)] * (p.max_exp() - lo + 1)
    for k, c in p._terms.items():
        dense[k - lo] = c
    return dense


def _trim(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    # dense coefficient lists, lowest degree first
    a = _trim(list(a))
    b = _trim(list(b))
    if len(a) < len(b):
        return [], a
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        quo[shift] = f
        for i, bc in enumerate(b):
            a[i + shift] -= f * bc
        _trim(a)
    return quo, a


def lp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor, normalized to a monic polynomial with lowest exponent 0.

    Units (``c q^k``) are stripped, so the gcd of two monomials is ``1``.
    ``lp_gcd(0, 0)`` is ``0``.
    """
    if not a:
        a, b = b, a
    if not a:
        return ZERO
    x = _to_dense(a)
    y = _to_dense(b) if b else []
    while _trim(y):
        _, r = _poly_divmod(x, y)
        x, y = y, r
    x = _trim(x)
    lead = x[-1]
    return LaurentPoly({i: c / lead for i, c in enumerate(x)})


@dataclass(frozen=True)
class QMode:
    """Either symbolic ``q`` (``value is None``) or a fixed nonzero rational."""

    value: Fraction | None = None

    def __post_init__(self):
        if self.value is not None:
            v = Fraction(self.value)
            if v == 0:
                raise ValueError("q must be a nonzero rational")
            object.__setattr__(self, "value", v)

    @property
    def generic(self) -> bool:
        return self.value is None

    @classmethod
    def numeric(cls, value) -> "QMode":
        return cls(Fraction(value))

    @classmethod
    def parse(cls, text: str) -> "QMode":
        text = text.strip()
        if text.lower() == "generic":
            return GENERIC
        try:
            return cls.numeric(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad q value {text!r}: {exc}") from None

    def __str__(self) -> str:
        return "generic" if self.value is None else str(self.value)


GENERIC = QMode()
ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1, 1)
Q_INV = LaurentPoly.monomial(1, -1)
QUANTUM_CORRECTION = Q - Q_INV


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_eval(a: LaurentPoly, mode: QMode) -> LaurentPoly:
    """Specialize ``a`` at the mode's value of ``q``.

    At ``q = 1`` (or ``-1``) the correction ``q - q^-1`` vanishes and the
    class D relations degenerate to plain commutators. The relations stay
    monic, so every leading word and every verdict is unchanged.
    """
    if mode.generic:
        return a
    return LaurentPoly.const(a.evaluate(mode.value))

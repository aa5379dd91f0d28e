"""Fraction-free row reduction over Laurent polynomials in q.

Row operations are ``r <- p*r - e*pivot`` followed by division of the
whole row by its content, so no rational functions of q ever appear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qlaurent import ONE, ZERO, LaurentPoly, lp_gcd

__all__ = ["EchelonRow", "echelon", "rank"]

PIVOTING = ("first", "sparsest", "last")


@dataclass
class EchelonRow:
    pivot: int
    entries: list[LaurentPoly]
    combination: list[LaurentPoly] | None


def _content(row: list[LaurentPoly]) -> LaurentPoly:
    g = ZERO
    for e in row:
        if e:
            g = lp_gcd(g, e)
            if g.is_one():
                break
    return g


def _normalize(row: list[LaurentPoly]) -> list[LaurentPoly]:
    g = _content(row)
    if g and not g.is_one():
        row = [e.divmod_exact(g) if e else e for e in row]
    # make the first nonzero entry have leading rational coefficient 1 and lowest exponent 0
    for e in row:
        if e:
            unit = LaurentPoly.monomial(e.leading_coefficient(), e.min_exp())
            if unit != ONE:
                inv = unit ** -1
                row = [x * inv for x in row]
            break
    return row


def echelon(
    matrix: list[list[LaurentPoly]],
    track: bool = False,
    pivoting: str = "first",
) -> list[EchelonRow]:
    """Row echelon form of ``matrix`` (columns processed left to right).

    With ``track=True`` each returned row carries the coefficients expressing
    it as a combination of the input rows. ``pivoting`` picks, among the rows
    with a nonzero entry in the current column, the first, the last, or the
    one with the fewest nonzero entries.
    """
    if pivoting not in PIVOTING:
        raise ValueError(f"unknown pivoting {pivoting!r}")
    ncols = len(matrix[0]) if matrix else 0
    nrows = len(matrix)
    rows = []
    for idx, r in enumerate(matrix):
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        aug = list(r)
        if track:
            aug += [ONE if k == idx else ZERO for k in range(nrows)]
        rows.append(aug)

    out: list[EchelonRow] = []
    for col in range(ncols):
        live = [k for k, r in enumerate(rows) if r[col]]
        if not live:
            continue
        if pivoting == "first":
            pk = live[0]
        elif pivoting == "last":
            pk = live[-1]
        else:
            pk = min(live, key=lambda k: sum(1 for e in rows[k][:ncols] if e))
        pivot = rows.pop(pk)
        p = pivot[col]
        for k, r in enumerate(rows):
            e = r[col]
            if e:
                rows[k] = _normalize([p * x - e * y for x, y in zip(r, pivot)])
        pivot = _normalize(pivot)
        out.append(EchelonRow(col, pivot[:ncols], pivot[ncols:] if track else None))
    return out


def rank(matrix: list[list[LaurentPoly]], pivoting: str = "first") -> int:
    return len(echelon(matrix, pivoting=pivoting))

"""Exact row reduction, rank, and nullspace over the rationals.

Matrices are lists of row lists with Fraction (or int) entries. Everything
returns canonical reduced row echelon data so downstream consumers (lead
term extraction, quotient coordinates, kernel bases) are deterministic.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(map(Fraction, r)) for r in rows if any(r)]
    pivots: list[int] = []
    work: list[list[Fraction]] = []
    for row in rows:
        for prow, pc in zip(work, pivots):
            if row[pc]:
                coef = row[pc]
                for k in range(pc, ncols):
                    row[k] -= coef * prow[k]
        for c in range(ncols):
            if row[c]:
                inv = Fraction(1) / row[c]
                for k in range(c, ncols):
                    row[k] *= inv
                # keep earlier rows reduced above the new pivot
                for prow in work:
                    if prow[c]:
                        coef = prow[c]
                        for k in range(c, ncols):
                            prow[k] -= coef * row[k]
                # insert keeping pivot columns increasing
                at = sum(1 for p in pivots if p < c)
                work.insert(at, row)
                pivots.insert(at, c)
                break
    return work, pivots


def rank(rows: list[list[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[0])


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Canonical kernel basis of the matrix, one vector per free column.

    The vector for free column c has a 1 at c and back-filled pivot entries;
    vectors are ordered by ascending free column.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for c in range(ncols):
        if c in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[c] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[c]
        basis.append(vec)
    return basis


def in_row_space(vector: list[Fraction], reduced: list[list[Fraction]], pivots: list[int]) -> bool:
    """Membership test against an rref basis."""
    residue = reduce_vector(vector, reduced, pivots)
    return not any(residue)


def reduce_vector(vector: list[Fraction], reduced: list[list[Fraction]], pivots: list[int]) -> list[Fraction]:
    """Subtract the unique rref-row combination matching the pivot entries."""
    residue = [Fraction(x) for x in vector]
    for row, p in zip(reduced, pivots):
        if residue[p]:
            coef = residue[p]
            for k in range(len(residue)):
                if row[k]:
                    residue[k] -= coef * row[k]
    return residue

"""Exact rank and nullspace over Q by fraction-free elimination.

Rows are cleared of denominators up front and then eliminated with integer
cross-multiplication, dividing each updated row by its content to keep the
entries small.  Fractions only appear when the nullspace basis is read off.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _integer_row(row: Sequence) -> List[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = _lcm(den, x.denominator)
    return [int(x * den) for x in row]


def _primitive(row: List[int]) -> List[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        return [x // g for x in row]
    return row


def reduced_echelon(rows: Sequence[Sequence], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Integer reduced row echelon form and the pivot columns.

    Every pivot column is zero outside its pivot row; zero rows are dropped.
    """
    work = [_primitive(_integer_row(r)) for r in rows if any(r)]
    for r in work:
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)} in a {ncols}-column system")
    pivots: List[int] = []
    done = 0
    for col in range(ncols):
        cand = [i for i in range(done, len(work)) if work[i][col]]
        if not cand:
            continue
        p = min(cand, key=lambda i: abs(work[i][col]))
        work[done], work[p] = work[p], work[done]
        prow = work[done]
        pv = prow[col]
        for i in range(len(work)):
            if i == done or not work[i][col]:
                continue
            a = work[i][col]
            g = gcd(a, pv)
            ma, mp = pv // g, a // g
            work[i] = _primitive([x * ma - y * mp for x, y in zip(work[i], prow)])
        pivots.append(col)
        done += 1
        work = work[:done] + [r for r in work[done:] if any(r)]
    return work[:done], pivots


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(reduced_echelon(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[int]]:
    """Primitive integer basis of {v : rows . v = 0}, one vector per free column."""
    ech, pivots = reduced_echelon(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(ech, pivots):
            if row[free]:
                v[pc] = Fraction(-row[free], row[pc])
        basis.append(_primitive(_integer_row(v)))
    return basis


def solve_membership(vectors: Sequence[Sequence], target: Sequence) -> bool:
    """True when ``target`` lies in the Q-span of ``vectors``."""
    if not any(target):
        return True
    if not vectors:
        return False
    n = len(target)
    return rank(list(vectors), n) == rank(list(vectors) + [list(target)], n)

"""In-place elementary operations on lists of integer rows.

Only the Hermite form and the F_p lift mutate data, and only on private copies
obtained with ``IntMatrix.to_lists()``.
"""
from __future__ import annotations

Rows = list[list[int]]

def eye(n: int) -> Rows:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]

def combine_rows(m: Rows, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # row_i <- a*row_i + b*row_j ; row_j <- c*row_i + d*row_j
    ri, rj = m[i], m[j]
    for k in range(len(ri)):
        e = ri[k]
        ri[k] = a * e + b * rj[k]
        rj[k] = c * e + d * rj[k]

def add_row_multiple(m: Rows, target: int, source: int, factor: int) -> None:
    rt, rs = m[target], m[source]
    for k in range(len(rt)):
        rt[k] += factor * rs[k]

def swap_rows(m: Rows, i: int, j: int) -> None:
    if i != j:
        m[i], m[j] = m[j], m[i]

def negate_row(m: Rows, i: int) -> None:
    m[i] = [-x for x in m[i]]

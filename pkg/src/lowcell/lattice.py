"""Exact integer linear algebra on small lattices.

Everything here works on plain nested lists/tuples of Python ints, so results
are exact at any size.  Matrices are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse_fraction(a: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Inverse over the rationals; raises ValueError if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[k], m[piv] = m[piv], m[k]
        p = m[k][k]
        m[k] = [x / p for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return [row[n:] for row in m]


def solve_integral(rows: Sequence[Sequence[int]], v: Sequence[int]) -> list[int] | None:
    """Integer vector c with c @ rows == v, or None if v is outside the row lattice.

    ``rows`` must be square and nonsingular.
    """
    inv = inverse_fraction(rows)
    c = [sum(Fraction(v[i]) * inv[i][j] for i in range(len(v))) for j in range(len(v))]
    if any(x.denominator != 1 for x in c):
        return None
    return [int(x) for x in c]


def hermite_rows(gens: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by ``gens``.

    Returns the nonzero rows only: upper triangular, positive pivots, entries
    above each pivot reduced into ``[0, pivot)``.
    """
    m = [list(r) for r in gens]
    if not m:
        return []
    ncols = len(m[0])
    row = 0
    for col in range(ncols):
        # Euclid on column ``col`` among rows[row:]
        while True:
            nz = [i for i in range(row, len(m)) if m[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(m[i][col]))
            m[row], m[i0] = m[i0], m[row]
            done = True
            for i in range(row + 1, len(m)):
                if m[i][col]:
                    q = m[i][col] // m[row][col]
                    m[i] = [x - q * y for x, y in zip(m[i], m[row])]
                    if m[i][col]:
                        done = False
            if done:
                break
        if row < len(m) and m[row][col] != 0:
            if m[row][col] < 0:
                m[row] = [-x for x in m[row]]
            for i in range(row):
                q = m[i][col] // m[row][col]
                m[i] = [x - q * y for x, y in zip(m[i], m[row])]
            row += 1
    return m[:row]


def smith_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``(U, D, V)`` with ``U @ a @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with nonnegative entries
    and each diagonal entry divides the next.
    """
    d = [list(r) for r in a]
    n, m = len(d), len(d[0])
    u = identity(n)
    v = identity(m)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        d[dst] = [x - q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in d:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(n, m)):
        while True:
            nz = [(abs(d[i][j]), i, j) for i in range(t, n) for j in range(t, m) if d[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = d[t][t]
            clean = True
            for i in range(t + 1, n):
                if d[i][t]:
                    add_row(i, t, d[i][t] // p)
                    clean = clean and d[i][t] == 0
            for j in range(t + 1, m):
                if d[t][j]:
                    add_col(j, t, d[t][j] // p)
                    clean = clean and d[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, m)
                        if d[i][j] % p), None)
            if bad is None:
                break
            # pull the offending row up so divisibility gets repaired
            add_row(t, bad[0], -1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return u, d, v

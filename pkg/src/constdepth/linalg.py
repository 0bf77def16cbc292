"""Exact integer/rational linear algebra on lists of lists.

Everything here uses Python ints or Fractions; matrices are small (tens of
rows) in every workload, so clarity wins over vectorization.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence

Matrix = List[List[int]]


def rank(rows: Sequence[Sequence[int]], p: Optional[int] = None) -> int:
    """Rank over QQ (fraction-free elimination) or over GF(p)."""
    if p is not None:
        return _rank_mod(rows, p)
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        a = M[r][c]
        for i in range(r + 1, len(M)):
            b = M[i][c]
            row_i = M[i]
            row_r = M[r]
            # Bareiss step; division is exact.
            M[i] = [(a * row_i[j] - b * row_r[j]) // prev for j in range(ncols)]
        prev = a
        r += 1
        if r == len(M):
            break
    return r


def _rank_mod(rows, p):
    M = [[x % p for x in r] for r in rows]
    M = [r for r in M if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], p - 2, p)
        M[r] = [(x * inv) % p for x in M[r]]
        for i in range(r + 1, len(M)):
            f = M[i][c]
            if f:
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Row-style HNF of the integer row span: echelon, positive pivots,
    entries above a pivot reduced into [0, pivot). Zero rows dropped."""
    M = [list(r) for r in rows if any(r)]
    out: Matrix = []
    col = 0
    while M and col < ncols:
        nz = [r for r in M if r[col] != 0]
        if not nz:
            col += 1
            continue
        rest = [r for r in M if r[col] == 0]
        # Euclid on the column until a single nonzero entry remains.
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            new = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r2 = [a - q * b for a, b in zip(r, piv)]
                if r2[col] != 0:
                    new.append(r2)
                elif any(r2):
                    rest.append(r2)
            nz = new
        piv = nz[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        out.append(piv)
        M = rest
        col += 1
    # reduce entries above pivots
    for i, row in enumerate(out):
        c = next(j for j, x in enumerate(row) if x)
        for k in range(i):
            q = out[k][c] // row[c]
            if q:
                out[k] = [a - q * b for a, b in zip(out[k], row)]
    return out


def pivot_columns(hnf: Matrix) -> List[int]:
    return [next(j for j, x in enumerate(r) if x) for r in hnf]


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[Fraction]]:
    """Basis of the right kernel over QQ."""
    M = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -M[i][f]
        basis.append(v)
    return basis


def primitive(v: Sequence) -> List[int]:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    return [x // g for x in ints]


def solve(A: Sequence[Sequence], b: Sequence) -> Optional[List[Fraction]]:
    """Some rational solution of A x = b, or None if inconsistent."""
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    M = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][n] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = M[i][n]
    return x

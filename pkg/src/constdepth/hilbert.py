"""Hilbert series numerators of S/I for monomial ideals I, by pivot splitting.

For a pivot monomial p (a power of one variable) the exact sequence
0 -> S/(I:p)(-deg p) -> S/I -> S/(I + (p)) -> 0 gives

    N(I) = N(I + (p)) + t^deg(p) * N(I : p)

where N(I) is the numerator of HS(S/I) over (1 - t)^n.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import List, Sequence, Tuple

from .monomial import MonomialIdeal, _minimal

IntPolynomial = List[int]


def poly_trim(p: Sequence[int]) -> IntPolynomial:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(a, b) -> IntPolynomial:
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(a, b) -> IntPolynomial:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_shift(a, k) -> IntPolynomial:
    return [0] * k + list(a) if a else []


def one_minus_t_pow(k: int, e: int = 1) -> IntPolynomial:
    """(1 - t^k)^e"""
    out = [1]
    base = [1] + [0] * (k - 1) + [-1] if k > 0 else [0]
    for _ in range(e):
        out = poly_mul(out, base)
    return out


def _coprime(gens) -> bool:
    used = set()
    for g in gens:
        supp = {i for i, x in enumerate(g) if x}
        if used & supp:
            return False
        used |= supp
    return True


def _pick_pivot(gens) -> Tuple[int, int]:
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[i]) for i in range(n)]
    var = max(range(n), key=lambda i: (counts[i], -i))
    exps = sorted(g[var] for g in gens if g[var])
    e = exps[(len(exps) - 1) // 2]
    # x_var^e must not already lie in I, or I + (p) = I and the recursion stalls.
    pure = [g[var] for g in gens if g[var] and sum(g) == g[var]]
    if pure and pure[0] <= e:
        e = pure[0] - 1
    return var, e


@lru_cache(maxsize=200_000)
def _numerator(gens: Tuple[Tuple[int, ...], ...]) -> Tuple[int, ...]:
    if not gens:
        return (1,)
    if len(gens) == 1 or _coprime(gens):
        out = [1]
        for g in gens:
            out = poly_mul(out, one_minus_t_pow(sum(g)))
        return tuple(out)
    var, e = _pick_pivot(gens)
    p = [0] * len(gens[0])
    p[var] = e
    plus = _minimal(list(gens) + [tuple(p)])
    quot = _minimal(tuple(max(a - b, 0) for a, b in zip(g, p)) for g in gens)
    return tuple(poly_add(_numerator(plus), poly_shift(_numerator(quot), e)))


def hilbert_numerator(I: MonomialIdeal) -> IntPolynomial:
    """Numerator h(t) with HS(S/I) = h(t) / (1 - t)^n."""
    return poly_trim(_numerator(I.gens))


def series_coefficient(num: Sequence[int], nvars: int, d: int) -> int:
    """Coefficient of t^d in num(t) / (1 - t)^nvars."""
    total = 0
    for j, c in enumerate(num):
        if j > d:
            break
        if c:
            total += c * comb(d - j + nvars - 1, nvars - 1)
    return total


def count_quotient(I: MonomialIdeal, d: int) -> int:
    """Number of degree-d monomials outside I."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    return series_coefficient(hilbert_numerator(I), I.nvars, d)


def count_all(nvars: int, d: int) -> int:
    return comb(d + nvars - 1, nvars - 1)


def count_in_ideal(I: MonomialIdeal, d: int) -> int:
    return count_all(I.nvars, d) - count_quotient(I, d)


def root_multiplicity_at_one(p: Sequence[int]) -> int:
    p = poly_trim(p)
    if not p:
        raise ValueError("zero polynomial")
    m = 0
    while sum(p) == 0:
        # synthetic division by (1 - t): q_i = sum_{j<=i} p_j
        q, acc = [], 0
        for c in p[:-1]:
            acc += c
            q.append(acc)
        p = poly_trim(q)
        m += 1
    return m


def krull_dim(I: MonomialIdeal) -> int:
    """dim S/I; returns -1 for the unit ideal (the zero ring)."""
    num = hilbert_numerator(I)
    if not num:
        return -1
    return I.nvars - root_multiplicity_at_one(num)

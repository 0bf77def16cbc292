"""Independent brute-force oracles and the shared regression corpus.

Nothing here imports the package's own algorithms; only plain enumeration,
fraction arithmetic and a textbook integer echelon form.
"""

import itertools
from fractions import Fraction
from math import comb


REGRESSION = {
    "summand-not-cm": (6, [(1, 0, 0, 3, 0, 0), (0, 1, 0, 0, 3, 0), (0, 0, 1, 1, 1, 1)]),
    "summand-cm": (6, [(1, 1, 1, 0, 0, 0), (0, 0, 1, 1, 1, 0), (1, 0, 0, 0, 1, 1)]),
    "triangle": (3, [(1, 1, 0), (1, 0, 1), (0, 1, 1)]),
    "principal": (2, [(1, 0)]),
    "m2-n2": (2, [(2, 0), (1, 1), (0, 2)]),
    "m-n3": (3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    "path-p4": (4, [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)]),
    "square-c4": (4, [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)]),
    "two-edges": (4, [(1, 1, 0, 0), (0, 0, 1, 1)]),
    "mixed-degree": (3, [(2, 1, 0), (0, 0, 1)]),
    "non-squarefree": (3, [(2, 1, 0), (0, 2, 1), (1, 0, 2)]),
    "cubic-pair": (4, [(1, 1, 1, 0), (0, 1, 1, 1)]),
}


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomials(n, d):
    for combo in itertools.combinations_with_replacement(range(n), d):
        a = [0] * n
        for j in combo:
            a[j] += 1
        yield tuple(a)


def hf_quotient(gens, n, d):
    """Number of degree-d monomials outside the ideal."""
    return sum(1 for m in monomials(n, d) if not any(divides(g, m) for g in gens))


def frac_rank(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def taylor_betti(gens, n):
    """beta_{i,b}(S/I) from the Taylor resolution tensored with K.

    In multidegree b the complex has a basis of subsets with lcm exactly b,
    and only faces with the same lcm survive in the differential.
    """
    gens = list(gens)
    r = len(gens)
    by_lcm = {}
    for size in range(r + 1):
        for sigma in itertools.combinations(range(r), size):
            b = tuple(max([gens[j][k] for j in sigma], default=0) for k in range(n))
            by_lcm.setdefault(b, {}).setdefault(size, []).append(sigma)
    out = {}
    for b, cells in by_lcm.items():
        top = max(cells)
        ranks = {}
        for i in range(1, top + 1):
            src = cells.get(i, [])
            dst = cells.get(i - 1, [])
            index = {s: k for k, s in enumerate(dst)}
            rows = []
            for sigma in src:
                row = [0] * len(dst)
                for pos, j in enumerate(sigma):
                    face = sigma[:pos] + sigma[pos + 1:]
                    if face in index:
                        row[index[face]] = (-1) ** pos
                rows.append(row)
            ranks[i] = frac_rank(rows) if rows and dst else 0
        for i in range(top + 1):
            dim = len(cells.get(i, [])) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if dim:
                out[(i, b)] = dim
    return out


def totals(betti):
    top = max(i for i, _ in betti)
    t = [0] * (top + 1)
    for (i, _), v in betti.items():
        t[i] += v
    return t


def integer_echelon(vectors, m):
    """Row echelon basis of the integer span, by repeated Euclid on columns."""
    rows = [list(v) for v in vectors if any(v)]
    basis = []
    for c in range(m):
        while True:
            nz = [r for r in rows if r[c] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[c]))
            p = nz[0]
            for r in nz[1:]:
                q = r[c] // p[c]
                for k in range(m):
                    r[k] -= q * p[k]
            rows = [r for r in rows if any(r)]
        piv = [r for r in rows if r[c] != 0]
        if piv:
            p = piv[0]
            if p[c] < 0:
                p[:] = [-x for x in p]
            basis.append((c, p))
            rows = [r for r in rows if r is not p]
    return basis


def in_span(basis, v):
    v = list(v)
    for c, row in basis:
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def box_hilbert_basis(gens, m, B):
    """Irreducible nonzero points of span_Z(gens) in [0, B]^m."""
    basis = integer_echelon(gens, m)
    pts = [p for p in itertools.product(range(B + 1), repeat=m) if any(p) and in_span(basis, p)]
    pset = set(pts)
    irreducible = []
    for p in pts:
        reducible = any(
            q != p and divides(q, p) and tuple(a - b for a, b in zip(p, q)) in pset
            for q in pts
        )
        if not reducible:
            irreducible.append(p)
    return sorted(irreducible)


def monoid_member(gens, v):
    """Exhaustive: is v a nonnegative integer combination of gens?"""
    bound = max(v) if v else 0
    for coeffs in itertools.product(range(bound + 1), repeat=len(gens)):
        s = tuple(sum(c * g[k] for c, g in zip(coeffs, gens)) for k in range(len(v)))
        if s == tuple(v):
            return True
    return False


def rees_degree_elements(gens, n, d):
    """Distinct sums of d algebra generators of the Rees semigroup."""
    algebra = [tuple(int(i == j) for j in range(n + 1)) for i in range(n)] + [tuple(g) + (1,) for g in gens]
    return {tuple(map(sum, zip(*combo))) if combo else (0,) * (n + 1)
            for combo in itertools.combinations_with_replacement(algebra, d)}


def count_all(n, d):
    return comb(n + d - 1, d) if n else int(d == 0)

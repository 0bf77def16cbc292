"""Integer lattices, affine monoids and their Hilbert bases.

Hilbert bases are produced by a Pottier-style completion: starting from a
symmetric lattice basis, critical sums are normal-formed against the current
set with respect to the conformal order, until every sum reduces to zero. The
result contains the Graver basis of the lattice, whose nonnegative members
form the Hilbert basis of the lattice's nonnegative part.

Saturations (lattice points of a rational cone) go through a covering by
simplicial subcones instead; the completion's Graver set explodes once the
cone has many facets.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, ResourceLimitExceeded
from .linalg import hermite_normal_form, nullspace, pivot_columns, primitive, rank, solve
from .monomial import Field, MonomialIdeal, PolyContext, QQ, minimalize

Vector = Tuple[int, ...]

DEFAULT_BASIS_LIMIT = 20_000
DEFAULT_FACET_LIMIT = 200_000


@dataclass(frozen=True)
class IntegerLattice:
    dim: int
    basis: Tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return lattice_contains(self, v)


def lattice_from_rows(vectors: Sequence[Sequence[int]], dim: Optional[int] = None) -> IntegerLattice:
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if dim is None:
        if not vectors:
            raise ValueError("dimension required for an empty generator list")
        dim = len(vectors[0])
    for v in vectors:
        if len(v) != dim:
            raise DimensionMismatch(f"vector {v} not of dimension {dim}")
    hnf = hermite_normal_form(vectors, dim)
    return IntegerLattice(dim, tuple(tuple(r) for r in hnf))


def lattice_contains(L: IntegerLattice, v: Sequence[int]) -> bool:
    if len(v) != L.dim:
        raise DimensionMismatch(f"vector of length {len(v)} vs lattice dimension {L.dim}")
    v = list(v)
    for row, c in zip(L.basis, pivot_columns([list(r) for r in L.basis])):
        if any(v[:c]):
            return False
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


@dataclass(frozen=True)
class AffineMonoid:
    dim: int
    generators: Tuple[Vector, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.dim:
                raise DimensionMismatch(f"generator {g} not of dimension {self.dim}")
            if any(x < 0 for x in g) or not any(g):
                raise ValueError(f"monoid generator {g} must be nonnegative and nonzero")

    @classmethod
    def of(cls, gens, dim=None) -> "AffineMonoid":
        seen = []
        for g in gens:
            g = tuple(int(x) for x in g)
            if g not in seen:
                seen.append(g)
        if dim is None:
            dim = len(seen[0])
        return cls(dim, tuple(seen))

    def lattice(self) -> IntegerLattice:
        return lattice_from_rows(self.generators, self.dim)


def monoid_contains(M: AffineMonoid, v: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Nonnegative integer coefficients writing v over M's generators, or None.

    The search is exhaustive, so None proves v is not in the monoid.
    """
    v = tuple(v)
    if len(v) != M.dim:
        raise DimensionMismatch(f"vector of length {len(v)} vs monoid dimension {M.dim}")
    if any(x < 0 for x in v):
        return None
    gens = M.generators
    r = len(gens)
    # reach[i]: coordinates touched by generators i..r-1
    reach = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        reach[i] = reach[i + 1] | sum(1 << j for j, x in enumerate(gens[i]) if x)
    failed = set()

    def search(i, rest):
        if not any(rest):
            return ()
        if i == r:
            return None
        need = sum(1 << j for j, x in enumerate(rest) if x)
        if need & ~reach[i]:
            return None
        key = (i, rest)
        if key in failed:
            return None
        g = gens[i]
        bound = min(rest[j] // x for j, x in enumerate(g) if x)
        for c in range(bound, -1, -1):
            sub = tuple(a - c * b for a, b in zip(rest, g)) if c else rest
            found = search(i + 1, sub)
            if found is not None:
                return (c,) + found
        failed.add(key)
        return None

    found = search(0, v)
    if found is None:
        return None
    return found + (0,) * (r - len(found))


@dataclass
class HilbertBasisResult:
    vectors: List[Vector]
    system: str
    stats: Dict[str, int] = dc_field(default_factory=dict)


def _conformal(u, v, m) -> bool:
    """u precedes v in the conformal order on the first m coordinates."""
    for j in range(m):
        a = u[j]
        if a:
            b = v[j]
            if a > 0:
                if b < a:
                    return False
            elif b > a:
                return False
    return True


def _completion(generators: Sequence[Vector], m: int, limit: int):
    """Pottier completion on the first m coordinates.

    Trailing coordinates (beyond m) ride along linearly and never influence
    the order, so callers can carry preimages. Returns (set, stats).
    """
    G: List[Vector] = []
    seen = set()
    for g in generators:
        for s in (g, tuple(-x for x in g)):
            if any(s[:m]) and s not in seen:
                seen.add(s)
                G.append(s)
    heap: List[Tuple[int, int, Vector]] = []
    counter = itertools.count()

    def push_sums(f, upto):
        for g in G[:upto]:
            # sign-compatible pairs reduce to zero immediately
            if any(f[j] * g[j] < 0 for j in range(m)):
                s = tuple(a + b for a, b in zip(f, g))
                if any(s[:m]):
                    heapq.heappush(heap, (sum(abs(x) for x in s[:m]), next(counter), s))

    for i, f in enumerate(G):
        push_sums(f, i)
    pairs = 0
    while heap:
        _, _, s = heapq.heappop(heap)
        pairs += 1
        changed = True
        while changed and any(s[:m]):
            changed = False
            for g in G:
                if _conformal(g, s, m):
                    s = tuple(a - b for a, b in zip(s, g))
                    changed = True
                    break
        if any(s[:m]):
            G.append(s)
            if len(G) > limit:
                raise ResourceLimitExceeded("completion set size", limit, len(G))
            push_sums(s, len(G) - 1)
    return G, {"completion_size": len(G), "pairs": pairs}


def _nonneg_minimal(G: Sequence[Vector], m: int) -> List[Vector]:
    pos = [g for g in G if all(x >= 0 for x in g[:m])]
    pos.sort(key=lambda g: sum(g[:m]))
    out: List[Vector] = []
    for g in pos:
        if not any(all(a <= b for a, b in zip(h[:m], g[:m])) for h in out):
            out.append(g)
    return out


def hilbert_basis_lattice_positive(L: IntegerLattice, limit: int = DEFAULT_BASIS_LIMIT) -> HilbertBasisResult:
    """Minimal generators of the monoid L intersected with the nonnegative orthant."""
    if not L.basis:
        raise ValueError("lattice is zero")
    G, stats = _completion(L.basis, L.dim, limit)
    vecs = sorted(_nonneg_minimal(G, L.dim), reverse=True)
    return HilbertBasisResult(vecs, f"lattice(rank {L.rank}) in N^{L.dim}", stats)


def support_forms(M: AffineMonoid, limit: int = DEFAULT_FACET_LIMIT) -> List[Vector]:
    """Primitive integer forms, lying in the span of M, cutting out the cone of M
    inside that span (one per facet)."""
    gens = [list(g) for g in M.generators]
    d = rank(gens)
    if d == 0:
        return []
    basis = []
    for g in gens:
        if rank(basis + [g]) > len(basis):
            basis.append(g)
        if len(basis) == d:
            break
    count = comb(len(gens), d - 1)
    if count > limit:
        raise ResourceLimitExceeded("facet candidate subsets", limit, count)
    gram = [[sum(a * b for a, b in zip(bi, g)) for bi in basis] for g in gens]
    forms = []
    seen = set()
    for subset in itertools.combinations(range(len(gens)), d - 1):
        rows = [gram[j] for j in subset]
        if rank(rows) != d - 1:
            continue
        (c,) = nullspace(rows, d)
        sigma = primitive([sum(c[i] * basis[i][k] for i in range(d)) for k in range(M.dim)])
        vals = [sum(a * b for a, b in zip(sigma, g)) for g in gens]
        if all(x <= 0 for x in vals):
            sigma = [-x for x in sigma]
            vals = [-x for x in vals]
        elif not all(x >= 0 for x in vals):
            continue
        t = tuple(sigma)
        if t not in seen:
            seen.add(t)
            forms.append(t)
    return sorted(forms)


def _lattice_coordinates(basis: Sequence[Vector], v: Sequence[int]) -> Tuple[int, ...]:
    x = solve([list(col) for col in zip(*basis)], list(v))
    if x is None or any(c.denominator != 1 for c in x):
        raise ValueError(f"{tuple(v)} is not in the lattice")
    return tuple(int(c) for c in x)


def _parallelepiped_points(V: Sequence[Sequence[int]]):
    """Coordinates of the points of Z^d in the half-open parallelepiped spanned
    by the rows of the nonsingular integer matrix V."""
    d = len(V)
    H = hermite_normal_form(V, d)
    diag = [H[i][i] for i in range(d)]
    # lambda = c V^-1, via the inverse of V^T applied to c
    VT = [list(col) for col in zip(*V)]
    inv_cols = [solve(VT, [int(i == j) for i in range(d)]) for j in range(d)]
    for c in itertools.product(*(range(h) for h in diag)):
        if not any(c):
            continue
        lam = [sum(inv_cols[j][i] * c[j] for j in range(d)) for i in range(d)]
        frac = [x - (x.numerator // x.denominator) for x in lam]
        yield frac


def cone_lattice_hilbert_basis(M: AffineMonoid, limit: int = DEFAULT_BASIS_LIMIT,
                               facet_limit: int = DEFAULT_FACET_LIMIT) -> HilbertBasisResult:
    """Minimal generators of (integer span of M) intersected with the rational cone of M.

    Every such element lies in some simplicial cone on linearly independent
    generators; if a coefficient is >= 1 the generator splits off, so the
    irreducible elements are generators or points of the half-open
    parallelepipeds. Candidates are then reduced with the support forms.
    """
    if not M.generators:
        raise ValueError("monoid is zero")
    forms = support_forms(M, facet_limit)
    L = M.lattice()
    d = L.rank
    gens = list(M.generators)
    coords = [_lattice_coordinates(L.basis, g) for g in gens]
    count = comb(len(gens), d)
    if count > facet_limit:
        raise ResourceLimitExceeded("simplicial subcones", facet_limit, count)
    candidates = set(gens)
    simplicial = 0
    for subset in itertools.combinations(range(len(gens)), d):
        V = [list(coords[i]) for i in subset]
        if rank(V) < d:
            continue
        simplicial += 1
        for frac in _parallelepiped_points(V):
            x = [sum(frac[i] * gens[subset[i]][k] for i in range(d)) for k in range(M.dim)]
            candidates.add(tuple(int(c) for c in x))
            if len(candidates) > limit:
                raise ResourceLimitExceeded("Hilbert basis candidates", limit, len(candidates))
    # x is reducible iff x - y lies in the cone for another candidate y
    vals = {c: tuple(sum(a * b for a, b in zip(f, c)) for f in forms) for c in candidates}
    ordered = sorted(candidates, key=lambda c: (sum(vals[c]), c))
    basis: List[Vector] = []
    for x in ordered:
        vx = vals[x]
        if not any(all(a <= b for a, b in zip(vals[y], vx)) for y in basis):
            basis.append(x)
    stats = {"support_forms": len(forms), "simplicial_cones": simplicial, "candidates": len(candidates)}
    return HilbertBasisResult(sorted(basis, reverse=True), f"cone with {len(forms)} support forms, lattice rank {d}", stats)


@dataclass
class SummandVerdict:
    """holds is None when a resource ceiling prevented a decision."""

    holds: Optional[bool]
    witness: Optional[Vector] = None
    hilbert_basis: Optional[List[Vector]] = None
    method: str = "hilbert-basis"
    certificate: Optional[object] = None
    reason: Optional[str] = None

    def to_dict(self):
        out = {
            "holds": self.holds,
            "status": {True: "true", False: "false", None: "unknown"}[self.holds],
            "method": self.method,
            "witness": list(self.witness) if self.witness is not None else None,
            "hilbert_basis": [list(v) for v in self.hilbert_basis] if self.hilbert_basis is not None else None,
        }
        if self.certificate is not None:
            out["retract_certificate"] = list(self.certificate)
        if self.reason:
            out["reason"] = self.reason
        return out


def summand_check(M: AffineMonoid, limit: int = DEFAULT_BASIS_LIMIT) -> SummandVerdict:
    """Decide whether the integer span of M meets the nonnegative orthant exactly in M."""
    try:
        hb = hilbert_basis_lattice_positive(M.lattice(), limit)
    except ResourceLimitExceeded as exc:
        return SummandVerdict(None, reason=str(exc))
    for v in hb.vectors:
        if monoid_contains(M, v) is None:
            return SummandVerdict(False, witness=v, hilbert_basis=hb.vectors)
    return SummandVerdict(True, hilbert_basis=hb.vectors)


@dataclass
class NormalityVerdict:
    holds: Optional[bool]
    witness: Optional[Vector] = None
    hilbert_basis: Optional[List[Vector]] = None
    reason: Optional[str] = None

    def to_dict(self):
        return {
            "holds": self.holds,
            "status": {True: "true", False: "false", None: "unknown"}[self.holds],
            "witness": list(self.witness) if self.witness is not None else None,
            "hilbert_basis": [list(v) for v in self.hilbert_basis] if self.hilbert_basis is not None else None,
            **({"reason": self.reason} if self.reason else {}),
        }


def normality_check(M: AffineMonoid, limit: int = DEFAULT_BASIS_LIMIT,
                    facet_limit: int = DEFAULT_FACET_LIMIT) -> NormalityVerdict:
    try:
        hb = cone_lattice_hilbert_basis(M, limit, facet_limit)
    except ResourceLimitExceeded as exc:
        return NormalityVerdict(None, reason=str(exc))
    for v in hb.vectors:
        if monoid_contains(M, v) is None:
            return NormalityVerdict(False, witness=v, hilbert_basis=hb.vectors)
    return NormalityVerdict(True, hilbert_basis=hb.vectors)


def algebra_dim(M: AffineMonoid) -> int:
    """Krull dimension of K[M]: the rank of the generator matrix."""
    return rank([list(g) for g in M.generators])


def _monomials_of_degree(variables: Sequence[int], d: int, n: int):
    for combo in itertools.combinations_with_replacement(variables, d):
        a = [0] * n
        for j in combo:
            a[j] += 1
        yield tuple(a)


def degree_selection(blocks: Sequence[Sequence[int]], subgroup_gens: Sequence[Sequence[int]],
                     nvars: Optional[int] = None, field: Field = QQ,
                     limit: int = DEFAULT_BASIS_LIMIT) -> MonomialIdeal:
    """The ideal spanned by all monomials whose block-multidegree is a minimal
    generator of H intersected with N^s.

    ``blocks`` lists 0-based variable indices; together they must partition
    range(nvars).
    """
    s = len(blocks)
    flat = sorted(j for b in blocks for j in b)
    if nvars is None:
        nvars = len(flat)
    if flat != list(range(nvars)):
        raise ValueError(f"blocks {blocks} do not partition {nvars} variables")
    ctx = PolyContext(nvars, field)
    H = lattice_from_rows(subgroup_gens, s) if subgroup_gens else IntegerLattice(s, ())
    if not H.basis:
        return minimalize([], ctx)
    hb = hilbert_basis_lattice_positive(H, limit)
    gens = []
    for a in hb.vectors:
        parts = [list(_monomials_of_degree(blocks[i], a[i], nvars)) for i in range(s)]
        for choice in itertools.product(*parts):
            gens.append(tuple(sum(c[j] for c in choice) for j in range(nvars)))
    return minimalize(gens, ctx)

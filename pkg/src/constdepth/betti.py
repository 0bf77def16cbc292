"""Multigraded Betti numbers of S/I through upper Koszul simplicial complexes.

beta_{i+1,b}(S/I) = dim H~_{i-1}(K^b(I)), and b only needs to range over the
lcm-closure of the minimal generators. Depth comes from Auslander-Buchsbaum.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import ResourceLimitExceeded
from .linalg import rank
from .monomial import ExponentVector, Field, MonomialIdeal, QQ, power

log = logging.getLogger(__name__)

DEFAULT_CLOSURE_LIMIT = 500_000


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces are sorted tuples of vertex indices in range(nvertices).

    ``faces == frozenset()`` is the void complex; ``{()}`` is the complex
    whose only face is the empty one.
    """

    nvertices: int
    faces: FrozenSet[Tuple[int, ...]]

    @classmethod
    def from_facets(cls, nvertices, facets) -> "SimplicialComplex":
        faces = set()
        for f in facets:
            f = tuple(sorted(f))
            for k in range(len(f) + 1):
                faces.update(itertools.combinations(f, k))
        return cls(nvertices, frozenset(faces))

    @property
    def is_void(self) -> bool:
        return not self.faces

    def is_closed(self) -> bool:
        return all(f[:i] + f[i + 1:] in self.faces for f in self.faces for i in range(len(f)))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1


def lcm_closure(I: MonomialIdeal, limit: int = DEFAULT_CLOSURE_LIMIT) -> Set[ExponentVector]:
    """All lcms of nonempty subsets of the generators."""
    closure: Set[ExponentVector] = set()
    for g in I.gens:
        new = {tuple(x if x > y else y for x, y in zip(g, c)) for c in closure}
        new.add(g)
        closure |= new
        if len(closure) > limit:
            raise ResourceLimitExceeded("lcm-closure size", limit, len(closure))
    return closure


def _facet_masks(gens, b) -> List[int]:
    # Generator g | x^b contributes the simplex on {j : g_j < b_j}.
    masks = []
    for g in gens:
        m = 0
        for j, (gj, bj) in enumerate(zip(g, b)):
            if gj > bj:
                break
            if gj < bj:
                m |= 1 << j
        else:
            masks.append(m)
    return masks


def upper_koszul(I: MonomialIdeal, b: Sequence[int]) -> SimplicialComplex:
    """K^b(I): squarefree sigma within supp(b) with x^(b - sigma) in I."""
    if any(x < 0 for x in b):
        raise ValueError(f"multidegree {tuple(b)} has negative entries")
    masks = _facet_masks(I.gens, b)
    facets = [tuple(j for j in range(I.nvars) if m >> j & 1) for m in masks]
    return SimplicialComplex.from_facets(I.nvars, facets)


def _faces_from_masks(masks) -> Set[int]:
    faces = set()
    for m in set(masks):
        if m in faces:
            continue
        sub = m
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    return faces


def _homology_of_masks(faces: Set[int], p: Optional[int]) -> List[int]:
    if not faces:
        return []
    by_size: Dict[int, List[int]] = {}
    for f in faces:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    top = max(by_size)
    index = {s: {f: i for i, f in enumerate(sorted(fs))} for s, fs in by_size.items()}
    # ranks[s] = rank of boundary from faces of size s to size s-1
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        lower = index[s - 1]
        rows = []
        for f in sorted(by_size[s]):
            row = [0] * len(lower)
            sign = 1
            for j in range(f.bit_length()):
                if f >> j & 1:
                    row[lower[f & ~(1 << j)]] = sign
                    sign = -sign
            rows.append(row)
        ranks[s] = rank(rows, p)
    # H~_{s-1} lives on faces of size s
    return [len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1)]


def reduced_homology_dims(C: SimplicialComplex, field: Field = QQ) -> List[int]:
    """[dim H~_{-1}, dim H~_0, ...] up to the top face dimension; [] if void."""
    masks = {sum(1 << v for v in f) for f in C.faces}
    return _homology_of_masks(masks, field.p)


@dataclass
class BettiTable:
    nvars: int
    field: Field
    entries: Dict[Tuple[int, ExponentVector], int] = dc_field(default_factory=dict)

    def totals(self) -> List[int]:
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    @property
    def projdim(self) -> int:
        return max(i for i, _ in self.entries)

    def graded(self) -> Dict[Tuple[int, int], int]:
        """Coarsen to (i, total degree)."""
        out: Dict[Tuple[int, int], int] = {}
        for (i, b), v in self.entries.items():
            out[(i, sum(b))] = out.get((i, sum(b)), 0) + v
        return out

    def k_polynomial(self) -> List[int]:
        """sum_{i,b} (-1)^i beta_{i,b} t^|b|"""
        out: Dict[int, int] = {}
        for (i, b), v in self.entries.items():
            d = sum(b)
            out[d] = out.get(d, 0) + (-1) ** i * v
        if not out:
            return []
        poly = [out.get(d, 0) for d in range(max(out) + 1)]
        while poly and poly[-1] == 0:
            poly.pop()
        return poly

    def as_rows(self):
        return [
            {"i": i, "multidegree": list(b), "value": v}
            for (i, b), v in sorted(self.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))
        ]


def betti_table(I: MonomialIdeal, field: Optional[Field] = None,
                closure_limit: int = DEFAULT_CLOSURE_LIMIT) -> BettiTable:
    if field is None:
        field = I.field
    if I.is_unit:
        raise ValueError("Betti table of S/I undefined for the unit ideal")
    n = I.nvars
    table = BettiTable(n, field, {(0, (0,) * n): 1})
    if I.is_zero:
        return table
    gens = I.gens
    for b in sorted(lcm_closure(I, closure_limit)):
        masks = _facet_masks(gens, b)
        common = masks[0]
        for m in masks[1:]:
            common &= m
        if common:
            # a cone, hence acyclic
            continue
        dims = _homology_of_masks(_faces_from_masks(masks), field.p)
        for j, h in enumerate(dims):
            if h:
                table.entries[(j + 1, b)] = h
    return table


def projdim(I: MonomialIdeal, field: Optional[Field] = None, closure_limit=DEFAULT_CLOSURE_LIMIT) -> int:
    return betti_table(I, field, closure_limit).projdim


def depth_quotient(I: MonomialIdeal, field: Optional[Field] = None,
                   closure_limit: int = DEFAULT_CLOSURE_LIMIT) -> int:
    """depth(S/I) = n - projdim(S/I)."""
    if I.is_unit:
        raise ValueError("depth of S/I undefined for the unit ideal")
    return I.nvars - projdim(I, field, closure_limit)


@dataclass
class DepthReport:
    ideal: MonomialIdeal
    field: Field
    kmax: int
    depths: List[int]
    pds: List[int]
    truncated: bool = False
    truncation_reason: Optional[str] = None

    @property
    def computed(self) -> int:
        return len(self.depths)

    @property
    def constant(self) -> bool:
        return len(set(self.depths)) <= 1

    @property
    def stabilized(self) -> bool:
        return len(self.depths) >= 3 and len(set(self.depths[-3:])) == 1

    def check(self):
        n = self.ideal.nvars
        return all(d + p == n for d, p in zip(self.depths, self.pds))

    def to_dict(self):
        return {
            "field": str(self.field),
            "kmax": self.kmax,
            "depths": list(self.depths),
            "pds": list(self.pds),
            "constant": self.constant,
            "stabilized": self.stabilized,
            "truncated": self.truncated,
            "truncation_reason": self.truncation_reason,
        }


def depth_function(I: MonomialIdeal, kmax: int, field: Optional[Field] = None,
                   closure_limit: int = DEFAULT_CLOSURE_LIMIT, kmax_limit: Optional[int] = None) -> DepthReport:
    """depth(S/I^k) for k = 1..kmax. A ceiling hit yields a truncated prefix."""
    if field is None:
        field = I.field
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    if I.is_unit:
        raise ValueError("depth function undefined for the unit ideal")
    report = DepthReport(I, field, kmax, [], [])
    last = kmax
    if kmax_limit is not None and kmax > kmax_limit:
        last = kmax_limit
        report.truncated = True
        report.truncation_reason = f"kmax {kmax} exceeds limit {kmax_limit}"
    for k in range(1, last + 1):
        try:
            pd = projdim(power(I, k), field, closure_limit)
        except ResourceLimitExceeded as exc:
            report.truncated = True
            report.truncation_reason = f"k={k}: {exc}"
            log.warning("depth function truncated at k=%d: %s", k, exc)
            break
        report.pds.append(pd)
        report.depths.append(I.nvars - pd)
    return report

"""Sweeps over small square-free monomial ideals, testing the constant-depth
criterion and recording instances that bear on its open converses:

* summand => Rees algebra Cohen-Macaulay ("q1")
* constant depth function => summand and Cohen-Macaulay ("q2")

Nothing is ever claimed automatically; flagged ideals carry full certificates.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field as dc_field
from typing import Iterable, List, Optional

from .errors import InvariantViolation, ResourceLimitExceeded
from .monomial import Graph, MonomialIdeal, PolyContext, edge_ideal, minimalize
from .rees import CERTIFIED_CM, CERTIFIED_NOT_CM, Verdict, analyze_constant_depth, rees_normality
from .summand import is_summand

log = logging.getLogger(__name__)


def canonical_under_permutation(gens, n):
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((tuple(g[p] for p in perm) for g in gens), reverse=True))
        if best is None or key > best:
            best = key
    return best


def squarefree_ideals(n: int, rmax: int, max_degree: int) -> Iterable[MonomialIdeal]:
    """Square-free monomial ideals in n variables with 1..rmax minimal generators,
    each of degree <= max_degree, one per orbit of variable permutations."""
    ctx = PolyContext(n)
    monos = []
    for d in range(1, min(max_degree, n) + 1):
        for supp in itertools.combinations(range(n), d):
            monos.append(tuple(int(j in supp) for j in range(n)))
    seen = set()
    for r in range(1, rmax + 1):
        for combo in itertools.combinations(monos, r):
            if any(all(a <= b for a, b in zip(g, h)) for g, h in itertools.permutations(combo, 2)):
                continue
            key = canonical_under_permutation(combo, n)
            if key in seen:
                continue
            seen.add(key)
            yield minimalize(key, ctx)


@dataclass
class ExploreRecord:
    ideal: MonomialIdeal
    control: bool
    summand: Optional[bool]
    summand_method: Optional[str]
    rees_status: str
    depths: List[int]
    constant: bool
    theorem_violation: bool = False
    q1_candidate: bool = False
    q2_candidate: bool = False
    error: Optional[str] = None
    verdict: Optional[Verdict] = None

    @property
    def degree2(self) -> bool:
        return bool(self.ideal.gens) and all(sum(g) == 2 for g in self.ideal.gens)

    def to_dict(self, full=False):
        out = {
            "nvars": self.ideal.nvars,
            "gens": [list(g) for g in self.ideal.gens],
            "squarefree": self.ideal.is_squarefree,
            "control": self.control,
            "summand": self.summand,
            "summand_method": self.summand_method,
            "rees_status": self.rees_status,
            "depths": self.depths,
            "constant": self.constant,
            "theorem_violation": self.theorem_violation,
            "q1_candidate": self.q1_candidate,
            "q2_candidate": self.q2_candidate,
        }
        if self.error:
            out["error"] = self.error
        if full and self.verdict is not None:
            out["certificates"] = self.verdict.to_dict()
        return out


@dataclass
class ExploreReport:
    records: List[ExploreRecord] = dc_field(default_factory=list)
    exhausted: bool = False
    elapsed: float = 0.0
    params: dict = dc_field(default_factory=dict)

    def _count(self, pred):
        return sum(1 for r in self.records if pred(r))

    def summary(self):
        corpus = [r for r in self.records if not r.control]
        return {
            "ideals": len(corpus),
            "controls": self._count(lambda r: r.control),
            "theorem_applies": sum(1 for r in corpus if r.summand and r.rees_status == CERTIFIED_CM),
            "constant": sum(1 for r in corpus if r.constant),
            "summand_true": sum(1 for r in corpus if r.summand is True),
            "rees_cm_certified": sum(1 for r in corpus if r.rees_status == CERTIFIED_CM),
            "rees_not_cm_certified": sum(1 for r in corpus if r.rees_status == CERTIFIED_NOT_CM),
            "rees_inconclusive": sum(1 for r in corpus if r.rees_status not in (CERTIFIED_CM, CERTIFIED_NOT_CM)),
            "theorem_violations": sum(1 for r in corpus if r.theorem_violation),
            "q1_candidates": sum(1 for r in corpus if r.q1_candidate),
            "q2_candidates": sum(1 for r in corpus if r.q2_candidate),
            "degree2_ideals": sum(1 for r in corpus if r.degree2),
            "degree2_q1_candidates": sum(1 for r in corpus if r.degree2 and r.q1_candidate),
            "degree2_q2_candidates": sum(1 for r in corpus if r.degree2 and r.q2_candidate),
            "errors": sum(1 for r in corpus if r.error),
            "budget_exhausted": self.exhausted,
            "elapsed_seconds": round(self.elapsed, 3),
        }

    def flagged(self):
        return [r for r in self.records if r.theorem_violation or r.q1_candidate or r.q2_candidate]

    def to_dict(self):
        return {
            "params": self.params,
            "summary": self.summary(),
            "flagged": [r.to_dict(full=True) for r in self.flagged()],
            "records": [r.to_dict() for r in self.records],
        }


def examine(I: MonomialIdeal, kmax: int, D=None, w=4, control=False, **limits) -> ExploreRecord:
    try:
        v = analyze_constant_depth(I, kmax, D, w, **limits)
    except InvariantViolation as exc:
        # the analyzer refuses to return a verdict that contradicts the theorem
        return ExploreRecord(I, control, None, None, "error", [], False, theorem_violation=True, error=str(exc))
    except ResourceLimitExceeded as exc:
        return ExploreRecord(I, control, None, None, "error", [], False, error=str(exc))
    rec = ExploreRecord(I, control, v.summand.holds, v.summand.method, v.rees.kind,
                        list(v.empirical.depths), v.empirical.constant, verdict=v)
    cm = v.rees.kind == CERTIFIED_CM
    not_cm = v.rees.kind == CERTIFIED_NOT_CM
    rec.theorem_violation = bool(v.summand.holds and cm and not v.empirical.constant)
    rec.q1_candidate = bool(v.summand.holds and not_cm)
    rec.q2_candidate = bool(v.empirical.constant and not v.empirical.truncated
                            and (v.summand.holds is False or not_cm))
    return rec


def explore_questions(nmax: int, rmax: int, degree: int, budget: Optional[float] = None,
                      kmax: int = 5, D=None, w: int = 4,
                      controls: Iterable[MonomialIdeal] = (), **limits) -> ExploreReport:
    """Run the analyzer over every square-free ideal with n <= nmax variables,
    at most rmax generators of degree <= degree. ``budget`` is in seconds."""
    report = ExploreReport(params={"nmax": nmax, "rmax": rmax, "degree": degree,
                                   "budget": budget, "kmax": kmax, "window": w, "degree_bound": D})
    start = time.monotonic()
    for I in controls:
        report.records.append(examine(I, kmax, D, w, control=True, **limits))
    for n in range(1, nmax + 1):
        for I in squarefree_ideals(n, rmax, degree):
            if budget is not None and time.monotonic() - start > budget:
                report.exhausted = True
                report.elapsed = time.monotonic() - start
                log.warning("explore budget exhausted after %d ideals", len(report.records))
                return report
            report.records.append(examine(I, kmax, D, w, **limits))
    report.elapsed = time.monotonic() - start
    return report


def analyze_graph(G: Graph, kmax: int = 5, **kw):
    """Edge-ideal pipeline: verdict for I(G) plus summand and Rees-normality
    checks for each connected component carrying edges."""
    I = edge_ideal(G)
    comps = []
    for comp in G.components():
        edges = [(u, v) for u, v in G.edges if u in comp]
        if not edges:
            continue
        idx = {v: i + 1 for i, v in enumerate(comp)}
        H = Graph(len(comp), tuple((idx[u], idx[v]) for u, v in edges))
        J = edge_ideal(H)
        comps.append({
            "vertices": comp,
            "summand": is_summand(J).holds,
            "rees_normal": rees_normality(J).holds,
        })
    verdict = analyze_constant_depth(I, kmax, **kw) if not I.is_zero else None
    return verdict, comps

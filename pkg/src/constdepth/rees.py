"""Rees algebras of monomial ideals as affine semigroup rings.

R(I) = K[x_1..x_n, u_1 t, ..., u_r t] sits in Z^(n+1). When every u_j has the
same degree delta, giving all algebra generators degree 1 makes R(I) standard
graded: x^a t^k has degree |a| - (delta - 1) k.

Cohen-Macaulayness is certified two ways. A normal semigroup ring is CM
(Hochster), so a normality proof certifies CM. A standard graded CM domain has
a nonnegative h-vector, so a negative entry in a stable h-vector refutes CM.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Tuple

from .betti import DEFAULT_CLOSURE_LIMIT, DepthReport, depth_function
from .errors import InvariantViolation, NotEquigenerated, ResourceLimitExceeded
from .hilbert import count_all, hilbert_numerator, one_minus_t_pow, poly_mul, poly_trim, series_coefficient
from .lattice import (DEFAULT_BASIS_LIMIT, DEFAULT_FACET_LIMIT, AffineMonoid, NormalityVerdict,
                      SummandVerdict, algebra_dim, normality_check)
from .monomial import Field, MonomialIdeal, power
from .summand import is_summand

log = logging.getLogger(__name__)

CERTIFIED_CM = "certified-cm"
CERTIFIED_NOT_CM = "certified-not-cm"
INCONCLUSIVE = "inconclusive"


def default_degree_bound(nvars: int) -> int:
    return max(4 * (nvars + 1), 20)


def _check_proper(I: MonomialIdeal):
    if I.is_zero or I.is_unit:
        raise ValueError("Rees algebra analysis needs a proper nonzero ideal")


def _delta(I: MonomialIdeal) -> int:
    if not I.is_equigenerated:
        raise NotEquigenerated(f"generator degrees {sorted(set(I.degrees()))} differ")
    return I.degrees()[0]


@dataclass(frozen=True)
class ReesSemigroup:
    dim: int
    generators: Tuple[Tuple[int, ...], ...]
    delta: Optional[int]

    def monoid(self) -> AffineMonoid:
        return AffineMonoid.of(self.generators, self.dim)


def rees_semigroup(I: MonomialIdeal, require_equigenerated: bool = True) -> ReesSemigroup:
    _check_proper(I)
    n = I.nvars
    delta = _delta(I) if require_equigenerated else (I.degrees()[0] if I.is_equigenerated else None)
    units = [tuple(int(i == j) for j in range(n + 1)) for i in range(n)]
    lifted = [tuple(g) + (1,) for g in I.gens]
    return ReesSemigroup(n + 1, tuple(units + lifted), delta)


def rees_hilbert_function(I: MonomialIdeal, d: int) -> int:
    """Dimension of the degree-d piece of R(I), generators in degree 1."""
    _check_proper(I)
    delta = _delta(I)
    if d < 0:
        raise ValueError("degree must be >= 0")
    n = I.nvars
    total = 0
    for k in range(d + 1):
        e = d + (delta - 1) * k
        total += count_all(n, e) - series_coefficient(hilbert_numerator(power(I, k)), n, e)
    return total


def rees_hilbert_values(I: MonomialIdeal, D: int) -> List[int]:
    """[HF(0), ..., HF(D)], computing each power's numerator once."""
    _check_proper(I)
    delta = _delta(I)
    n = I.nvars
    nums = [hilbert_numerator(power(I, k)) for k in range(D + 1)]
    out = []
    for d in range(D + 1):
        total = 0
        for k in range(d + 1):
            e = d + (delta - 1) * k
            total += count_all(n, e) - series_coefficient(nums[k], n, e)
        out.append(total)
    return out


@dataclass
class HVectorReport:
    coefficients: List[int]
    degree_bound: int
    window: int
    stable: bool
    denominator_exponent: int
    hilbert_values: List[int] = dc_field(default_factory=list)

    def first_negative(self) -> Optional[int]:
        return next((i for i, c in enumerate(self.coefficients) if c < 0), None)

    def to_dict(self):
        return {
            "h_vector": list(self.coefficients),
            "degree_bound": self.degree_bound,
            "window": self.window,
            "stable": self.stable,
            "denominator_exponent": self.denominator_exponent,
        }


def rees_hvector(I: MonomialIdeal, D: Optional[int] = None, w: int = 4) -> HVectorReport:
    """Numerator of the Rees Hilbert series over (1 - t)^(n+1), from HF(0..D).

    The report is stable when the last w computed coefficients vanish; this is
    a heuristic, as no a-priori numerator degree bound is used.
    """
    if D is None:
        D = default_degree_bound(I.nvars)
    if not (D >= w >= 1):
        raise ValueError("need D >= w >= 1")
    hf = rees_hilbert_values(I, D)
    h = poly_mul(hf, one_minus_t_pow(1, I.nvars + 1))[: D + 1]
    h = h + [0] * (D + 1 - len(h))
    stable = not any(h[D - w + 1:])
    return HVectorReport(poly_trim(h), D, w, stable, I.nvars + 1, hf)


def rees_normality(I: MonomialIdeal, limit: int = DEFAULT_BASIS_LIMIT,
                   facet_limit: int = DEFAULT_FACET_LIMIT) -> NormalityVerdict:
    return normality_check(rees_semigroup(I, require_equigenerated=False).monoid(), limit, facet_limit)


@dataclass
class CmStatus:
    kind: str
    normality: Optional[NormalityVerdict] = None
    negative_index: Optional[int] = None
    hvector: Optional[HVectorReport] = None
    reason: Optional[str] = None

    def to_dict(self):
        return {
            "status": self.kind,
            "normality": self.normality.to_dict() if self.normality is not None else None,
            "negative_index": self.negative_index,
            "h_vector": self.hvector.to_dict() if self.hvector is not None else None,
            "reason": self.reason,
        }


def rees_cm_status(I: MonomialIdeal, D: Optional[int] = None, w: int = 4,
                   limit: int = DEFAULT_BASIS_LIMIT, facet_limit: int = DEFAULT_FACET_LIMIT) -> CmStatus:
    _check_proper(I)
    normal = rees_normality(I, limit, facet_limit)
    if normal.holds:
        return CmStatus(CERTIFIED_CM, normality=normal)
    if not I.is_equigenerated:
        why = "not normal" if normal.holds is False else f"normality undecided ({normal.reason})"
        return CmStatus(INCONCLUSIVE, normality=normal,
                        reason=f"Rees semigroup {why}; h-vector route needs an equigenerated ideal")
    hv = rees_hvector(I, D, w)
    neg = hv.first_negative()
    if neg is not None and hv.stable:
        return CmStatus(CERTIFIED_NOT_CM, normality=normal, negative_index=neg, hvector=hv)
    if neg is not None:
        reason = f"negative h-coefficient at {neg} but report not stable at D={hv.degree_bound}, w={hv.window}"
    else:
        reason = "Rees semigroup not normal and h-vector nonnegative"
    return CmStatus(INCONCLUSIVE, normality=normal, hvector=hv, reason=reason)


def analytic_spread(I: MonomialIdeal) -> int:
    """dim F(I) = rank of the exponent matrix (equigenerated ideals only)."""
    _check_proper(I)
    _delta(I)
    return algebra_dim(AffineMonoid.of(I.gens))


@dataclass
class Verdict:
    ideal: MonomialIdeal
    summand: SummandVerdict
    rees: CmStatus
    empirical: DepthReport
    theorem_applies: bool
    analytic_spread: Optional[int]
    notes: List[dict] = dc_field(default_factory=list)

    def to_dict(self):
        return {
            "summand": self.summand.to_dict(),
            "rees": self.rees.to_dict(),
            "theorem_applies": self.theorem_applies,
            "empirical": self.empirical.to_dict(),
            "analytic_spread": self.analytic_spread,
            "notes": self.notes,
        }


def burch_checks(I: MonomialIdeal, report: DepthReport, cm_certified: bool, spread: Optional[int]) -> List[dict]:
    """Consistency of the depth sequence with the analytic spread.

    With CM Rees algebra: spread = n - min depth and, once the minimum is hit,
    the depth stays there. Otherwise only spread <= n - (stable tail value).
    Every check is over the computed range only.
    """
    notes = []
    n = I.nvars
    depths = report.depths
    if spread is None or not depths:
        notes.append({"check": "burch", "status": "skipped", "detail": "no analytic spread or no depths"})
        return notes
    if cm_certified and report.stabilized:
        ok = spread == n - min(depths)
        notes.append({"check": "spread-equals-n-minus-min-depth", "status": "holds" if ok else "fails",
                      "detail": f"spread={spread}, n-min depth={n - min(depths)}"})
    elif report.stabilized:
        ok = spread <= n - depths[-1]
        notes.append({"check": "burch-inequality", "status": "holds" if ok else "fails",
                      "detail": f"spread={spread}, n-tail={n - depths[-1]}"})
    else:
        notes.append({"check": "burch-inequality", "status": "skipped", "detail": "depth sequence not stabilized"})
    if cm_certified:
        lo = min(depths)
        first = depths.index(lo)
        ok = all(x == lo for x in depths[first:])
        notes.append({"check": "depth-stays-at-minimum", "status": "holds" if ok else "fails",
                      "detail": f"minimum {lo} first reached at k={first + 1}"})
    return notes


def analyze_constant_depth(I: MonomialIdeal, kmax: int = 5, D: Optional[int] = None, w: int = 4,
                           field: Optional[Field] = None, closure_limit: int = DEFAULT_CLOSURE_LIMIT,
                           basis_limit: int = DEFAULT_BASIS_LIMIT, facet_limit: int = DEFAULT_FACET_LIMIT) -> Verdict:
    """Check the summand and Rees-CM hypotheses and compute the depth function.

    Raises InvariantViolation if both hypotheses are certified but the
    computed depth function is not constant.
    """
    _check_proper(I)
    summand = is_summand(I, basis_limit)
    try:
        rees = rees_cm_status(I, D, w, basis_limit, facet_limit)
    except ResourceLimitExceeded as exc:
        rees = CmStatus(INCONCLUSIVE, reason=str(exc))
    empirical = depth_function(I, kmax, field, closure_limit)
    theorem_applies = summand.holds is True and rees.kind == CERTIFIED_CM
    spread = analytic_spread(I) if I.is_equigenerated else None
    notes = burch_checks(I, empirical, rees.kind == CERTIFIED_CM, spread)
    v = Verdict(I, summand, rees, empirical, theorem_applies, spread, notes)
    if theorem_applies and not empirical.constant:
        raise InvariantViolation(
            f"summand and Cohen-Macaulay hypotheses certified for {I} but depths are {empirical.depths}; "
            "certificates: " + repr(v.to_dict()))
    if not empirical.check():
        raise InvariantViolation(f"depth + pd != n in {empirical.to_dict()}")
    return v

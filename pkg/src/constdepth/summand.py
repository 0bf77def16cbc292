"""Algebra-retract and direct-summand tests for the algebra generated by the
minimal monomial generators of an ideal.

Retract test: generator u_i needs a variable x_l with exponent exactly 1 in
u_i and exponent 0 in every other generator. Such a column is zero off row i,
so the candidate sets of different generators are disjoint and any choice of
one candidate per generator is a valid set U; no matching search is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import ResourceLimitExceeded
from .lattice import DEFAULT_BASIS_LIMIT, AffineMonoid, SummandVerdict, summand_check
from .monomial import MonomialIdeal


@dataclass(frozen=True)
class RetractCertificate:
    """``variables[i]`` is the 0-based index l_i paired with generator i."""

    gens: Tuple[Tuple[int, ...], ...]
    variables: Tuple[int, ...]

    def verify(self) -> bool:
        if len(set(self.variables)) != len(self.variables) or len(self.variables) != len(self.gens):
            return False
        for i, g in enumerate(self.gens):
            for k, l in enumerate(self.variables):
                if g[l] != (1 if k == i else 0):
                    return False
        return True

    def one_based(self):
        return [l + 1 for l in self.variables]


def _check_proper(I: MonomialIdeal):
    if I.is_zero or I.is_unit:
        raise ValueError("retract/summand tests need a proper nonzero ideal")


def retract_check(I: MonomialIdeal) -> Optional[RetractCertificate]:
    _check_proper(I)
    gens = I.gens
    chosen = []
    for i, g in enumerate(gens):
        private = [
            j for j in range(I.nvars)
            if g[j] == 1 and all(h[j] == 0 for k, h in enumerate(gens) if k != i)
        ]
        if not private:
            return None
        chosen.append(private[0])
    cert = RetractCertificate(gens, tuple(chosen))
    assert cert.verify()
    return cert


def is_summand(I: MonomialIdeal, limit: int = DEFAULT_BASIS_LIMIT) -> SummandVerdict:
    """Decide whether K[u_1..u_r] is a direct summand of S, for the minimal
    monomial generators u_i of I (non-minimal input is minimalized on entry,
    since MonomialIdeal always stores minimal generators)."""
    _check_proper(I)
    cert = retract_check(I)
    if cert is not None:
        return SummandVerdict(True, method="retract", certificate=cert.one_based())
    try:
        return summand_check(AffineMonoid.of(I.gens), limit)
    except ResourceLimitExceeded as exc:
        return SummandVerdict(None, reason=str(exc))

"""Offline re-verification of the certificates carried by a report.

Each check uses only the input generators and elementary membership tests, not
the code path that produced the certificate.
"""

from __future__ import annotations

import itertools
from typing import Dict

from .lattice import AffineMonoid, monoid_contains
from .linalg import rank, solve


def _gens(report):
    ideal = report["inputs"]["ideal"]
    return [tuple(g) for g in ideal["gens"]], ideal["nvars"]


def check_retract(gens, U) -> bool:
    """Each generator has exponent 1 in its own x_U[i] and 0 in every other one."""
    if len(U) != len(gens) or len(set(U)) != len(U):
        return False
    return all(g[l - 1] == (1 if k == i else 0) for i, g in enumerate(gens) for k, l in enumerate(U))


def check_summand_witness(gens, w) -> bool:
    """w is a nonnegative point of the group spanned by the generators that the
    generators do not reach."""
    M = AffineMonoid.of(gens)
    return all(x >= 0 for x in w) and tuple(w) in M.lattice() and monoid_contains(M, w) is None


def check_summand_basis(gens, basis) -> bool:
    M = AffineMonoid.of(gens)
    return all(monoid_contains(M, v) is not None for v in basis)


def rees_generators(gens, n):
    return [tuple(int(i == j) for j in range(n + 1)) for i in range(n)] + [tuple(g) + (1,) for g in gens]


def in_cone(gens, w) -> bool:
    """Exact cone membership by Caratheodory: w is a nonnegative combination of
    some linearly independent set of generators."""
    gens = [list(g) for g in gens]
    d = rank(gens)
    for subset in itertools.combinations(gens, d):
        if rank(list(subset)) < d:
            continue
        x = solve([list(col) for col in zip(*subset)], list(w))
        if x is not None and all(c >= 0 for c in x):
            return True
    return False


def check_normality_witness(gens, n, w) -> bool:
    """w lies in the group and the cone of the Rees semigroup but not in it."""
    M = AffineMonoid.of(rees_generators(gens, n))
    w = tuple(w)
    return w in M.lattice() and in_cone(M.generators, w) and monoid_contains(M, w) is None


def check_rees_basis(gens, n, basis) -> bool:
    M = AffineMonoid.of(rees_generators(gens, n))
    return all(monoid_contains(M, v) is not None for v in basis)


def verify_report(report) -> Dict[str, bool]:
    """Map each certificate name in the report to whether it checks out."""
    certs = report.get("certificates") or {}
    if not certs:
        return {}
    gens, n = _gens(report)
    out = {}
    if "retract" in certs:
        out["retract"] = check_retract(gens, certs["retract"]["U"])
    if "summand_witness" in certs:
        out["summand_witness"] = check_summand_witness(gens, certs["summand_witness"])
    if "summand_hilbert_basis" in certs:
        out["summand_hilbert_basis"] = check_summand_basis(gens, certs["summand_hilbert_basis"])
    if "normality_witness" in certs:
        out["normality_witness"] = check_normality_witness(gens, n, certs["normality_witness"])
    if "rees_hilbert_basis" in certs:
        out["rees_hilbert_basis"] = check_rees_basis(gens, n, certs["rees_hilbert_basis"])
    if "negative_h_index" in certs:
        h = certs["h_vector"]
        out["negative_h_index"] = h[certs["negative_h_index"]] < 0
    return out

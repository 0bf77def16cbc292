import pytest

from conftest import ideal
from constdepth.certify import (check_normality_witness, check_retract, check_summand_witness, in_cone,
                               verify_report)
from constdepth.lattice import AffineMonoid, summand_check
from constdepth.rees import analyze_constant_depth
from constdepth.report import make_report
from oracles import REGRESSION


def test_retract_check():
    gens = REGRESSION["summand-not-cm"][1]
    assert check_retract(gens, [1, 2, 3])
    assert not check_retract(gens, [4, 5, 6])
    assert not check_retract(gens, [1, 1, 3])


def test_summand_witness_check():
    gens = REGRESSION["triangle"][1]
    assert check_summand_witness(gens, (2, 0, 0))
    assert not check_summand_witness(gens, (1, 1, 0))
    assert not check_summand_witness(gens, (1, 0, 0))


def test_normality_witness_check():
    # R((x^2)) has generators (1,0), (2,1); (1,1) is in the group but outside the cone
    assert check_normality_witness([(2,)], 1, (1, 1)) is False
    assert check_normality_witness([(2,)], 1, (1, 0)) is False
    assert in_cone([(1, 0), (2, 1)], (3, 1)) and not in_cone([(1, 0), (2, 1)], (0, 1))


@pytest.mark.parametrize("name", ["summand-not-cm", "summand-cm", "triangle", "m2-n2", "path-p4", "square-c4"])
def test_every_certificate_reverifies(name):
    n, gens = REGRESSION[name]
    I = ideal(n, gens)
    v = analyze_constant_depth(I, kmax=2)
    certs = {}
    if v.summand.certificate is not None:
        certs["retract"] = {"U": v.summand.certificate}
    if v.summand.witness is not None:
        certs["summand_witness"] = list(v.summand.witness)
    if v.summand.holds and v.summand.hilbert_basis:
        certs["summand_hilbert_basis"] = v.summand.hilbert_basis
    if v.rees.normality is not None and v.rees.normality.witness is not None:
        certs["normality_witness"] = list(v.rees.normality.witness)
    if v.rees.normality is not None and v.rees.normality.holds:
        certs["rees_hilbert_basis"] = v.rees.normality.hilbert_basis
    rep = make_report("analyze", {"ideal": {"nvars": n, "gens": [list(g) for g in I.gens]}}, {}, certs)
    results = verify_report(rep)
    assert results and all(results.values()), results


def test_summand_basis_members():
    M = AffineMonoid.of(REGRESSION["m2-n2"][1])
    v = summand_check(M)
    rep = make_report("summand", {"ideal": {"nvars": 2, "gens": [list(g) for g in M.generators]}}, {},
                      {"summand_hilbert_basis": v.hilbert_basis})
    assert verify_report(rep) == {"summand_hilbert_basis": True}

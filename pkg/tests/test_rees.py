import pytest

from conftest import ideal
from constdepth.certify import check_normality_witness
from constdepth.errors import InvariantViolation, NotEquigenerated
from constdepth.rees import (CERTIFIED_CM, CERTIFIED_NOT_CM, INCONCLUSIVE, analytic_spread,
                             analyze_constant_depth, default_degree_bound, rees_cm_status,
                             rees_hilbert_function, rees_hilbert_values, rees_hvector, rees_normality,
                             rees_semigroup)
from oracles import REGRESSION, rees_degree_elements

NON_CM = REGRESSION["summand-not-cm"]


def test_semigroup_generators():
    S = rees_semigroup(ideal(1, [(1,)]))
    assert S.generators == ((1, 0), (1, 1)) and S.delta == 1
    S = rees_semigroup(ideal(*NON_CM))
    assert S.delta == 4 and S.generators[6:] == ((1, 0, 0, 3, 0, 0, 1), (0, 1, 0, 0, 3, 0, 1),
                                                 (0, 0, 1, 1, 1, 1, 1))


def test_mixed_degree_rejected_for_grading():
    I = ideal(*REGRESSION["mixed-degree"])
    with pytest.raises(NotEquigenerated):
        rees_hilbert_function(I, 1)
    with pytest.raises(NotEquigenerated):
        analytic_spread(I)
    assert rees_semigroup(I, require_equigenerated=False).delta is None


def test_non_cm_summand_hilbert_values_and_hvector():
    I = ideal(*NON_CM)
    assert rees_hilbert_values(I, 3) == [1, 9, 45, 165]
    hv = rees_hvector(I, 20, 4)
    assert hv.coefficients == [1, 2, 3, 4, 3, 1, -1] and hv.stable
    assert hv.first_negative() == 6


def test_small_hvectors():
    assert rees_hvector(ideal(2, [(1, 0), (0, 1)])).coefficients == [1, 1]
    assert rees_hvector(ideal(1, [(1,)])).coefficients == [1]


def test_unstable_when_window_nonzero():
    hv = rees_hvector(ideal(*NON_CM), 6, 4)
    assert not hv.stable


def test_bad_window():
    with pytest.raises(ValueError):
        rees_hvector(ideal(2, [(1, 0)]), 3, 5)


def test_default_degree_bound():
    assert default_degree_bound(6) == 28 and default_degree_bound(2) == 20


@pytest.mark.parametrize("name", sorted(n for n, (k, g) in REGRESSION.items() if len({sum(x) for x in g}) == 1))
def test_hilbert_function_matches_semigroup_enumeration(name):
    n, gens = REGRESSION[name]
    I = ideal(n, gens)
    values = rees_hilbert_values(I, 3)
    assert values[0] == 1 and values[1] == n + len(I.gens)
    for d in range(4):
        assert values[d] == len(rees_degree_elements(I.gens, n, d)) == rees_hilbert_function(I, d)


def test_non_cm_summand_certified():
    I = ideal(*NON_CM)
    v = rees_normality(I)
    assert v.holds is False
    assert check_normality_witness(I.gens, I.nvars, v.witness) is True
    st = rees_cm_status(I)
    assert st.kind == CERTIFIED_NOT_CM and st.negative_index == 6
    assert analytic_spread(I) == 3


def test_unstable_negative_is_inconclusive():
    st = rees_cm_status(ideal(*NON_CM), 6, 4)
    assert st.kind == INCONCLUSIVE and "not stable" in st.reason


def test_cm_summand_certified_cm():
    st = rees_cm_status(ideal(*REGRESSION["summand-cm"]))
    assert st.kind == CERTIFIED_CM and st.normality.holds


def test_regression_cm_consistency(regression_ideal):
    I = regression_ideal
    st = rees_cm_status(I)
    if st.kind == CERTIFIED_CM and I.is_equigenerated:
        hv = rees_hvector(I)
        assert hv.stable and hv.first_negative() is None


def test_analyze_cm_summand():
    v = analyze_constant_depth(ideal(*REGRESSION["summand-cm"]), kmax=4)
    assert v.theorem_applies and v.empirical.depths == [3, 3, 3, 3]
    assert all(note["status"] == "holds" for note in v.notes)


def test_analyze_triangle():
    v = analyze_constant_depth(ideal(*REGRESSION["triangle"]), kmax=4)
    assert not v.theorem_applies
    assert v.summand.holds is False and v.rees.kind == CERTIFIED_CM
    assert v.empirical.depths == [1, 0, 0, 0]


def test_analyze_refuses_contradiction(monkeypatch):
    import constdepth.rees as rees

    real = rees.depth_function

    def fake(I, kmax, *a, **kw):
        rep = real(I, kmax, *a, **kw)
        rep.depths[-1] -= 1
        rep.pds[-1] += 1
        return rep

    monkeypatch.setattr(rees, "depth_function", fake)
    with pytest.raises(InvariantViolation):
        analyze_constant_depth(ideal(*REGRESSION["summand-cm"]), kmax=3)

import itertools
import random

import pytest

from constdepth.errors import DimensionMismatch, ResourceLimitExceeded
from constdepth.lattice import (AffineMonoid, algebra_dim, cone_lattice_hilbert_basis, degree_selection,
                                hilbert_basis_lattice_positive, lattice_contains, lattice_from_rows,
                                monoid_contains, normality_check, summand_check, support_forms)
from constdepth.monomial import maximal_ideal, power
from oracles import box_hilbert_basis, monoid_member

B = 6


def random_lattice(rng):
    m = rng.randint(2, 4)
    k = rng.randint(1, m - 1)
    return m, [tuple(rng.randint(-2, 2) for _ in range(m)) for _ in range(k)]


@pytest.mark.parametrize("seed", range(50))
def test_hilbert_basis_matches_box(seed):
    m, gens = random_lattice(random.Random(seed))
    if not any(any(g) for g in gens):
        return
    hb = hilbert_basis_lattice_positive(lattice_from_rows(gens, m)).vectors
    in_box = sorted(v for v in hb if max(v) <= B)
    assert in_box == box_hilbert_basis(gens, m, B)


def test_hilbert_basis_of_even_sum_lattice():
    L = lattice_from_rows([(1, 1, 0), (0, 1, 1), (0, 0, 2)])
    hb = hilbert_basis_lattice_positive(L).vectors
    assert hb == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def test_hilbert_basis_ceiling():
    L = lattice_from_rows([(3, -5, 7, 0), (0, 2, -3, 5)])
    with pytest.raises(ResourceLimitExceeded):
        hilbert_basis_lattice_positive(L, limit=3)


def test_lattice_membership():
    L = lattice_from_rows([(2, 0), (1, 3)])
    assert (3, 3) in L and (0, 6) in L
    assert (1, 0) not in L and not lattice_contains(L, (0, 3))
    with pytest.raises(DimensionMismatch):
        lattice_contains(L, (1, 2, 3))


@pytest.mark.parametrize("seed", range(30))
def test_monoid_contains_matches_exhaustive(seed):
    rng = random.Random(1000 + seed)
    m = rng.randint(1, 3)
    gens = [tuple(rng.randint(0, 3) for _ in range(m)) for _ in range(rng.randint(1, 3))]
    gens = [g for g in gens if any(g)] or [(1,) * m]
    M = AffineMonoid.of(gens)
    for v in itertools.product(range(5), repeat=m):
        coeffs = monoid_contains(M, v)
        assert (coeffs is not None) == monoid_member(M.generators, v)
        if coeffs is not None:
            assert tuple(sum(c * g[k] for c, g in zip(coeffs, M.generators)) for k in range(m)) == v


def test_numerical_semigroup():
    M = AffineMonoid.of([(2,), (3,)])
    assert monoid_contains(M, (1,)) is None
    assert monoid_contains(M, (7,)) is not None


def test_support_forms_of_square_cone():
    M = AffineMonoid.of([(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)])
    forms = support_forms(M)
    assert len(forms) == 4
    for f in forms:
        assert all(sum(a * b for a, b in zip(f, g)) >= 0 for g in M.generators)


def test_normality_small_cases():
    v = normality_check(AffineMonoid.of([(0, 1), (2, 1), (3, 1)]))
    assert v.holds is False and v.witness == (1, 1)
    assert normality_check(AffineMonoid.of([(0, 1), (1, 1), (2, 1)])).holds is True
    assert normality_check(AffineMonoid.of([(2,), (3,)])).holds is False


def test_cone_basis_of_nonsimplicial_cone():
    # a lattice polygon at height 1: its lattice points are the whole basis
    M = AffineMonoid.of([(1, 0, 1), (0, 1, 1), (1, 1, 1), (0, 0, 1), (2, 1, 1)])
    assert sorted(cone_lattice_hilbert_basis(M).vectors) == sorted(M.generators)


def test_group_not_ambient_lattice():
    # index-3 group: (1,1,1) lies in the cone but not in the group, so normal
    M = AffineMonoid.of([(0, 0, 1), (2, 1, 1), (1, 2, 1)])
    assert normality_check(M).holds is True


def test_cone_basis_with_missing_height_one_points():
    # triangle of side 3 at height 1, only vertices and two edge points given
    M = AffineMonoid.of([(0, 0, 1), (3, 0, 1), (0, 3, 1), (1, 0, 1), (0, 1, 1)])
    hb = cone_lattice_hilbert_basis(M).vectors
    height_one = {(a, b, 1) for a in range(4) for b in range(4) if a + b <= 3}
    assert set(hb) == height_one
    v = normality_check(M)
    assert v.holds is False and v.witness in height_one - set(M.generators)


def test_triangle_summand_and_normality():
    M = AffineMonoid.of([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    s = summand_check(M)
    assert s.holds is False and s.witness == (2, 0, 0)
    assert normality_check(M).holds is True


def test_algebra_dim():
    assert algebra_dim(AffineMonoid.of([(1, 0, 0, 3, 0, 0), (0, 1, 0, 0, 3, 0), (0, 0, 1, 1, 1, 1)])) == 3


@pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_degree_selection_gives_powers_of_maximal_ideal(n, d):
    I = degree_selection([list(range(n))], [[d]], n)
    assert I.gens == power(maximal_ideal(n), d).gens


def test_degree_selection_validates_blocks():
    with pytest.raises(ValueError):
        degree_selection([[0], [0, 1]], [[1, -1]], 2)


def random_degree_selection(rng):
    n = rng.randint(1, 6)
    s = rng.randint(1, min(3, n))
    cuts = sorted(rng.sample(range(1, n), s - 1))
    bounds = [0] + cuts + [n]
    blocks = [list(range(bounds[i], bounds[i + 1])) for i in range(s)]
    H = [[rng.randint(-2, 3) for _ in range(s)] for _ in range(rng.randint(1, s))]
    return blocks, H, n


def test_degree_selection_ideals_are_summands():
    rng = random.Random(7)
    checked = 0
    while checked < 40:
        blocks, H, n = random_degree_selection(rng)
        if not any(any(h) for h in H):
            continue
        I = degree_selection(blocks, H, n)
        if I.is_zero or len(I.gens) > 30:
            continue
        assert summand_check(AffineMonoid.of(I.gens)).holds is True, (blocks, H)
        checked += 1

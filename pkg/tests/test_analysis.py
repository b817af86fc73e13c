"""Ring-level analysis: growth, ideals, parameter action, nilpotency."""
import math

import numpy as np
import pytest

from tatecoh import algebra as al
from tatecoh import analysis as an
from tatecoh import products as pr
from tatecoh import stable as st

from helpers import module_7_1, spec23, spec_2r, spec_p2

M71_EXT_DIMS = {-6: 29, -5: 23, -4: 18, -3: 14, -2: 11, -1: 9,
                0: 9, 1: 11, 2: 14, 3: 18, 4: 23, 5: 29, 6: 36}


@pytest.fixture(scope="module")
def m71():
    return module_7_1()


@pytest.fixture(scope="module")
def m71_scan(m71):
    # one shared scan, exact in every degree (exhaustive or full span)
    return an.ideal_scan(m71, range(-4, 3), enum_cap=65536)


# ---------------------------------------------------------------- growth


def test_unit_orbit_matches_polynomial_dimensions_p2():
    # over GF(2) the generator monomials of degree t are the degree-t
    # monomials in r polynomial variables and they act freely on the
    # unit class of k, so h(t) = C(t + r - 1, r - 1)
    for r in (2, 3):
        k = al.trivial_module(spec_2r(r))
        rep = an.orbit_growth(pr.unit_class(k))
        expect = tuple(math.comb(t + r - 1, r - 1)
                       for t in range(len(rep.hilbert)))
        assert rep.hilbert == expect
        assert rep.verdict == an.GROWTH
        assert rep.krull_estimate == r


def test_unit_orbit_matches_polynomial_dimensions_p3():
    # for odd p the tracked generators are the degree-2 polynomial
    # classes, one per variable; exterior classes do not enter orbits
    k = al.trivial_module(spec_p2(3))
    rep = an.orbit_growth(pr.unit_class(k))
    assert rep.degrees == (0, 2, 4, 6, 8, 10, 12)
    assert rep.hilbert == (1, 2, 3, 4, 5, 6, 7)
    assert rep.verdict == an.GROWTH
    assert rep.krull_estimate == 2


def test_classify_plain_shapes():
    assert an._classify((0, 0, 0, 0, 0, 0), 3) == (an.FINITE, 0)
    assert an._classify((1, 1, 1, 1, 1, 1), 3) == (an.BOUNDED, 1)
    assert an._classify((1, 2, 3, 4, 5, 6), 3) == (an.GROWTH, 2)
    assert an._classify((1, 3, 6, 10, 15, 21), 3) == (an.GROWTH, 3)
    # doubling differences never flatten out
    assert an._classify((1, 2, 4, 8, 16, 32), 3)[0] == an.INCONCLUSIVE
    # too short to confirm anything at slack 3
    assert an._classify((0, 0), 3)[0] == an.INCONCLUSIVE


def test_rank_one_algebra_is_all_bounded_no_finite():
    # over GF(2)[X]/(X^2) every Tate group of k is one-dimensional and
    # the parameter acts invertibly: J is everything, I is zero
    k = al.trivial_module(spec_2r(1))
    scan = an.ideal_scan(k, range(-3, 3))
    for n, ideals in scan.items():
        assert ideals.ext_dim == 1
        assert len(ideals.bounded_basis) == 1
        assert ideals.finite_basis == ()
        assert ideals.bounded_exact() and ideals.finite_exact()


# ---------------------------------------------------------------- ideals


def test_ideal_scan_golden_dimensions(m71, m71_scan):
    finite = {n: len(m71_scan[n].finite_basis) for n in m71_scan}
    bounded = {n: len(m71_scan[n].bounded_basis) for n in m71_scan}
    assert finite == {-4: 10, -3: 6, -2: 3, -1: 1, 0: 0, 1: 0, 2: 0}
    assert bounded == {-4: 18, -3: 14, -2: 11, -1: 9, 0: 8, 1: 8, 2: 8}
    for n, ideals in m71_scan.items():
        assert ideals.ext_dim == M71_EXT_DIMS[n]
        assert ideals.finite_exact() and ideals.bounded_exact()
        # constant quotient across the window
        assert len(ideals.bounded_basis) - len(ideals.finite_basis) == 8


def test_ideal_scan_finite_chain_depths(m71_scan):
    depth = {n: m71_scan[n].finite_stabilized_at for n in m71_scan}
    assert depth == {-4: 4, -3: 3, -2: 2, -1: 1, 0: 1, 1: 1, 2: 1}


def test_finite_ideal_vanishes_in_nonnegative_degrees(m71_scan):
    for n in range(0, 3):
        assert m71_scan[n].finite_basis == ()


def test_finite_members_have_finite_orbits_and_annihilators(m71, m71_scan):
    # spot-check the verdict that defines membership
    for n in (-1, -2):
        for row in m71_scan[n].finite_basis[:2]:
            rep = an.orbit_growth(pr.TateClass(m71, n, row))
            assert rep.verdict == an.FINITE
            assert rep.ann_truncation
    row = m71_scan[-3].bounded_basis[0]
    rep = an.orbit_growth(pr.TateClass(m71, -3, row))
    assert rep.verdict in (an.FINITE, an.BOUNDED)


def test_ideal_closure_under_products(m71, m71_scan):
    checked = an.verify_ideal_closure(m71, m71_scan, seed=5)
    assert checked > 0


def test_zeta_injectivity_golden(m71, m71_scan):
    rep = an.zeta_injectivity(m71, range(-4, 2), scan=m71_scan)
    assert rep.zeta_coeffs == (1, 0, 0)
    assert rep.step == 1
    assert rep.degrees == (-4, -3, -2, -1, 0, 1)
    assert rep.source_dims == (8,) * 6
    assert rep.target_dims == (8,) * 6
    assert rep.kernel_dims == (0,) * 6
    assert rep.monotone


def test_tail_ideal_stabilizes_and_matches_bounded(m71, m71_scan):
    tail = an.tail_ideal_window(m71, -1, range(-4, 3), scan=m71_scan)
    for n, cell in tail.items():
        assert cell.stabilized_at == -2
        assert len(cell.basis) == len(m71_scan[n].bounded_basis)


def test_zeta_tail_bijectivity(m71, m71_scan):
    tail = an.tail_ideal_window(m71, -1, range(-4, 3), scan=m71_scan)
    out = an.zeta_tail_bijectivity(m71, range(-4, 2), (1, 0, 0), tail,
                                   m71_scan)
    assert set(out) == set(range(-4, 2))
    for n, cell in out.items():
        assert cell.bijective
        assert cell.kernel_dim == 0
        assert cell.source_dim == cell.target_dim == 8


# ------------------------------------------------- degree-zero radical


def test_radical_of_degree_zero_ring(m71):
    rep = an.radical_nilpotence(m71)
    assert rep.end_dim == 9
    assert len(rep.radical_basis) == 8
    assert rep.nilpotence == 3


def test_radical_rejects_decomposable_module():
    s = spec_p2(2)
    two = al.ModuleRep(s, [np.zeros((2, 2), dtype=np.int64) for _ in range(2)])
    assert st.hom_dim(two, two) == 4
    with pytest.raises(ValueError, match="decomposable"):
        an.radical_nilpotence(two)


# ------------------------------------------------------- the H-action


def test_generator_action_is_central_seed29(m71):
    gens = an.module_generators(m71)
    assert len(gens) == 3
    rng = np.random.default_rng(29)
    for n in (-3, -1, 2):
        dim = st.ext_hat_dim(m71, m71, n)
        x = pr.TateClass(m71, n, rng.integers(0, 2, dim))
        for z in gens:
            assert pr.multiply(x, z).coords == pr.multiply(z, x).coords


def test_action_matrix_columns_are_products(m71):
    n = -2
    A = an.action_matrix(m71, n, 1)
    z = an.module_generators(m71)[1]
    for j, b in enumerate(pr.basis_classes(m71, n)):
        assert tuple(A[:, j]) == pr.multiply(b, z).coords


def test_h_generator_degrees():
    assert an.h_generators(spec23()).degree == 1
    assert len(an.h_generators(spec23()).classes) == 3
    assert an.h_generators(spec_p2(3)).degree == 2
    assert len(an.h_generators(spec_p2(3)).classes) == 2


# ------------------------------------------------------- periodicity


def test_rank_one_trivial_modules_are_periodic():
    res2 = an.periodicity_check(al.trivial_module(spec_2r(1)))
    assert res2.kind == "Periodic" and res2.period == 1
    res3 = an.periodicity_check(al.trivial_module(al.AlgebraSpec(3, 1, ("X",))))
    assert res3.kind == "Periodic" and res3.period == 2


def test_free_module_reports_projective():
    res = an.periodicity_check(al.free_module(spec_p2(2), 1))
    assert res.kind == "Projective"


def test_module_7_1_not_periodic(m71):
    res = an.periodicity_check(m71)
    assert res.kind == "NotPeriodic"
    assert "strictly increase" in res.detail


# ------------------------------------------------------- nilpotency


def test_nilpotency_scan_inapplicable_for_periodic_module():
    rep = an.nilpotency_scan(al.trivial_module(spec_2r(1)))
    assert not rep.applicable
    assert "Periodic" in rep.reason


def test_nilpotency_scan_golden(m71, m71_scan):
    rep = an.nilpotency_scan(m71, window=(-4, -1), max_len=8, scan=m71_scan)
    assert rep.applicable
    assert rep.finite_ideal_top == 0
    assert rep.radical_degree == 3
    assert rep.theoretical_bound == 8
    assert rep.complete
    assert rep.bound_satisfied
    L = rep.max_nonzero_negative_product_length
    assert 1 <= L <= 8
    assert len(rep.witness_degrees) == L
    assert all(-4 <= d <= -1 for d in rep.witness_degrees)
    # the witness recipe really multiplies out to the recorded product
    cls = None
    for d, j in zip(rep.witness_degrees, rep.witness_indices):
        b = pr.basis_classes(m71, d)[j]
        cls = b if cls is None else pr.multiply(cls, b)
    assert cls.degree == sum(rep.witness_degrees)
    assert cls.coords == rep.witness_product
    assert any(rep.witness_product)


def test_growth_bound_vacuous_when_hom_is_wide(m71):
    rep = an.growth_bound_check(m71, depth=8)
    assert rep.ell == 1
    assert rep.d == max(st.hom_dim(m71, m71), st.ext_hat_dim(m71, m71, 1))
    assert rep.bound == rep.d * rep.ell
    assert rep.bound > 8
    assert rep.verdicts == ()
    assert rep.growth_found == ()
    assert rep.inconclusive == ()

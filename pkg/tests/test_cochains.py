"""Cochain complexes, cohomology coordinates, and the stable dictionary."""
import numpy as np
import pytest

from tatecoh import algebra as al
from tatecoh import cochains as co
from tatecoh import products as pr
from tatecoh import resolution as rs
from tatecoh import stable as st

from helpers import module_7_1, module_two_var


def test_delta_squared_is_zero_module_coefficients():
    m = module_7_1()
    cx = co.CochainComplex(rs.resolution_of(m), m)
    for n in range(-3, 3):
        prod = (cx.delta_matrix(n + 1) @ cx.delta_matrix(n)) % 2
        assert not prod.any()


def test_trivial_coefficients_on_minimal_resolution_have_zero_delta():
    s = al.AlgebraSpec(2, 3, ("X", "Y", "Z"))
    k = al.trivial_module(s)
    cx = co.CochainComplex(rs.trivial_resolution(s), k)
    for n in range(-3, 4):
        assert not cx.delta_matrix(n).any()
        assert cx.cohomology(n).dim == cx.rank(n)


def test_cochain_cohomology_matches_stable_dimensions():
    m = module_7_1()
    cx = co.CochainComplex(rs.resolution_of(m), m)
    for n in range(-3, 4):
        assert cx.cohomology(n).dim == st.ext_hat_dim(m, m, n)
    m2 = module_two_var(3)
    cx2 = co.CochainComplex(rs.resolution_of(m2), m2)
    for n in range(-2, 3):
        assert cx2.cohomology(n).dim == st.ext_hat_dim(m2, m2, n)


def test_stable_round_trip_preserves_classes():
    m = module_7_1()
    res = rs.resolution_of(m)
    cx = co.CochainComplex(res, m)
    for n in [-2, -1, 0, 1, 2]:
        space = pr.class_space(m, n)
        for cls in pr.basis_classes(m, n)[:2]:
            phi = pr.rep_matrix(cls)
            Y = cx.from_stable(n, phi)
            assert cx.is_cocycle(n, Y)
            back = cx.to_stable(n, Y)
            assert np.array_equal(space.coords(back), np.array(cls.coords))


def test_coboundaries_become_stably_trivial_seed37():
    m = module_7_1()
    res = rs.resolution_of(m)
    cx = co.CochainComplex(res, m)
    rng = np.random.default_rng(37)
    for n in [0, 1, -1]:
        Y = rng.integers(0, 2, size=(m.dim, cx.rank(n - 1)))
        dY = cx.delta(n - 1, Y)
        assert cx.is_cocycle(n, dY)
        phi = cx.to_stable(n, dY)
        assert not pr.class_space(m, n).coords(phi).any()


def test_cohomology_coords_round_trip_seed41():
    m = module_7_1()
    cx = co.CochainComplex(rs.resolution_of(m), m)
    h = cx.cohomology(1)
    rng = np.random.default_rng(41)
    for _ in range(5):
        c = rng.integers(0, 2, size=h.dim)
        assert np.array_equal(h.coords(h.representative(c)), c % 2)


def test_non_cocycle_rejected():
    m = module_7_1()
    cx = co.CochainComplex(rs.resolution_of(m), m)
    n = 1
    for trial in range(200):
        rng = np.random.default_rng(trial)
        Y = rng.integers(0, 2, size=(m.dim, cx.rank(n)))
        if not cx.is_cocycle(n, Y):
            with pytest.raises(ValueError, match="cocycle"):
                cx.to_stable(n, Y)
            return
    pytest.skip("every sampled cochain was a cocycle")

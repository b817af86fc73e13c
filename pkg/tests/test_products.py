"""Composition products, unit, chi transport, and the trace pairing."""
import numpy as np
import pytest

from tatecoh import algebra as al
from tatecoh import products as pr
from tatecoh import stable as st
from tatecoh.linalg import rank as mat_rank

from helpers import module_7_1, random_module, spec_p2


def all_classes(M, n):
    """Every class of Ext-hat^n (small p and dim only)."""
    p = M.spec.p
    dim = pr.class_space(M, n).dim
    out = []
    import itertools
    for coords in itertools.product(range(p), repeat=dim):
        out.append(pr.TateClass(M, n, coords))
    return out


def test_unit_acts_as_identity_on_k_and_module():
    s2 = al.AlgebraSpec(2, 2, ("X", "Y"))
    k = al.trivial_module(s2)
    one = pr.unit_class(k)
    for n in [-2, -1, 0, 1, 2]:
        for alpha in pr.basis_classes(k, n):
            assert pr.multiply(one, alpha) == alpha
            assert pr.multiply(alpha, one) == alpha
    m = module_7_1()
    one_m = pr.unit_class(m)
    for n in [-1, 0, 1]:
        for alpha in pr.basis_classes(m, n)[:3]:
            assert pr.multiply(one_m, alpha) == alpha
            assert pr.multiply(alpha, one_m) == alpha


def test_cyclic_group_of_order_two_gives_laurent_ring():
    # over GF(2)[X]/(X^2) the Tate ring of k is k[x, x^-1]: every graded
    # piece is one-dimensional and every product of basis classes is the
    # basis class -- nonzero in particular in all negative degrees
    s = al.AlgebraSpec(2, 1, ("X",))
    k = al.trivial_module(s)
    for a in range(-3, 4):
        assert st.ext_hat_dim(k, k, a) == 1
    for a in range(-3, 4):
        for b in range(-3, 4):
            x = pr.TateClass(k, a, (1,))
            y = pr.TateClass(k, b, (1,))
            assert not pr.multiply(x, y).is_zero()


def test_cyclic_group_of_order_three_ring_relations():
    # over GF(3)[X]/(X^3): Tate ring of k is exterior(eta) (x) Laurent
    # k[xi, xi^-1], |eta| = 1, |xi| = 2: eta^2 = 0, xi invertible
    s = al.AlgebraSpec(3, 1, ("X",))
    k = al.trivial_module(s)
    eta = pr.TateClass(k, 1, (1,))
    assert pr.multiply(eta, eta).is_zero()
    xi = pr.TateClass(k, 2, (1,))
    xi_inv_candidates = [c for c in all_classes(k, -2)
                         if pr.multiply(xi, c) == pr.unit_class(k)]
    assert len(xi_inv_candidates) == 1
    assert not pr.multiply(eta, xi).is_zero()
    assert not pr.multiply(xi, xi).is_zero()
    # odd-degree classes square to zero by graded commutativity
    for c in all_classes(k, -1):
        if not c.is_zero():
            assert pr.multiply(c, c).is_zero()


def test_associativity_on_k_rank_two_seed23():
    s = spec_p2(2)
    k = al.trivial_module(s)
    rng = np.random.default_rng(23)
    degrees = [-2, -1, 1, 2]
    for _ in range(6):
        da, db, dc = (int(rng.choice(degrees)) for _ in range(3))
        ca = rng.integers(0, 2, size=pr.class_space(k, da).dim)
        cb = rng.integers(0, 2, size=pr.class_space(k, db).dim)
        cc = rng.integers(0, 2, size=pr.class_space(k, dc).dim)
        x, y, z = pr.TateClass(k, da, ca), pr.TateClass(k, db, cb), pr.TateClass(k, dc, cc)
        assert pr.multiply(pr.multiply(x, y), z) == pr.multiply(x, pr.multiply(y, z))


def test_associativity_on_module_seed29():
    m = module_7_1()
    rng = np.random.default_rng(29)
    for da, db, dc in [(1, -1, 1), (0, 1, -2), (-1, 2, -1)]:
        ca = rng.integers(0, 2, size=pr.class_space(m, da).dim)
        cb = rng.integers(0, 2, size=pr.class_space(m, db).dim)
        cc = rng.integers(0, 2, size=pr.class_space(m, dc).dim)
        x, y, z = pr.TateClass(m, da, ca), pr.TateClass(m, db, cb), pr.TateClass(m, dc, cc)
        assert pr.multiply(pr.multiply(x, y), z) == pr.multiply(x, pr.multiply(y, z))


def test_graded_commutativity_on_k():
    # on the trivial module the Tate ring is graded commutative:
    # a.b = (-1)^(|a||b|) b.a
    s3 = al.AlgebraSpec(3, 1, ("X",))
    k3 = al.trivial_module(s3)
    for da in range(-2, 3):
        for db in range(-2, 3):
            for x in pr.basis_classes(k3, da):
                for y in pr.basis_classes(k3, db):
                    xy = pr.multiply(x, y)
                    yx = pr.multiply(y, x)
                    sign = (-1) ** (da * db)
                    assert xy == pr.scale_class(sign, yx)


def test_degree_zero_shortcut_agrees_with_general_path():
    m = module_7_1()
    sh = pr.class_space(m, 0)
    one = pr.unit_class(m)
    beta = pr.basis_classes(m, 1)[0]
    fast = pr.multiply(one, beta)
    lift = pr.LiftedChainMap(pr.resolution_of(m), pr.resolution_of(m), 1,
                             pr.rep_matrix(beta))
    lift.ensure(0, 1)
    slow = pr.tate_class(m, 1, (pr.rep_matrix(one) @ lift.omega_restriction(1)) % 2)
    assert fast == slow


def test_chi_is_a_ring_map_rank_two_seed31():
    s = spec_p2(2)
    k = al.trivial_module(s)
    rng = np.random.default_rng(31)
    m = random_module(s, rng)
    assert pr.chi(m, pr.unit_class(k)) == pr.unit_class(m)
    for da, db in [(1, 1), (1, 2), (2, 1)]:
        ca = rng.integers(0, 2, size=pr.class_space(k, da).dim)
        cb = rng.integers(0, 2, size=pr.class_space(k, db).dim)
        x, y = pr.TateClass(k, da, ca), pr.TateClass(k, db, cb)
        assert pr.chi(m, pr.multiply(x, y)) == pr.multiply(pr.chi(m, x), pr.chi(m, y))


def test_pairing_bilinear_and_adjoint_on_k():
    s = al.AlgebraSpec(2, 2, ("X", "Y"))
    k = al.trivial_module(s)
    # adjunction <ab, c> = <a, bc> across a degree split
    for a in pr.basis_classes(k, 1):
        for b in pr.basis_classes(k, 1):
            for c in pr.basis_classes(k, -3):
                lhs = pr.pairing(pr.multiply(a, b), c)
                rhs = pr.pairing(a, pr.multiply(b, c))
                assert lhs == rhs


def test_duality_matrices_have_full_rank():
    s = al.AlgebraSpec(2, 2, ("X", "Y"))
    k = al.trivial_module(s)
    for n in [-1, 0, 1, 2]:
        d = pr.duality_matrix(k, n)
        assert d.shape[0] == d.shape[1] == st.ext_hat_dim(k, k, n)
        assert mat_rank(d, 2) == d.shape[0]
    m = module_7_1()
    d0 = pr.duality_matrix(m, 0)
    assert mat_rank(d0, 2) == d0.shape[0] == st.ext_hat_dim(m, m, 0)

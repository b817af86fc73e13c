"""Products on Tate cohomology via chain-map lifting.

A class alpha in Ext-hat^a(M, M) is a stable map Omega^a M -> M.  It
lifts to a chain map of the complete resolution, one free level at a
time: upward steps use projectivity of the free levels and exactness of
the target; downward steps extend a map off a syzygy across its
embedding into the previous free level, which is possible because the
algebra is self-injective — concretely, the extension problem is
dualized through the antipode-twisted identification of a free module
with its dual, where it becomes a lifting problem through a surjection
and is solved generator by generator.

The product alpha.beta is composition: lift beta to a chain map, read
off the induced map Omega^(a+b) M -> Omega^a M (the "omega
restriction"), and postcompose the representative of alpha.  Everything
lands back in canonical class coordinates, so equality of products is
decidable exactly.
"""
from __future__ import annotations

import numpy as np

from .algebra import ModuleRep, hom_k, hom_unvec, hom_vec, trivial_module
from .linalg import solve_many
from .resolution import (TensorResolution, _psi, _psi_inv, resolution_of,
                         tensor_resolution, trivial_resolution)
from .stable import StableHom, stable_hom


def _gencols(rank: int, d: int) -> list[int]:
    return list(range(0, rank * d, d))


def module_map_from_generators(W: ModuleRep, Y: np.ndarray) -> np.ndarray:
    """k-matrix of the module map L^t -> W sending generator j to Y[:, j]."""
    spec = W.spec
    p, d = spec.p, spec.dim
    t = Y.shape[1]
    out = np.zeros((W.dim, t * d), dtype=np.int64)
    for ei, e in enumerate(spec.monomials()):
        out[:, ei::d] = (W.monomial_action(e) @ Y) % p
    return out


class ChainMap:
    """A chain map F: src -> tgt of homological degree ``shift``.

    Level j is a k-matrix P_j(src) -> P_{j-shift}(tgt) and the square
    d^tgt . F_j = F_{j-1} . d^src holds wherever adjacent levels exist.
    """

    def __init__(self, src, tgt, shift: int):
        if src.spec != tgt.spec:
            raise ValueError("chain map between resolutions over different algebras")
        self.src, self.tgt, self.shift = src, tgt, shift
        self.spec = src.spec
        self._restriction_cache: dict[int, np.ndarray] = {}

    def level(self, j: int) -> np.ndarray:  # pragma: no cover - interface
        raise NotImplementedError

    def check_square(self, j: int) -> None:
        p = self.spec.p
        lhs = (self.tgt.boundary(j - self.shift) @ self.level(j)) % p
        rhs = (self.level(j - 1) @ self.src.boundary(j)) % p
        if not np.array_equal(lhs, rhs):
            raise AssertionError(f"chain square fails at level {j}")

    def omega_restriction(self, j: int) -> np.ndarray:
        """Induced map omega^j(src) -> omega^(j-shift)(tgt).

        Solves embed . Y = F_(j-1) . embed, using that the chain square
        at level j forces the image to land in the target syzygy.
        """
        if j in self._restriction_cache:
            return self._restriction_cache[j]
        p = self.spec.p
        self.check_square(j)
        rhs = (self.level(j - 1) @ self.src.embed(j)) % p
        Y, ok = solve_many(self.tgt.embed(j - self.shift), rhs, p)
        if not ok.all():
            raise AssertionError("chain map does not restrict to the syzygy")
        self._restriction_cache[j] = Y
        return Y


class LiftedChainMap(ChainMap):
    """Chain map lifted from a stable map phi: Omega^s(src) -> module(tgt).

    The base level F_s covers phi (proj . F_s = phi . proj); levels grow
    on demand in both directions, each one a batch of per-generator
    linear solves.
    """

    def __init__(self, src, tgt, shift: int, phi: np.ndarray):
        super().__init__(src, tgt, shift)
        self.phi = np.asarray(phi, dtype=np.int64) % self.spec.p
        self._levels: dict[int, np.ndarray] = {}
        self._lo = self._hi = shift
        self._levels[shift] = self._base_level()

    def _base_level(self) -> np.ndarray:
        p, d = self.spec.p, self.spec.dim
        s = self.shift
        rhs_full = (self.phi @ self.src.proj(s)) % p
        cols = _gencols(self.src.rank(s), d)
        Y, ok = solve_many(self.tgt.proj(0), rhs_full[:, cols], p)
        if not ok.all():
            raise AssertionError("projective cover failed to lift the class map")
        F = module_map_from_generators(self.tgt.free(0), Y)
        if not np.array_equal((self.tgt.proj(0) @ F) % p, rhs_full):
            raise AssertionError("base square of the lift does not commute")
        return F

    def _step_up(self, j: int) -> np.ndarray:
        p, d = self.spec.p, self.spec.dim
        below = self._levels[j - 1]
        rhs_full = (below @ self.src.boundary(j)) % p
        cols = _gencols(self.src.rank(j), d)
        Z, ok = solve_many(self.tgt.embed(j - self.shift), rhs_full[:, cols], p)
        if not ok.all():
            raise AssertionError("upward lifting hit an inconsistent solve")
        Y = (self.tgt.section(j - self.shift) @ Z) % p
        return module_map_from_generators(self.tgt.free(j - self.shift), Y)

    def _step_down(self, j: int) -> np.ndarray:
        """Extend off the syzygy at level j+1 to produce level j.

        tau is the map Omega^(j+1)(src) -> P_(j-shift)(tgt) that the
        already-built level above forces; it is extended to all of
        P_j(src) by dualizing: the embedding dualizes to a surjection,
        where a per-generator lift always exists, and dualizing back
        gives the extension.
        """
        p, d = self.spec.p, self.spec.dim
        spec = self.spec
        above = self._levels[j + 1]
        tau = (self.tgt.boundary(j + 1 - self.shift) @ above @ self.src.section(j + 1)) % p
        E = self.src.embed(j + 1)
        t = self.src.rank(j)
        s2 = self.tgt.rank(j - self.shift)
        psi_t = _psi(spec, t)
        e_std = (E.T @ psi_t) % p
        tau_std = (tau.T @ _psi(spec, s2)) % p
        Z, ok = solve_many(e_std, tau_std[:, _gencols(s2, d)], p)
        if not ok.all():
            raise AssertionError("dualized extension hit an inconsistent solve")
        g_star = module_map_from_generators(self.src.free(j), Z)
        G = (psi_t @ g_star @ _psi_inv(spec, s2)).T % p
        if not np.array_equal((G @ E) % p, tau):
            raise AssertionError("extension does not restrict to the forced map")
        return G

    def ensure(self, lo: int, hi: int) -> "LiftedChainMap":
        while self._hi < hi:
            self._hi += 1
            self._levels[self._hi] = self._step_up(self._hi)
            self.check_square(self._hi)
        while self._lo > lo:
            self._lo -= 1
            self._levels[self._lo] = self._step_down(self._lo)
            self.check_square(self._lo + 1)
        return self

    def level(self, j: int) -> np.ndarray:
        self.ensure(min(j, self._lo), max(j, self._hi))
        return self._levels[j]


class FixedChainMap(ChainMap):
    """Chain map whose levels come from a provider function."""

    def __init__(self, src, tgt, shift: int, provider):
        super().__init__(src, tgt, shift)
        self._provider = provider
        self._levels: dict[int, np.ndarray] = {}

    def level(self, j: int) -> np.ndarray:
        if j not in self._levels:
            self._levels[j] = np.asarray(self._provider(j), dtype=np.int64) % self.spec.p
        return self._levels[j]


def compose_chain_maps(a: ChainMap, b: ChainMap) -> ChainMap:
    """The composite a . b (b first), of degree a.shift + b.shift."""
    if a.src is not b.tgt and a.src != b.tgt:
        raise ValueError("chain maps not composable")
    p = a.spec.p

    def provider(j):
        return (a.level(j - b.shift) @ b.level(j)) % p

    return FixedChainMap(b.src, a.tgt, a.shift + b.shift, provider)


def tensor_extend(zeta: ChainMap, tres: TensorResolution) -> ChainMap:
    """Extend a chain map on the resolution of k to the tensor resolution.

    Level j of zeta (x) id is the untwist conjugate of kron(Z_j, I_M).
    """
    if zeta.src is not tres.base and zeta.src != tres.base:
        raise ValueError("chain map does not live on the base resolution")
    p = tres.spec.p
    m = tres.module.dim
    eye = np.eye(m, dtype=np.int64)

    def provider(j):
        nat = np.kron(zeta.level(j), eye)
        return (tres.untwist_inv(j - zeta.shift) @ nat @ tres.untwist(j)) % p

    return FixedChainMap(tres, tres, zeta.shift, provider)


# ---------------------------------------------------------------------------
# classes and their arithmetic


class TateClass:
    """An element of Ext-hat^degree(M, M) in canonical coordinates."""

    __slots__ = ("module", "degree", "coords")

    def __init__(self, module: ModuleRep, degree: int, coords):
        self.module = module
        self.degree = degree
        self.coords = tuple(int(c) % module.spec.p for c in coords)

    def __eq__(self, other):
        return (isinstance(other, TateClass) and self.degree == other.degree
                and self.coords == other.coords and self.module == other.module)

    def __repr__(self):
        return f"TateClass(degree={self.degree}, coords={self.coords})"

    def is_zero(self) -> bool:
        return not any(self.coords)


def class_space(M: ModuleRep, n: int) -> StableHom:
    return stable_hom(resolution_of(M).omega(n), M)


def tate_class(M: ModuleRep, n: int, matrix: np.ndarray) -> TateClass:
    return TateClass(M, n, class_space(M, n).coords(matrix))


def rep_matrix(cls: TateClass) -> np.ndarray:
    return class_space(cls.module, cls.degree).matrix(np.array(cls.coords))


def unit_class(M: ModuleRep) -> TateClass:
    return tate_class(M, 0, np.eye(M.dim, dtype=np.int64))


def zero_class(M: ModuleRep, n: int) -> TateClass:
    return TateClass(M, n, [0] * class_space(M, n).dim)


def basis_classes(M: ModuleRep, n: int) -> list[TateClass]:
    dim = class_space(M, n).dim
    out = []
    for i in range(dim):
        coords = [0] * dim
        coords[i] = 1
        out.append(TateClass(M, n, coords))
    return out


def add_classes(x: TateClass, y: TateClass) -> TateClass:
    if x.degree != y.degree or x.module != y.module:
        raise ValueError("classes live in different groups")
    p = x.module.spec.p
    return TateClass(x.module, x.degree,
                     [(a + b) % p for a, b in zip(x.coords, y.coords)])


def scale_class(c: int, x: TateClass) -> TateClass:
    p = x.module.spec.p
    return TateClass(x.module, x.degree, [(c * a) % p for a in x.coords])


_LIFT_CACHE: dict[tuple, LiftedChainMap] = {}


def lifted_chain_map(x: TateClass) -> LiftedChainMap:
    """The (cached) chain-map lift of a class on its own resolution."""
    key = (x.module.content_key(), x.degree, x.coords)
    if key not in _LIFT_CACHE:
        res = resolution_of(x.module)
        _LIFT_CACHE[key] = LiftedChainMap(res, res, x.degree, rep_matrix(x))
    return _LIFT_CACHE[key]


def evict_lift(x: TateClass) -> None:
    """Drop the cached chain-map lift of x.

    Lifts extended through deep windows hold one matrix per level;
    sweeps that multiply by many distinct classes exactly once should
    evict each lift after use to keep memory flat.
    """
    _LIFT_CACHE.pop((x.module.content_key(), x.degree, x.coords), None)


def multiply(x: TateClass, y: TateClass) -> TateClass:
    """The composition product x.y (y acts first)."""
    if x.module != y.module:
        raise ValueError("classes on different modules")
    M = x.module
    a, b = x.degree, y.degree
    if a == 0:
        phi = (rep_matrix(x) @ rep_matrix(y)) % M.spec.p
    else:
        lift = lifted_chain_map(y)
        lift.ensure(min(b, a + b - 1), max(b, a + b))
        restr = lift.omega_restriction(a + b)
        phi = (rep_matrix(x) @ restr) % M.spec.p
    return tate_class(M, a + b, phi)


def power(x: TateClass, k: int) -> TateClass:
    if k < 1:
        raise ValueError("power expects a positive exponent")
    out = x
    for _ in range(k - 1):
        out = multiply(out, x)
    return out


# ---------------------------------------------------------------------------
# transporting k-classes to End(M): the algebra map H -> Ext-hat(M, M)


_COMPARISON: dict[str, tuple[ChainMap, ChainMap]] = {}


def comparison_maps(M: ModuleRep) -> tuple[ChainMap, ChainMap]:
    """Chain maps Phi: R(M) -> T(M) and Psi: T(M) -> R(M) lifting id_M."""
    key = M.content_key()
    if key not in _COMPARISON:
        res = resolution_of(M)
        tres = tensor_resolution(M)
        ident = np.eye(M.dim, dtype=np.int64)
        _COMPARISON[key] = (LiftedChainMap(res, tres, 0, ident),
                            LiftedChainMap(tres, res, 0, ident))
    return _COMPARISON[key]


def _extract_to_module(F: ChainMap, s: int) -> np.ndarray:
    """Representative Omega^s(src) -> module(tgt) of a degree-s chain map."""
    p = F.spec.p
    F.check_square(s)
    rhs = (F.level(s - 1) @ F.src.embed(s)) % p
    phi, ok = solve_many(F.tgt.embed(0), rhs, p)
    if not ok.all():
        raise AssertionError("chain map does not induce a map to the module")
    return phi


def chi(M: ModuleRep, kclass: TateClass) -> TateClass:
    """Image of a k-class under - (x) M: the unit map H -> Ext-hat(M, M)."""
    k = trivial_module(M.spec)
    if kclass.module != k:
        raise ValueError("chi expects a class on the trivial module")
    s = kclass.degree
    phi_mk, psi_mk = comparison_maps(M)
    zt = tensor_extend(lifted_chain_map(kclass), tensor_resolution(M))
    composite = compose_chain_maps(psi_mk, compose_chain_maps(zt, phi_mk))
    return tate_class(M, s, _extract_to_module(composite, s))


def class_of_chain_map(M: ModuleRep, F: ChainMap) -> TateClass:
    return tate_class(M, F.shift, _extract_to_module(F, F.shift))


# ---------------------------------------------------------------------------
# cocycles on the labelled resolution with values in End(M)
#
# Hom_Lambda(P (x) M, M) = Hom_Lambda(P, Hom_k(M, M)) with the adjoint
# action on Hom_k; a class of Ext-hat^n(M, M) therefore has a
# representative cocycle on the labelled resolution of k determined by
# one endomorphism of M per degree-n label.  This is the coordinate
# system in which small examples are usually written down by hand.


def adjoint_cocycle_of_class(x: TateClass) -> np.ndarray:
    """Endomorphism values, one per degree-n label, of a representative.

    Returns an array of shape (number of labels, dim M, dim M); entry a
    is the value on the generator with label
    ``trivial_resolution(spec).labels(n)[a]``.
    """
    M = x.module
    p, m = M.spec.p, M.dim
    n = x.degree
    res = resolution_of(M)
    tres = tensor_resolution(M)
    _, psi_mk = comparison_maps(M)
    c_res = (rep_matrix(x) @ res.proj(n)) % p
    c_t = (c_res @ psi_mk.level(n)) % p
    c_nat = (c_t @ tres.untwist_inv(n)) % p
    d = M.spec.dim
    base_rank = tres.base.rank(n)
    out = np.zeros((base_rank, m, m), dtype=np.int64)
    for a in range(base_rank):
        out[a] = c_nat[:, a * d * m: a * d * m + m]
    return out


def class_of_adjoint_cocycle(M: ModuleRep, n: int, values) -> TateClass:
    """The class of the cocycle with the given endomorphism values.

    ``values[a]`` is the endomorphism assigned to the degree-n label
    ``trivial_resolution(spec).labels(n)[a]``; the unique equivariant
    extension is checked to be a cocycle (ValueError otherwise) and its
    class is returned in canonical coordinates.
    """
    spec = M.spec
    p, d, m = spec.p, spec.dim, M.dim
    tres = tensor_resolution(M)
    base_rank = tres.base.rank(n)
    values = np.asarray(values, dtype=np.int64) % p
    if values.shape != (base_rank, m, m):
        raise ValueError(
            f"expected {base_rank} endomorphism values of shape "
            f"({m}, {m}), got array of shape {values.shape}")
    H = hom_k(M, M)
    c_nat = np.zeros((m, base_rank * d * m), dtype=np.int64)
    for a in range(base_rank):
        fa = hom_vec(values[a])
        for ei, e in enumerate(spec.monomials()):
            block = hom_unvec(H.monomial_action(e) @ fa % p, m, m)
            col = a * d * m + ei * m
            c_nat[:, col: col + m] = block
    c_t = (c_nat @ tres.untwist(n)) % p
    if ((c_t @ tres.boundary(n + 1)) % p).any():
        raise ValueError("generator values do not define a cocycle")
    phi_t = (c_t @ tres.section(n)) % p
    phi_mk, _ = comparison_maps(M)
    restr = phi_mk.omega_restriction(n)
    return tate_class(M, n, (phi_t @ restr) % p)


# ---------------------------------------------------------------------------
# the duality pairing


def pairing(x: TateClass, y: TateClass) -> int:
    """Trace pairing <x, y> for degrees summing to -1.

    The product class is converted to a cocycle on the tensor
    resolution; by tensor-hom adjunction its value on the canonical
    degree -1 generator of the resolution of k is an endomorphism of M,
    and the pairing is that endomorphism's trace.
    """
    if x.degree + y.degree != -1:
        raise ValueError("pairing needs degrees summing to -1")
    return class_pairing_value(multiply(x, y))


def class_pairing_value(z: TateClass) -> int:
    if z.degree != -1:
        raise ValueError("pairing value lives on degree -1 classes")
    M = z.module
    p, m = M.spec.p, M.dim
    res = resolution_of(M)
    tres = tensor_resolution(M)
    _, psi_mk = comparison_maps(M)
    c_res = (rep_matrix(z) @ res.proj(-1)) % p
    c_t = (c_res @ psi_mk.level(-1)) % p
    c_nat = (c_t @ tres.untwist_inv(-1)) % p
    adj = c_nat[:, :m]
    return int(np.trace(adj) % p)


def duality_matrix(M: ModuleRep, n: int) -> np.ndarray:
    """Gram matrix of the pairing Ext-hat^n x Ext-hat^(-n-1) -> k."""
    rows = basis_classes(M, n)
    cols = basis_classes(M, -n - 1)
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, a in enumerate(rows):
        for j, b in enumerate(cols):
            out[i, j] = pairing(a, b)
    return out

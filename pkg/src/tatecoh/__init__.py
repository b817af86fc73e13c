"""tatecoh: complete cohomology rings over truncated polynomial group algebras.

Computes Ext-hat rings of finitely generated modules over
k[X_1..X_r]/(X_i^p), k = GF(p): complete resolutions, stable Hom,
products in all degrees, the polynomial-part action, growth ideals,
duality pairings, and nilpotency scans for the negative part.
"""

from .algebra import AlgebraSpec, ModuleRep, free_module, trivial_module
from .analysis import (BOUNDED, FINITE, GROWTH, INCONCLUSIVE, DegreeIdeals,
                       GrowthBoundReport, GrowthReport, InjectivityReport,
                       NilpotencyReport, PeriodicityResult, RadicalReport,
                       growth_bound_check, h_generators, ideal_scan,
                       module_generators, nilpotency_scan, orbit_growth,
                       periodicity_check, radical_nilpotence,
                       tail_ideal_window, verify_ideal_closure,
                       zeta_injectivity, zeta_tail_bijectivity)
from .products import (TateClass, add_classes, adjoint_cocycle_of_class,
                       basis_classes, class_of_adjoint_cocycle, chi,
                       duality_matrix, multiply, pairing, power, scale_class,
                       tate_class, unit_class, zero_class)
from .resolution import WindowError, resolution_of
from .stable import ext_hat_dim, ext_table, hom_dim, stable_hom

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec", "ModuleRep", "free_module", "trivial_module",
    "BOUNDED", "FINITE", "GROWTH", "INCONCLUSIVE", "DegreeIdeals",
    "GrowthBoundReport", "GrowthReport", "InjectivityReport",
    "NilpotencyReport", "PeriodicityResult", "RadicalReport",
    "growth_bound_check", "h_generators", "ideal_scan",
    "module_generators", "nilpotency_scan", "orbit_growth",
    "periodicity_check", "radical_nilpotence", "tail_ideal_window",
    "verify_ideal_closure", "zeta_injectivity", "zeta_tail_bijectivity",
    "TateClass", "add_classes", "adjoint_cocycle_of_class",
    "basis_classes", "class_of_adjoint_cocycle", "chi", "duality_matrix",
    "multiply", "pairing", "power", "scale_class", "tate_class",
    "unit_class", "zero_class",
    "WindowError", "resolution_of",
    "ext_hat_dim", "ext_table", "hom_dim", "stable_hom",
]

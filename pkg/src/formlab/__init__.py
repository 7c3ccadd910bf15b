"""formlab: finite permutation groups, saturated formations, and verification
suites for maximal-subgroup intersection theory."""

from __future__ import annotations

from .config import DEFAULT_BUDGETS, DEFAULT_SAMPLE, DEFAULT_SEED, Budgets
from .constructions import (ActionSpec, CatalogEntry, SemidirectProduct,
                            WreathProduct, direct_product, load_bundled_catalog,
                            load_catalog, semidirect_product, standard,
                            wreath_regular)
from .errors import CatalogError, ResourceLimitError
from .formations import (ABELIAN, DERIVED_NILPOTENT, NILPOTENT, SOLUBLE,
                         SUPERSOLUBLE, TRIVIAL, TWO_PRIME_SUPERSOLUBLE,
                         Formation, base_registry, boundary_scan,
                         f_maximal_subgroups, formation_from_spec,
                         fp_membership, genz_star, hall_partition, int_f,
                         is_f_central, is_f_critical, membership,
                         nilpotent_length_formation, p_decomposable,
                         p_nilpotent, p_supersoluble, psi_e, radical,
                         residual, s_quasinormal_cyclics, z_f)
from .lattice import (SubgroupLattice, all_subgroups, chief_factor_orders,
                      chief_series, frattini_subgroup, hall_subgroup,
                      maximal_subgroups, minimal_normal_subgroups,
                      normal_subgroups, set_product)
from .permcore import (PermGroup, Permutation, Subgroup, center, centralizer,
                       conjugacy_classes, derived_subgroup, fitting_subgroup,
                       group_from_generators, is_isomorphic, quotient,
                       structural_series, subgroup_generated, sylow_subgroup)
from .reports import VerificationReport
from .theorems import (MUTATION_CASES, MutationCase, run_suite,
                       search_int_vs_z, verify_baer, verify_example_513,
                       verify_t51, verify_t54, verify_t59, verify_t510,
                       verify_theorem_a, verify_theorem_b, verify_theorem_c)

__version__ = "0.1.0"

__all__ = [
    "ABELIAN", "ActionSpec", "Budgets", "CatalogEntry", "CatalogError",
    "DEFAULT_BUDGETS", "DEFAULT_SAMPLE", "DEFAULT_SEED", "DERIVED_NILPOTENT",
    "Formation", "MUTATION_CASES", "MutationCase", "NILPOTENT", "PermGroup",
    "Permutation", "ResourceLimitError", "SOLUBLE", "SUPERSOLUBLE",
    "SemidirectProduct", "Subgroup", "SubgroupLattice", "TRIVIAL",
    "TWO_PRIME_SUPERSOLUBLE", "VerificationReport", "WreathProduct",
    "all_subgroups", "base_registry", "boundary_scan", "center",
    "centralizer", "chief_factor_orders", "chief_series",
    "conjugacy_classes", "derived_subgroup", "direct_product",
    "f_maximal_subgroups", "fitting_subgroup", "formation_from_spec",
    "fp_membership", "frattini_subgroup", "genz_star",
    "group_from_generators", "hall_partition", "hall_subgroup", "int_f",
    "is_f_central", "is_f_critical", "is_isomorphic", "load_bundled_catalog",
    "load_catalog", "maximal_subgroups", "membership",
    "minimal_normal_subgroups", "nilpotent_length_formation",
    "normal_subgroups", "p_decomposable", "p_nilpotent", "p_supersoluble",
    "psi_e", "quotient", "radical", "residual", "run_suite",
    "s_quasinormal_cyclics", "search_int_vs_z", "semidirect_product",
    "set_product", "standard", "structural_series", "subgroup_generated",
    "sylow_subgroup", "verify_baer", "verify_example_513", "verify_t51",
    "verify_t510", "verify_t54", "verify_t59", "verify_theorem_a",
    "verify_theorem_b", "verify_theorem_c", "wreath_regular", "z_f",
]

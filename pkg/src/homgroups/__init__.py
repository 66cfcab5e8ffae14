"""Exact computational toolkit for finite Hom-groups."""

from .core import (
    AxiomReport,
    CayleyTable,
    FiniteGroup,
    HomGroup,
    InvalidStructureError,
    Permutation,
    PowerOrbit,
    alpha_apply,
    inverse_of,
    is_abelian,
    left_divide,
    left_power,
    mul,
    power_orbit,
    right_divide,
    right_power,
    verify,
)
from .constructions import (
    NotAutomorphismError,
    automorphisms_of,
    cyclic_group,
    dihedral_group,
    direct_product,
    fixture,
    inner_automorphism,
    is_automorphism,
    twist,
)
from .subgroups import (
    CauchyReport,
    Coset,
    LagrangeReport,
    SubsetHandle,
    cauchy_search,
    center,
    centralizer,
    coset,
    coset_partition,
    enumerate_hom_subgroups,
    is_hom_subgroup,
    lagrange_check,
    subgroup_defect,
)
from .classify import (
    ClassificationReport,
    OrderGuardError,
    SearchConfig,
    are_isomorphic,
    canonical_form,
    classify_order,
    enumerate_hom_groups,
    reduce_to_classes,
    relabel,
)
from .homhopf import (
    FormalElement,
    FormalTensor,
    GroupHopfAlgebra,
    build_group_hopf,
    center_hopf_dim,
    is_cocommutative,
    is_commutative,
    sub_hopf_dims,
    verify_hom_hopf,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "CayleyTable",
    "CauchyReport",
    "ClassificationReport",
    "Coset",
    "FiniteGroup",
    "FormalElement",
    "FormalTensor",
    "GroupHopfAlgebra",
    "HomGroup",
    "InvalidStructureError",
    "LagrangeReport",
    "NotAutomorphismError",
    "OrderGuardError",
    "Permutation",
    "PowerOrbit",
    "SearchConfig",
    "SubsetHandle",
    "alpha_apply",
    "are_isomorphic",
    "automorphisms_of",
    "build_group_hopf",
    "canonical_form",
    "cauchy_search",
    "center",
    "center_hopf_dim",
    "centralizer",
    "classify_order",
    "coset",
    "coset_partition",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "enumerate_hom_groups",
    "enumerate_hom_subgroups",
    "fixture",
    "inner_automorphism",
    "inverse_of",
    "is_abelian",
    "is_automorphism",
    "is_cocommutative",
    "is_commutative",
    "is_hom_subgroup",
    "lagrange_check",
    "left_divide",
    "left_power",
    "mul",
    "power_orbit",
    "reduce_to_classes",
    "relabel",
    "right_divide",
    "right_power",
    "sub_hopf_dims",
    "subgroup_defect",
    "twist",
    "verify",
    "verify_hom_hopf",
]

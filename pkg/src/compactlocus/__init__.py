"""Compactness loci of finite localizations and inflation functors for finite groups."""

from .catalog import by_name as group
from .errors import LocusError
from .groups import (
    Permutation,
    PermGroup,
    Subgroup,
    SubgroupClass,
    family_from_predicate,
    group_from_generators,
    is_p_subnormal,
    o_p,
    subgroup_classes,
)
from .kernels import BACKEND
from .loci import (
    EqLocus,
    absolute_geometric_fixed_locus,
    geometric_fixed_locus,
    inflation_locus,
    locus_contains,
    locus_intersect,
    locus_union,
    n_free_locus,
    orbit_support,
    spectrum,
)
from .render import render_chromatic, render_eq_locus, render_poset
from .spaces import (
    ChromaticSpace,
    ChromaticSubset,
    FinitePoset,
    PosetSubset,
    finite_localization_locus,
    is_clopen,
    largest_specialization_closed_inside,
    sh_localization_locus,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ChromaticSpace",
    "ChromaticSubset",
    "EqLocus",
    "FinitePoset",
    "LocusError",
    "PermGroup",
    "Permutation",
    "PosetSubset",
    "Subgroup",
    "SubgroupClass",
    "absolute_geometric_fixed_locus",
    "family_from_predicate",
    "finite_localization_locus",
    "geometric_fixed_locus",
    "group",
    "group_from_generators",
    "inflation_locus",
    "is_clopen",
    "is_p_subnormal",
    "largest_specialization_closed_inside",
    "locus_contains",
    "locus_intersect",
    "locus_union",
    "n_free_locus",
    "o_p",
    "orbit_support",
    "render_chromatic",
    "render_eq_locus",
    "render_poset",
    "sh_localization_locus",
    "spectrum",
    "subgroup_classes",
]

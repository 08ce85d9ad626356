"""Chasles configurations, sparse resultants and the extra-point map.

A configuration ``A`` in ``Z^d`` with ``|A| + 1 = vol(A) + d`` has the
property that polynomials supported on ``A`` vanishing at ``N = vol(A) - 1``
generic torus points share exactly one more torus zero, and that zero is a
rational function of the given points.  This package decides the counting
conditions exactly, computes the extra point exactly and cross-checks it
numerically.
"""

from .chasles_core import (
    ChaslesReport,
    ChaslesStructure,
    ExtraPointResult,
    extra_point,
    extra_point_via_eliminant,
    family_pq,
    is_chasles_configuration,
    is_chasles_structure,
    structure_basis,
)
from .classifier import (
    EquivalenceClass,
    canonical_form,
    classify_planar_saturated_chasles,
    equivalence_witness,
    equivalent,
)
from .errors import ChaslesError, DegeneracyError, InputError
from .lattice_geometry import (
    LatticeConfiguration,
    LatticePolytope,
    UnimodularMap,
    apply_unimodular,
    convex_hull,
    dimension,
    facet_normals,
    is_saturated,
    lattice_points,
    minkowski_sum,
    mixed_volume,
    normalized_volume,
    pick_counts,
)
from .polynomials import LaurentPolynomial, RationalPoint, restrict_to_face, substitute, vanishing_space
from .resultants import (
    directional_resultant,
    mu_exponent_1d,
    product_of_coordinates,
    resultant,
    sylvester_resultant,
)
from .solver_numeric import TorusRootList, count_torus_roots, solve_2d, univariate_roots

__all__ = [
    "ChaslesError", "ChaslesReport", "ChaslesStructure", "DegeneracyError", "EquivalenceClass",
    "ExtraPointResult", "InputError", "LatticeConfiguration", "LatticePolytope", "LaurentPolynomial",
    "RationalPoint", "TorusRootList", "UnimodularMap", "apply_unimodular", "canonical_form",
    "classify_planar_saturated_chasles", "convex_hull", "count_torus_roots", "dimension",
    "directional_resultant", "equivalence_witness", "equivalent", "extra_point",
    "extra_point_via_eliminant", "facet_normals", "family_pq", "is_chasles_configuration",
    "is_chasles_structure", "is_saturated", "lattice_points", "minkowski_sum", "mixed_volume",
    "mu_exponent_1d", "normalized_volume", "pick_counts", "product_of_coordinates",
    "restrict_to_face", "resultant", "solve_2d", "structure_basis", "substitute",
    "sylvester_resultant", "univariate_roots", "vanishing_space",
]

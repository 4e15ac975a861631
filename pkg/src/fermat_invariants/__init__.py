"""Characteristic-p invariants of Fermat curves and surfaces, computed exactly."""
from .curve import (
    BasisIndex,
    SignedMonomialMap,
    curve_a_number,
    frobenius_image,
    frobenius_matrix,
    frobenius_pattern,
    genus,
    is_bijective,
    is_zero_map,
    xi_basis,
)
from .product import CurveFrobeniusData, is_ordinary, product_a_number, rank_mod_p
from .relations import InvariantReport, InvariantStatus, check_calabi_yau_bound, infer
from .residue import ResidueContext, bar, inv_mod, make_context, residue_context
from .surface import (
    HeightClass,
    InvariantPair,
    SurfaceInvariants,
    YTriple,
    cardinality_symmetry_check,
    enumerate_Y,
    height_class,
    hodge_numbers,
    invariant_pairs,
    surface_a_bruteforce,
    surface_a_closedform,
    surface_a_tensor,
    surface_invariants,
)

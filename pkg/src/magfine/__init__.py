"""Exact computations with the free magmatic algebra, its coassociative
coproduct and the primitive operad MagFine."""

from magfine.coalgebra import (
    TensorElement,
    alpha,
    decomposition_check,
    delta,
    delta_power,
    filtration_degree,
    full_coproduct,
    idempotent_e,
    is_primitive,
)
from magfine.magma import (
    MagElement,
    associator,
    expand_fine_monomial,
    generator,
    left_comb,
    mag_product,
    mu,
    right_comb,
    unit,
)
from magfine.primitives import (
    comb_decomposition_dims,
    delta_matrix,
    fine_image_basis,
    multilinear_basis,
    prim_basis,
)
from magfine.series import TruncatedSeries, fine_series, prelie_quotient_dims, sabinin_dims, vallette_check
from magfine.trees import (
    LEAF,
    FineNode,
    Vee,
    decode,
    encode,
    enumerate_binary,
    enumerate_fine,
    graft,
    left_comb_tree,
    right_comb_tree,
    split,
)

__version__ = "0.1.0"

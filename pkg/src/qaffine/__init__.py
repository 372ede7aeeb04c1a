"""Exact spectral combinatorics of quantum affine algebras.

Denominator polynomials between fundamental representations, the block
invariants they induce, the hidden simply-laced root system attached to
each of the fourteen affine families, and block labels for module lists --
all in exact cyclotomic/rational arithmetic.
"""

from .affine import (
    AffineData,
    AffineType,
    Family,
    RankOutOfRange,
    build,
    build_type,
    component_class,
    in_sigma_z,
    parse_type_string,
    sigma_eq,
)
from .blocks import BlockLabel, GramResult, NotInW0, UnclassifiablePoint, block_label, delta0, gram, partition_blocks, psi_lattice
from .denominators import RootMultiset, denominator, denominator_factors, zero_order
from .invariants import (
    DecompositionUnavailable,
    SigmaFunction,
    SigmaPoint,
    SumNotStabilized,
    de,
    dual_shift,
    e_of,
    lambda_,
    lambda_inf,
    pairing,
    parse_sigma_point,
    s_func,
    sigma_point,
)
from .qcartan import CTildeTable, ade_quiver, ctilde_formula, ctilde_oracle
from .qdata import (
    InvalidQDatum,
    NotInHatIQ,
    QDatum,
    custom_qdatum,
    default_qdatum,
    i_q,
    phi_q,
    phi_q_map,
    psi_q,
    sigma_q_points,
    sigma_q_window,
    tau_q,
    validate_qdatum,
)
from .roots import FinRootSystem, FinWeight, apply_word, reflect, root_system
from .scalars import (
    ParseError,
    RootOutsideDomain,
    SpectralScalar,
    nth_roots,
    parse_scalar,
    print_scalar,
    scalar,
)

__version__ = "0.1.0"

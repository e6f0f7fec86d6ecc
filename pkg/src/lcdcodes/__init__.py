"""Binary LCD codes of dimension 2: closed form, constructions and search oracles."""

from .codes import (
    ColumnPermutation,
    LinearCode,
    is_lcd,
    k2_distance,
    min_distance,
    permute_columns,
    row_transform,
    standard_form,
)
from .constructions import construct_family_a, construct_family_b, construct_optimal
from .errors import (
    DegenerateCodeError,
    DimensionError,
    DomainError,
    InfeasibleSizeError,
    InvalidTransformError,
    MatrixParseError,
)
from .formula import NDecomposition, decompose, lcd_n2_formula
from .gf2 import (
    BitWord,
    Gf2Matrix,
    det,
    gram,
    mat_mul,
    mat_transpose,
    rank,
    rref,
    weight,
    word_add,
    word_dot,
)
from .oracle import (
    OracleResult,
    WeightProfile,
    gaussian_binomial,
    oracle_exhaustive,
    oracle_pairs,
    oracle_profile,
    profile_distance,
    profile_is_lcd,
    profile_to_matrix,
)

__version__ = "0.1.0"

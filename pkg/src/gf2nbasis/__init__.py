"""Efficient bases of binary field extensions F_{2^n}/F_2.

Gaussian normal bases with cyclic-ring multiplication, feasibility
searches for normal bases from algebraic groups, and degree-2/3/4 tower
extensions over a GNB subfield, plus scanners that regenerate the
reference parameter tables.
"""
from .algebraic import (
    EmbeddingResult,
    NqProfile,
    compute_nq,
    enb_embedding_degree,
    multgroup_embedding_degree,
)
from .backend import ACTIVE as ACTIVE_BACKEND
from .errors import (
    FormatError,
    GF2Error,
    ImageError,
    InternalInvariantError,
    KummerCubeError,
    KummerUnavailableError,
    NotNormalBasisError,
    ParameterError,
)
from .gauss import (
    GnbElement,
    GnbParams,
    MultTable,
    build_params,
    embed_phi,
    gnb_exists,
    gnb_inverse,
    gnb_mul,
    gnb_pow,
    gnb_type_ok,
    lowest_type,
    mult_table,
    project_back,
)
from .gf2x import (
    BinaryPolynomial,
    ZechField,
    is_irreducible,
    modpow,
    mul_karatsuba,
    mul_schoolbook,
    mulmod_cyclic,
    zech_build,
)
from .numtheory import Factorization, divisors, factorize, is_prime, mult_order
from .tables import (
    EnbRow,
    ExtRow,
    GnbRow,
    diff_golden,
    emit_csv,
    enb_range,
    ext_range,
    gnb_range,
    kummer_filter,
)
from .towers import (
    OpCounters,
    OracleTower,
    TowerElement,
    TowerParams,
    as2_mul,
    build_as2,
    build_kummer3,
    build_witt4,
    kummer3_mul,
    minpoly_gauss_period,
    oracle_mul,
    tower_mul,
    witt4_mul,
)

__version__ = "0.1.0"

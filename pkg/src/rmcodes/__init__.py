"""Reed-Muller code families in the modular algebra F_p[x]/(x_k^p - 1).

Generalized, weighted, and homogeneous constructions with matching
(x-1)-product bases, closed-form parameter calculators, a threshold
decoder for the binary homogeneous family, and brute-force oracles that
cross-check every formula at desk scale.
"""

from .algebra import (
    AlgebraContext,
    AlgebraElement,
    ContextMismatchError,
    b_subset,
    hamming_weight,
    jennings_basis,
    jennings_element,
    p_weight,
    theta,
    weighted_p_weight,
)
from .codes import (
    ConsistencyError,
    HrmParams,
    LinearCode,
    WrmParams,
    grm_code,
    hrm_code_eval,
    hrm_code_jennings_binary,
    hrm_params,
    nu_max,
    radical_power,
    wrm_code_eval,
    wrm_code_jennings,
    wrm_params,
)
from .decoder import DecodeResult, DecodeStatus, capability, decode, extract_coefficient
from .gf import PrimeField
from .poly import (
    MINUS_INFINITY,
    ReducedPolynomial,
    WeightProfile,
    h_multi,
    h_single,
    homogeneous_monomials,
    monomials_up_to_weighted_degree,
    phi,
    psi_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraContext",
    "AlgebraElement",
    "ConsistencyError",
    "ContextMismatchError",
    "DecodeResult",
    "DecodeStatus",
    "HrmParams",
    "LinearCode",
    "MINUS_INFINITY",
    "PrimeField",
    "ReducedPolynomial",
    "WeightProfile",
    "WrmParams",
    "b_subset",
    "capability",
    "decode",
    "extract_coefficient",
    "grm_code",
    "hamming_weight",
    "h_multi",
    "h_single",
    "homogeneous_monomials",
    "hrm_code_eval",
    "hrm_code_jennings_binary",
    "hrm_params",
    "jennings_basis",
    "jennings_element",
    "monomials_up_to_weighted_degree",
    "nu_max",
    "p_weight",
    "phi",
    "psi_inverse",
    "radical_power",
    "theta",
    "weighted_p_weight",
    "wrm_code_eval",
    "wrm_code_jennings",
    "wrm_params",
]

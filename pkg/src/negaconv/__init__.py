"""MDS convolutional codes and quantum convolutional codes from negacyclic BCH codes."""

from .convolutional import (
    ConvolutionalCode,
    FreeDistanceResult,
    PolyMatrix,
    check_rank_conditions,
    free_distance_bracket,
    free_distance_exact,
    generalized_singleton,
    hermitian_dual,
    shifted_hermitian_orthogonal,
    split_and_pad,
    verify_basic,
)
from .families import (
    FamilyInstance,
    VerificationCertificate,
    family_I,
    family_II,
    family_III,
    family_IV,
    family_V,
    reproduce_table,
)
from .fields import GF, Tower, get_field, get_tower
from .negacyclic import NegacyclicCode, build_code, min_distance_exact
from .quantum import QuantumConvParams, quantum_singleton

__all__ = [
    "ConvolutionalCode", "FreeDistanceResult", "PolyMatrix", "check_rank_conditions",
    "free_distance_bracket", "free_distance_exact", "generalized_singleton", "hermitian_dual",
    "shifted_hermitian_orthogonal", "split_and_pad", "verify_basic",
    "FamilyInstance", "VerificationCertificate", "family_I", "family_II", "family_III",
    "family_IV", "family_V", "reproduce_table",
    "GF", "Tower", "get_field", "get_tower",
    "NegacyclicCode", "build_code", "min_distance_exact",
    "QuantumConvParams", "quantum_singleton",
]

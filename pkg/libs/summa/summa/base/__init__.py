from .component import BaseComponent, Node, Param, lazy
from .schema import (
    INF,
    ConstantBound,
    DivergenceReport,
    ExponentVector,
    NormEstimate,
    NormMethod,
    PartitionSpec,
    ProbePoint,
    ProbeResult,
    PSpec,
    Regime,
    RegimeClassification,
    ScalarField,
    VerificationRecord,
    Verdict,
    as_float,
    conjugate,
    exponent_str,
    from_reciprocal,
    is_inf,
    reciprocal,
    to_exponent,
)

__all__ = [
    "BaseComponent",
    "Param",
    "Node",
    "lazy",
    "INF",
    "ScalarField",
    "PSpec",
    "PartitionSpec",
    "ExponentVector",
    "NormEstimate",
    "NormMethod",
    "ConstantBound",
    "Regime",
    "RegimeClassification",
    "ProbePoint",
    "ProbeResult",
    "DivergenceReport",
    "VerificationRecord",
    "Verdict",
    "as_float",
    "conjugate",
    "exponent_str",
    "from_reciprocal",
    "is_inf",
    "reciprocal",
    "to_exponent",
]

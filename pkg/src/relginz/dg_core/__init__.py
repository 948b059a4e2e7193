"""Exact dg path-algebra kernel."""

from .algebra import (
    AlgebraError,
    DegreeError,
    DifferentialError,
    Element,
    EndpointError,
    GeneratorInfo,
    Presentation,
    UnknownGenerator,
    concat,
    differentiate,
    element_from_json,
    element_sum,
    element_to_json,
    normalize,
)
from .checks import (
    CheckReport,
    Residual,
    check_chain_map,
    check_d_squared,
    check_homotopy,
    check_morphisms_equal,
    resolve_homotopy_sign,
)
from .counting import graded_dimension
from .fields import GF, QQ, ModP, PrimeField, Rationals
from .maps import (
    Morphism,
    TwistedDerivation,
    apply_morphism,
    apply_twisted_derivation,
    compose_morphisms,
    identity_morphism,
)

__all__ = [
    "AlgebraError",
    "CheckReport",
    "DegreeError",
    "DifferentialError",
    "Element",
    "EndpointError",
    "GF",
    "GeneratorInfo",
    "ModP",
    "Morphism",
    "Presentation",
    "PrimeField",
    "QQ",
    "Rationals",
    "Residual",
    "TwistedDerivation",
    "UnknownGenerator",
    "apply_morphism",
    "apply_twisted_derivation",
    "check_chain_map",
    "check_d_squared",
    "check_homotopy",
    "check_morphisms_equal",
    "compose_morphisms",
    "concat",
    "differentiate",
    "element_from_json",
    "element_sum",
    "element_to_json",
    "graded_dimension",
    "identity_morphism",
    "normalize",
    "resolve_homotopy_sign",
]

"""Symmetry-based emptiness certificates for polynomial systems over the Boolean cube."""

from .algebra import EliminationResult, Mode, UnivariatePoly, eliminate_univariate, ideal_basis, roots_of
from .certificate import Verdict, VerdictTag, build_matrix, certify, necessary_check, zero_column_check
from .errors import (
    AmbientMismatchError,
    BoolcertError,
    CapExceededError,
    CertificateError,
    EmptyDestabilizerError,
    ParseError,
    VariableIndexError,
)
from .oracle import audit, brute_force, encode_graph
from .ring import GaussianRational, MultilinearPoly, evaluate, format_poly, parse
from .saturation import SaturatedSystem, build_g, symmetrized_product
from .symmetry import (
    DestabilizerSet,
    Permutation,
    PolySystem,
    apply,
    compose,
    enumerate_group,
    invert,
    permuted_system,
    stabilizer,
)
from .sysfile import format_system, parse_system, read_system

__version__ = "0.1.0"


__all__ = [
    "AmbientMismatchError",
    "BoolcertError",
    "CapExceededError",
    "CertificateError",
    "DestabilizerSet",
    "EliminationResult",
    "EmptyDestabilizerError",
    "GaussianRational",
    "Mode",
    "MultilinearPoly",
    "ParseError",
    "Permutation",
    "PolySystem",
    "SaturatedSystem",
    "UnivariatePoly",
    "VariableIndexError",
    "Verdict",
    "VerdictTag",
    "apply",
    "audit",
    "brute_force",
    "build_g",
    "build_matrix",
    "certify",
    "compose",
    "eliminate_univariate",
    "encode_graph",
    "enumerate_group",
    "evaluate",
    "format_poly",
    "format_system",
    "ideal_basis",
    "invert",
    "necessary_check",
    "parse",
    "parse_system",
    "permuted_system",
    "read_system",
    "roots_of",
    "stabilizer",
    "symmetrized_product",
    "zero_column_check",
]

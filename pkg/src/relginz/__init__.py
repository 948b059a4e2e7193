"""Relative Ginzburg algebras, the combinatorial Chekanov-Eliashberg model of a
quiver with frozen subquiver, and a checker for the comparison maps between them."""

from .ce_model import assemble_colimit, boundary_subalgebra, build_local_edge_vertex, build_local_vertex
from .ginzburg import build_ginzburg, build_inclusion_G, build_relative_ginzburg
from .quiver import QuiverError, QuiverWithFrozen, parse_quiver, subdivide
from .verifier import VerificationReport, run_verification, verify_instance

__all__ = [
    "QuiverError",
    "QuiverWithFrozen",
    "VerificationReport",
    "assemble_colimit",
    "boundary_subalgebra",
    "build_ginzburg",
    "build_inclusion_G",
    "build_local_edge_vertex",
    "build_local_vertex",
    "build_relative_ginzburg",
    "parse_quiver",
    "run_verification",
    "subdivide",
    "verify_instance",
]

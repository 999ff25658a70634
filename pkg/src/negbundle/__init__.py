"""Morse spectra, negative bundles and equivariant Chern classes for closed geodesics on P^n(alpha)."""

from .bundles import equivariant_decomposition, klingenberg_decomposition, rank_audit
from .chern import (
    chern_nu_closed,
    chern_nu_lines,
    euler_class_rho,
    filtration_quotient_poincare,
    steenrod_power,
    total_chern_negative,
)
from .cohomology_rings import presentation_base, presentation_for, pullback_pr, ring_case
from .errors import NegBundleError
from .graded_algebra import GradedElement, RingPresentation, inv_unit, mul, nf, poincare
from .kernels import BACKEND
from .morse_spectrum import eigenvalue, enumerate_spectrum, index_and_nullity

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GradedElement",
    "NegBundleError",
    "RingPresentation",
    "chern_nu_closed",
    "chern_nu_lines",
    "eigenvalue",
    "enumerate_spectrum",
    "equivariant_decomposition",
    "euler_class_rho",
    "filtration_quotient_poincare",
    "index_and_nullity",
    "inv_unit",
    "klingenberg_decomposition",
    "mul",
    "nf",
    "poincare",
    "presentation_base",
    "presentation_for",
    "pullback_pr",
    "rank_audit",
    "ring_case",
    "steenrod_power",
    "total_chern_negative",
]

"""Exact computations of indices and stable linear forms for subalgebras of
semisimple Lie algebras."""

from .chevalley import LieAlgebra, build_algebra, is_semisimple_element
from .rootsystem import RootSystem, SimpleType, build_root_system, cascade, highest_root, k_g, pairing
from .stability import StabilityReport, cascade_element, cascade_form, is_stable
from .subalg import LinearForm, Subalgebra, borel, centralizer, form_from_element, full, index, parabolic

__all__ = [
    "LieAlgebra",
    "LinearForm",
    "RootSystem",
    "SimpleType",
    "StabilityReport",
    "Subalgebra",
    "borel",
    "build_algebra",
    "build_root_system",
    "cascade",
    "cascade_element",
    "cascade_form",
    "centralizer",
    "form_from_element",
    "full",
    "highest_root",
    "index",
    "is_semisimple_element",
    "is_stable",
    "k_g",
    "pairing",
    "parabolic",
]

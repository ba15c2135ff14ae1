"""Quasisymmetric Schur-like functions computed exactly from tableaux."""
from .compositions import DomainError, format_composition, parse_composition
from .families import FAMILIES, expand_F, expand_M, predicted_symmetric_form, symmetry_predicate
from .qsym import QSymElement, TensorElement, f_to_m, is_symmetric, m_to_f, psi
from .schur import kostka, schur, skew_schur
from .shapes import SkewShape, parse_shape, transpose
from .tableaux import ConstraintSpec, Tableau

__all__ = [
    "DomainError",
    "format_composition",
    "parse_composition",
    "FAMILIES",
    "expand_F",
    "expand_M",
    "predicted_symmetric_form",
    "symmetry_predicate",
    "QSymElement",
    "TensorElement",
    "f_to_m",
    "is_symmetric",
    "m_to_f",
    "psi",
    "kostka",
    "schur",
    "skew_schur",
    "SkewShape",
    "parse_shape",
    "transpose",
    "ConstraintSpec",
    "Tableau",
]

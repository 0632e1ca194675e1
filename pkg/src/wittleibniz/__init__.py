"""Exact construction and verification of Leibniz algebras on W + V(alpha, beta)."""

from .scalar import Scalar, parse_scalar, is_integer
from .core import (ContractError, LeibnizElement, ModuleElement, ModuleParams, WittElement,
                   is_reducible, leibniz_defect, leibniz_product, module_action, witt_bracket)
from .families import (DomainError, FamilyId, StructureTable, a_coeff, b_coeff_II, b_coeff_IV,
                       build_table, gamma_of)

__all__ = [
    "Scalar", "parse_scalar", "is_integer",
    "ContractError", "LeibnizElement", "ModuleElement", "ModuleParams", "WittElement",
    "is_reducible", "leibniz_defect", "leibniz_product", "module_action", "witt_bracket",
    "DomainError", "FamilyId", "StructureTable", "a_coeff", "b_coeff_II", "b_coeff_IV",
    "build_table", "gamma_of",
]

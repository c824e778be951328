"""Workbench for additive codes over the mixed alphabet Z_p^alpha x (Z_p + uZ_p)^beta.

The chain ring R = Z_p + uZ_p (u^2 = 0) and the prime field Z_p form the two
coordinate alphabets.  The library provides exact ring arithmetic, mixed-alphabet
words and codes, standard-form reduction, duals (by exhaustive oracle and by
nullspace), Gray maps and weight enumerators with MacWilliams checking, and
additive cyclic codes presented by polynomial generators.  Everything is sized
for desk-scale exhaustive verification.
"""

from zpzpu.ring import FpElem, NotAUnit, PrimeCtx, RElem, psi, r_add, r_inv, r_mul
from zpzpu.words import (
    MixedWord,
    Shape,
    hadamard,
    inner_product,
    scalar_mul_fp,
    scalar_mul_r,
    word_add,
    zero_word,
)
from zpzpu.code import (
    AdditiveCode,
    BudgetExceeded,
    CodeType,
    DEFAULT_BUDGET,
    StandardForm,
    dual_oracle,
    min_distance,
    parity_check_formula,
    standard_form,
)
from zpzpu.gray import (
    WeightEnumerator,
    gray_distance,
    gray_weight,
    gray_weight_paper_cases,
    macwilliams_check,
    phi,
    weight_discrepancy_report,
    weight_enumerator,
)
from zpzpu.specfile import CodeSpecDocument, parse_code_spec, print_code_spec

__all__ = [
    "AdditiveCode",
    "BudgetExceeded",
    "CodeSpecDocument",
    "CodeType",
    "DEFAULT_BUDGET",
    "FpElem",
    "MixedWord",
    "NotAUnit",
    "PrimeCtx",
    "RElem",
    "Shape",
    "StandardForm",
    "WeightEnumerator",
    "dual_oracle",
    "gray_distance",
    "gray_weight",
    "gray_weight_paper_cases",
    "hadamard",
    "inner_product",
    "macwilliams_check",
    "min_distance",
    "parity_check_formula",
    "parse_code_spec",
    "phi",
    "print_code_spec",
    "psi",
    "r_add",
    "r_inv",
    "r_mul",
    "scalar_mul_fp",
    "scalar_mul_r",
    "standard_form",
    "weight_discrepancy_report",
    "weight_enumerator",
    "word_add",
    "zero_word",
]

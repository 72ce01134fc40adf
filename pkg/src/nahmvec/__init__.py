"""Exact q-series, Nahm sums and vector-valued modular transformation checks."""

from __future__ import annotations

from .cyclo import CycloElement, cos_pi, cyclo_embed, exp_pi_i, sin_pi, sqrt_int
from .identities import check_eta_dissections, check_identity, get_identity, list_identities, product_recipe
from .nahm import NahmQuadruple, nahm_sum, quadruple_from_json
from .numeric import (
    BigComplex,
    MobiusMap,
    eval_product,
    eval_series,
    mobius_apply,
    parse_tau,
    sqrt_principal,
    verify_gen_eta,
    verify_theta_lemmas,
    verify_transform,
)
from .products import Product, eta_series, theta_g, theta_h
from .series import PuiseuxSeries, compare_to_order, pochhammer, substitute_q_power
from .transforms import (
    AlgebraicMatrix,
    compose_gamma0,
    cyclo_constant_check,
    get_transform_case,
    registry_transform_cases,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicMatrix",
    "BigComplex",
    "CycloElement",
    "MobiusMap",
    "NahmQuadruple",
    "Product",
    "PuiseuxSeries",
    "check_eta_dissections",
    "check_identity",
    "compare_to_order",
    "compose_gamma0",
    "cos_pi",
    "cyclo_constant_check",
    "cyclo_embed",
    "eta_series",
    "eval_product",
    "eval_series",
    "exp_pi_i",
    "get_identity",
    "get_transform_case",
    "list_identities",
    "mobius_apply",
    "nahm_sum",
    "parse_tau",
    "pochhammer",
    "product_recipe",
    "quadruple_from_json",
    "registry_transform_cases",
    "sin_pi",
    "sqrt_int",
    "sqrt_principal",
    "substitute_q_power",
    "theta_g",
    "theta_h",
    "verify_gen_eta",
    "verify_theta_lemmas",
    "verify_transform",
]

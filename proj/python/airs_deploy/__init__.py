"""Placement of one active IRS in a cascade of passive IRSs."""

from ._core import (
    ArrayShape,
    CascadeModel,
    CaseLabel,
    DeploymentSolution,
    Diagnostic,
    LinkBudget,
    MatrixResult,
    Mode,
    ObjectiveValue,
    RatioReport,
    SystemParams,
    brute_force_index,
    dbm_to_watts,
    derive_link_budget,
    evaluate_matrix,
    middle_index,
    optimal_index,
    power,
    ratio_diagnostics,
    scheme_all_pirs,
    scheme_middle,
    snr,
    validate,
    watts_to_dbm,
    wit_saturation_np,
    wpt_crossover_np,
)

__all__ = [
    "ArrayShape",
    "CascadeModel",
    "CaseLabel",
    "DeploymentSolution",
    "Diagnostic",
    "LinkBudget",
    "MatrixResult",
    "Mode",
    "ObjectiveValue",
    "RatioReport",
    "SystemParams",
    "brute_force_index",
    "dbm_to_watts",
    "derive_link_budget",
    "evaluate_matrix",
    "middle_index",
    "optimal_index",
    "power",
    "ratio_diagnostics",
    "scheme_all_pirs",
    "scheme_middle",
    "snr",
    "validate",
    "watts_to_dbm",
    "wit_saturation_np",
    "wpt_crossover_np",
]

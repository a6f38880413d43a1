"""Extremal problems over chemical trees: objectives, minimizer search, conditions and audits."""

from .audit import AuditRow, EpsilonRow, audit_conjecture_bp0, check_epsilon_reduction
from .conditions import LOW_ORDER_LIMIT, ConditionReport, check_c_conditions
from .objectives import OBJECTIVE_NAMES, Objective, get_objective
from .search import (
    METHODS,
    MinimizerSet,
    PreconditionError,
    argmin,
    intersect_minimizers,
    minimize_brute,
    minimize_theory,
    pendant_rootings,
)

__all__ = [
    "LOW_ORDER_LIMIT",
    "METHODS",
    "OBJECTIVE_NAMES",
    "AuditRow",
    "ConditionReport",
    "EpsilonRow",
    "MinimizerSet",
    "Objective",
    "PreconditionError",
    "argmin",
    "audit_conjecture_bp0",
    "check_c_conditions",
    "check_epsilon_reduction",
    "get_objective",
    "intersect_minimizers",
    "minimize_brute",
    "minimize_theory",
    "pendant_rootings",
]

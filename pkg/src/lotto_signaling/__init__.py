"""Optimal budget signaling in General Lotto games.

A solver for the three-stage game in which an informed competitor commits
to a signaling policy about its random resource budget, the opponent
updates its belief and buys costly resources, and both sides then play a
General Lotto competition.  Every equilibrium quantity has a closed form;
the :mod:`~lotto_signaling.oracle` module re-derives optima by brute force
so the closed forms never have to be taken on faith.
"""

from .equilibrium import (
    InvestmentDecision,
    Regime,
    interim_payoff,
    invest_best_response,
    investment_regime,
    no_signal_payoff,
)
from .model import (
    POSTERIOR_AFTER_LOW,
    BudgetPrior,
    BudgetType,
    GameConfig,
    ParameterError,
    belief_threshold,
    expected_budget,
    hedge_cost_threshold,
    lotto_payoff_a,
    lotto_payoff_b,
    posterior_after_high,
    prior_strength,
)
from .oracle import (
    AuditReport,
    OracleReport,
    Transition,
    boundary_scan,
    claim_audit,
    grid_argmax,
    monotonicity_audit,
    policy_payoff_grid,
    sample_configs,
)
from .signaling import (
    PiecewiseCaseError,
    RegionClass,
    RegionTag,
    SpeSolution,
    classify,
    hedge_onset_policy,
    policy_payoff,
    policy_payoff_piecewise,
    region2_condition,
    region3_min_cost,
    region3_root_cost,
    spe_solve,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "BudgetPrior",
    "BudgetType",
    "GameConfig",
    "InvestmentDecision",
    "OracleReport",
    "POSTERIOR_AFTER_LOW",
    "ParameterError",
    "PiecewiseCaseError",
    "Regime",
    "RegionClass",
    "RegionTag",
    "SpeSolution",
    "Transition",
    "belief_threshold",
    "boundary_scan",
    "claim_audit",
    "classify",
    "expected_budget",
    "grid_argmax",
    "hedge_cost_threshold",
    "hedge_onset_policy",
    "interim_payoff",
    "invest_best_response",
    "investment_regime",
    "lotto_payoff_a",
    "lotto_payoff_b",
    "monotonicity_audit",
    "no_signal_payoff",
    "policy_payoff",
    "policy_payoff_grid",
    "policy_payoff_piecewise",
    "posterior_after_high",
    "prior_strength",
    "region2_condition",
    "region3_min_cost",
    "region3_root_cost",
    "sample_configs",
    "spe_solve",
    "__version__",
]

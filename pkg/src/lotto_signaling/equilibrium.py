"""Closed-form stage-2/3 equilibrium quantities.

After observing the signal, the receiver holds a belief ``mu`` on the high
budget, buys resources at unit cost ``c``, and the Lotto competition
resolves.  Three response regimes arise:

* invest against the expected budget (``INVEST_FULL``),
* invest only against the low budget (``INVEST_HEDGE``), which exists only
  for beliefs below the split threshold,
* stay out entirely (``DETERRED``), conceding the full value.

The regime selector is shared by the investment level, the signaler's
interim payoff and the no-signal benchmark, so the three can never disagree
about which branch applies.  Threshold comparisons are exact IEEE
comparisons with the weak side on deterrence (``c >= threshold`` stays out).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .model import (
    BudgetType,
    GameConfig,
    belief_threshold,
    expected_budget,
    hedge_cost_threshold,
)

__all__ = [
    "Regime",
    "InvestmentDecision",
    "investment_regime",
    "invest_best_response",
    "interim_payoff",
    "no_signal_payoff",
]


class Regime(Enum):
    INVEST_FULL = "invest_full"
    INVEST_HEDGE = "invest_hedge"
    DETERRED = "deterred"


@dataclass(frozen=True)
class InvestmentDecision:
    """Optimal purchase and the branch that produced it.

    ``amount == 0`` iff ``regime is DETERRED``, except in the a_low == 0
    corner where the hedging amount itself collapses to zero.
    """

    amount: float
    regime: Regime


def _split_threshold(cfg: GameConfig) -> float:
    # One-point distributions route every belief through the upper family.
    if cfg.a_high == cfg.a_low:
        return 0.0
    return belief_threshold(cfg.prior)


def investment_regime(cfg: GameConfig, mu: float) -> Regime:
    """Receiver's best-response regime at belief ``mu``.

    At or above the split threshold: full investment while
    ``c < phi/(2*abar(mu))``, else deterred.  Below it a hedging window
    ``hedge_cost_threshold <= c < (1-mu)*phi/(2*a_low)`` sits between the
    two; the window's upper end is infinite when ``a_low == 0``.
    """
    if mu >= _split_threshold(cfg):
        if cfg.unit_cost < cfg.phi / (2.0 * expected_budget(cfg.prior, mu)):
            return Regime.INVEST_FULL
        return Regime.DETERRED
    if cfg.unit_cost < hedge_cost_threshold(cfg.prior, mu, cfg.phi):
        return Regime.INVEST_FULL
    if cfg.a_low == 0.0:
        return Regime.INVEST_HEDGE
    if cfg.unit_cost < (1.0 - mu) * cfg.phi / (2.0 * cfg.a_low):
        return Regime.INVEST_HEDGE
    return Regime.DETERRED


def invest_best_response(cfg: GameConfig, mu: float) -> InvestmentDecision:
    """Optimal stage-2 purchase at belief ``mu``.

    ``sqrt(abar(mu)*phi/(2c))`` in the full regime,
    ``sqrt((1-mu)*a_low*phi/(2c))`` in the hedging regime, zero otherwise.
    """
    regime = investment_regime(cfg, mu)
    if regime is Regime.INVEST_FULL:
        amount = math.sqrt(expected_budget(cfg.prior, mu) * cfg.phi / (2.0 * cfg.unit_cost))
    elif regime is Regime.INVEST_HEDGE:
        amount = math.sqrt((1.0 - mu) * cfg.a_low * cfg.phi / (2.0 * cfg.unit_cost))
    else:
        amount = 0.0
    return InvestmentDecision(amount, regime)


def interim_payoff(cfg: GameConfig, mu: float, t: BudgetType) -> float:
    """Signaler's expected payoff given its realized budget type ``t`` when
    the receiver best-responds to belief ``mu``.

    Full regime: ``sqrt(c*phi*a_t^2/(2*abar(mu)))``.  Hedging regime: the
    high type wins ``phi`` outright while the low type collects
    ``sqrt(c*phi*a_low/(2*(1-mu)))``.  A deterred receiver concedes ``phi``.
    """
    regime = investment_regime(cfg, mu)
    if regime is Regime.INVEST_FULL:
        a_t = cfg.prior.budget(t)
        return math.sqrt(cfg.unit_cost * cfg.phi * a_t * a_t
                         / (2.0 * expected_budget(cfg.prior, mu)))
    if regime is Regime.INVEST_HEDGE:
        if t is BudgetType.HIGH:
            return cfg.phi
        return math.sqrt(cfg.unit_cost * cfg.phi * cfg.a_low / (2.0 * (1.0 - mu)))
    return cfg.phi


def no_signal_payoff(cfg: GameConfig) -> float:
    """Benchmark payoff when the receiver simply acts on the prior.

    ``sqrt(c*phi*abar(p)/2)`` in the full regime,
    ``p*phi + sqrt(c*phi*(1-p)*a_low/2)`` in the hedging regime, and ``phi``
    when the receiver is deterred outright.
    """
    regime = investment_regime(cfg, cfg.p)
    if regime is Regime.INVEST_FULL:
        return math.sqrt(cfg.unit_cost * cfg.phi * expected_budget(cfg.prior, cfg.p) / 2.0)
    if regime is Regime.INVEST_HEDGE:
        return cfg.p * cfg.phi + math.sqrt(
            cfg.unit_cost * cfg.phi * (1.0 - cfg.p) * cfg.a_low / 2.0)
    return cfg.phi

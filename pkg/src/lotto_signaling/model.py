"""Domain types and elementary closed-form quantities.

The competition is a two-player General Lotto game whose battlefield values
only ever enter through their total ``phi``.  One player (the signaler) has a
two-point random budget: ``a_high`` with probability ``p``, otherwise
``a_low``.  The opponent buys resources at a per-unit cost before competing.
This module holds the parameter containers plus the scalar quantities every
later stage reuses: expected budget, the belief threshold that splits the
opponent's response into two families, the hedging cost threshold, the Bayes
posterior after a "high" signal, and the complete-information payoffs.

All functions are pure and safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "ParameterError",
    "BudgetType",
    "BudgetPrior",
    "GameConfig",
    "POSTERIOR_AFTER_LOW",
    "expected_budget",
    "belief_threshold",
    "hedge_cost_threshold",
    "posterior_after_high",
    "prior_strength",
    "lotto_payoff_a",
    "lotto_payoff_b",
]


class ParameterError(ValueError):
    """An input violates one of the documented invariants."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


class BudgetType(Enum):
    HIGH = "h"
    LOW = "l"


@dataclass(frozen=True)
class BudgetPrior:
    """Two-point budget distribution: ``a_high`` w.p. ``p``, else ``a_low``."""

    a_high: float
    a_low: float
    p: float

    def __post_init__(self) -> None:
        _require(math.isfinite(self.a_high) and math.isfinite(self.a_low),
                 f"finite budgets violated (a_high={self.a_high}, a_low={self.a_low})")
        _require(self.a_low >= 0.0, f"a_low >= 0 violated (a_low={self.a_low})")
        _require(self.a_high >= self.a_low,
                 f"a_high >= a_low violated (a_high={self.a_high}, a_low={self.a_low})")
        _require(self.a_high > 0.0, f"a_high > 0 violated (a_high={self.a_high})")
        _require(math.isfinite(self.p) and 0.0 <= self.p <= 1.0,
                 f"0 <= p <= 1 violated (p={self.p})")

    def budget(self, t: BudgetType) -> float:
        return self.a_high if t is BudgetType.HIGH else self.a_low


@dataclass(frozen=True)
class GameConfig:
    """One game instance: budget prior, opponent unit cost, total value."""

    prior: BudgetPrior
    unit_cost: float
    phi: float = 1.0

    def __post_init__(self) -> None:
        _require(math.isfinite(self.unit_cost) and self.unit_cost > 0.0,
                 f"unit_cost > 0 violated (unit_cost={self.unit_cost})")
        _require(math.isfinite(self.phi) and self.phi > 0.0,
                 f"phi > 0 violated (phi={self.phi})")

    @property
    def a_high(self) -> float:
        return self.prior.a_high

    @property
    def a_low(self) -> float:
        return self.prior.a_low

    @property
    def p(self) -> float:
        return self.prior.p


def _check_belief(mu: float) -> None:
    _require(math.isfinite(mu) and 0.0 <= mu <= 1.0, f"0 <= mu <= 1 violated (mu={mu})")


def expected_budget(prior: BudgetPrior, mu: float) -> float:
    """Mean budget under belief ``mu``: ``mu*a_high + (1-mu)*a_low``."""
    _check_belief(mu)
    return mu * prior.a_high + (1.0 - mu) * prior.a_low


def belief_threshold(prior: BudgetPrior) -> float:
    """Belief level ``(a_high - 2*a_low)/(a_high - a_low)`` splitting the
    opponent's best-response families.

    May be negative; callers clamp with ``max(., 0)`` when a probability is
    needed.  Undefined for a one-point budget distribution.
    """
    _require(prior.a_high > prior.a_low,
             f"degenerate prior: a_high == a_low (= {prior.a_high}) has a single "
             "effective type and no belief threshold")
    return (prior.a_high - 2.0 * prior.a_low) / (prior.a_high - prior.a_low)


def hedge_cost_threshold(prior: BudgetPrior, mu: float, phi: float) -> float:
    """Unit cost below which the opponent invests against the expected budget
    rather than hedging against the low one.

    ``phi/(2*a_high^2) * (sqrt((1-mu)*a_low) + sqrt(mu*a_high + (1-mu)*a_low))^2``
    """
    _check_belief(mu)
    _require(phi > 0.0, f"phi > 0 violated (phi={phi})")
    root = math.sqrt((1.0 - mu) * prior.a_low) + math.sqrt(expected_budget(prior, mu))
    return phi * root * root / (2.0 * prior.a_high * prior.a_high)


# Policies always signal "high" truthfully, so a "low" signal is proof of the
# low type and the posterior is identically zero.
POSTERIOR_AFTER_LOW = 0.0


def posterior_after_high(p: float, q: float) -> float:
    """Posterior on the high type after a "high" signal: ``p/(p + q*(1-p))``.

    ``q`` is the probability the low type also signals high.  Undefined when
    ``p == 0 and q == 0`` (the signal then has probability zero).
    """
    _require(0.0 <= p <= 1.0, f"0 <= p <= 1 violated (p={p})")
    _require(0.0 <= q <= 1.0, f"0 <= q <= 1 violated (q={q})")
    denom = p + q * (1.0 - p)
    if denom == 0.0:
        raise ParameterError("posterior after a high signal is undefined for "
                             "p = 0 and q = 0 (zero-probability event)")
    return p / denom


def prior_strength(p: float, *, limit: bool = False) -> float:
    """Monotone strength of the high-type prior: ``p/(sqrt(1-p) - (1-p))``.

    Equals ``1 + 1/sqrt(1-p)``, rising from 2 (as ``p -> 0``) toward infinity.
    The endpoints are singular; ``limit=True`` returns the limit value 2 at
    ``p == 0`` instead of raising.
    """
    if p == 0.0 and limit:
        return 2.0
    _require(0.0 < p < 1.0, f"0 < p < 1 violated (p={p})")
    u = 1.0 - p
    return p / (math.sqrt(u) - u)


def lotto_payoff_a(a: float, b: float, phi: float) -> float:
    """Complete-information General Lotto payoff of the budget-``a`` player.

    ``phi * a/(2b)`` when ``a <= b``, else ``phi * (1 - b/(2a))``.  Ties go to
    this player, so ``b == 0`` concedes the full value ``phi``.
    """
    _require(a >= 0.0 and b >= 0.0, f"budgets >= 0 violated (a={a}, b={b})")
    _require(phi > 0.0, f"phi > 0 violated (phi={phi})")
    if b == 0.0:
        return phi
    if a <= b:
        return phi * a / (2.0 * b)
    return phi * (1.0 - b / (2.0 * a))


def lotto_payoff_b(a: float, b: float, phi: float) -> float:
    """Opponent's share, ``phi - lotto_payoff_a``, via the mirrored branches."""
    _require(a >= 0.0 and b >= 0.0, f"budgets >= 0 violated (a={a}, b={b})")
    _require(phi > 0.0, f"phi > 0 violated (phi={phi})")
    if b == 0.0:
        return 0.0
    if a <= b:
        return phi * (1.0 - a / (2.0 * b))
    return phi * b / (2.0 * a)

"""Stage-1 policy optimization: policy payoffs, benefit regions, SPE solve.

Within the truthful-high policy class a signaling policy is one number
``q``, the probability of sending the "high" signal when the budget is
actually low.  ``q = 1`` is the trivial policy (the signal carries no
information), ``q = 0`` reveals the type fully.  Sending "high" more often
dilutes the signal; deterrence of the receiver after a high signal survives
exactly while ``q <= q*``, and the solver's job is to decide whether some
``q* < 1`` beats the trivial policy and, if so, which region formula gives
it.

The classifier partitions the ``(c, p)`` plane into three beneficial
regions plus three tagged no-benefit reasons:

* ``R1``  deterrence band reachable under the prior's full-investment regime,
* ``R2``  mid-cost band, requires the strength condition to hold,
* ``R3``  hedging band above the split-belief cost, requires the cost to
  clear a quadratic-root floor,
* ``NB_CHEAP`` investing is too cheap for any signal to deter,
* ``NB_WIN`` the receiver is deterred already without signaling,
* ``NB_COND`` everything else (condition failures, one-point priors,
  degenerate ``p``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from scipy.optimize import brentq

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
    BudgetType,
    GameConfig,
    ParameterError,
    belief_threshold,
    expected_budget,
    hedge_cost_threshold,
    posterior_after_high,
    prior_strength,
)

__all__ = [
    "RegionTag",
    "RegionClass",
    "SpeSolution",
    "PiecewiseCaseError",
    "policy_payoff",
    "policy_payoff_piecewise",
    "region2_condition",
    "region3_root_cost",
    "region3_min_cost",
    "classify",
    "spe_solve",
    "hedge_onset_policy",
]


class RegionTag(Enum):
    """Classifier outcome; the value is the serialization tag."""

    REGION_1 = "R1"
    REGION_2 = "R2"
    REGION_3 = "R3"
    NO_BENEFIT_CHEAP_COST = "NB_CHEAP"
    NO_BENEFIT_ALREADY_WINNING = "NB_WIN"
    NO_BENEFIT_CONDITION_FAILS = "NB_COND"

    @property
    def beneficial(self) -> bool:
        return self in (RegionTag.REGION_1, RegionTag.REGION_2, RegionTag.REGION_3)


@dataclass(frozen=True)
class RegionClass:
    """Classifier result; ``q_star`` is present iff the tag is beneficial."""

    tag: RegionTag
    q_star: float | None = None

    def __post_init__(self) -> None:
        if self.tag.beneficial:
            if self.q_star is None or not 0.0 <= self.q_star <= 1.0:
                raise ParameterError(f"q_star in [0, 1] violated (q_star={self.q_star})")
        elif self.q_star is not None:
            raise ParameterError("q_star must be absent for no-benefit tags")

    @property
    def beneficial(self) -> bool:
        return self.tag.beneficial


class PiecewiseCaseError(ValueError):
    """(c, p) lies outside the cost bands covered by the explicit piecewise forms."""


def _check_policy(q: float) -> None:
    if not (math.isfinite(q) and 0.0 <= q <= 1.0):
        raise ParameterError(f"0 <= q <= 1 violated (q={q})")


def policy_payoff(cfg: GameConfig, q: float) -> float:
    """Expected payoff of policy ``q``: the type/signal mixture of interim
    payoffs at the induced posteriors.

    ``p*pi(mu_h; high) + (1-p)*q*pi(mu_h; low) + (1-p)*(1-q)*pi(0; low)``
    """
    _check_policy(q)
    p = cfg.p
    low_branch = interim_payoff(cfg, POSTERIOR_AFTER_LOW, BudgetType.LOW)
    if p == 0.0 and q == 0.0:
        # both high-signal terms carry zero weight and mu_h is undefined
        return low_branch
    mu_h = posterior_after_high(p, q)
    return (p * interim_payoff(cfg, mu_h, BudgetType.HIGH)
            + (1.0 - p) * q * interim_payoff(cfg, mu_h, BudgetType.LOW)
            + (1.0 - p) * (1.0 - q) * low_branch)


def _q_star_deterrence(cfg: GameConfig) -> float:
    """Largest q keeping the receiver out after a high signal (regions 1/2):
    ``(p/(1-p)) * (2*c*a_high - phi)/(phi - 2*c*a_low)``."""
    p = cfg.p
    return (p / (1.0 - p)) * ((2.0 * cfg.unit_cost * cfg.a_high - cfg.phi)
                              / (cfg.phi - 2.0 * cfg.unit_cost * cfg.a_low))


def _q_star_hedge(cfg: GameConfig) -> float:
    """Region-3 optimum: ``(p/(1-p)) * (2*c*a_low)/(phi - 2*c*a_low)``."""
    p = cfg.p
    return (p / (1.0 - p)) * ((2.0 * cfg.unit_cost * cfg.a_low)
                              / (cfg.phi - 2.0 * cfg.unit_cost * cfg.a_low))


def region2_condition(cfg: GameConfig) -> bool:
    """Strict benefit test for the mid-cost band.

    True iff the prior strength exceeds
    ``(phi - 2*c*a_low)/(2*c*a_high - phi) * s/(phi - s)`` with
    ``s = sqrt(c*phi*a_low/2)``.  Requires ``2*c*a_high > phi`` (the ratio
    diverges as that margin vanishes) and ``0 < p < 1``.
    """
    c, phi = cfg.unit_cost, cfg.phi
    if not 0.0 < cfg.p < 1.0:
        raise ParameterError(f"0 < p < 1 violated (p={cfg.p})")
    if not 2.0 * c * cfg.a_high > phi:
        raise ParameterError(
            f"2*c*a_high > phi violated (c={c}, a_high={cfg.a_high}, phi={phi})")
    s = math.sqrt(c * phi * cfg.a_low / 2.0)
    rhs = (phi - 2.0 * c * cfg.a_low) / (2.0 * c * cfg.a_high - phi) * (s / (phi - s))
    return prior_strength(cfg.p) > rhs


def region3_root_cost(strength: float, a_low: float, phi: float) -> float:
    """Smaller root, in cost, of the hedging-band benefit condition.

    ``(phi/(2*a_low)) * ((F - sqrt(F^2 - F + 1))/(F - 1))^2`` for strength
    ``F``.  At ``F = 1`` the quadratic in ``sqrt(c)`` degenerates to a
    linear equation whose root is ``phi/(8*a_low*F^2)``.
    """
    if not a_low > 0.0:
        raise ParameterError(f"a_low > 0 violated (a_low={a_low})")
    if not phi > 0.0:
        raise ParameterError(f"phi > 0 violated (phi={phi})")
    if abs(strength - 1.0) < 1e-9:
        return phi / (8.0 * a_low * strength * strength)
    ratio = (strength - math.sqrt(strength * strength - strength + 1.0)) / (strength - 1.0)
    return phi / (2.0 * a_low) * ratio * ratio


def region3_min_cost(cfg: GameConfig) -> float:
    """Cost floor of region 3 at this prior, ``region3_root_cost`` evaluated
    at the prior strength.  Requires ``0 < p < belief_threshold``."""
    p_hat = belief_threshold(cfg.prior)
    if not 0.0 < cfg.p < p_hat:
        raise ParameterError(f"0 < p < belief threshold violated "
                             f"(p={cfg.p}, threshold={p_hat})")
    return region3_root_cost(prior_strength(cfg.p), cfg.a_low, cfg.phi)


def classify(cfg: GameConfig) -> RegionClass:
    """Map ``(c, p)`` to its benefit region with the optimal ``q*``, or to a
    tagged no-benefit reason.

    Region checks run in order 1, 2, 3 with the inequality directions
    written in the region definitions; the order only resolves presentation,
    the bands cannot overlap.  ``p`` of 0 or 1 cannot mix the two types and
    is tagged ``NB_COND`` outright.
    """
    p, c, phi = cfg.p, cfg.unit_cost, cfg.phi
    if p == 0.0 or p == 1.0:
        return RegionClass(RegionTag.NO_BENEFIT_CONDITION_FAILS)
    p_hat = 0.0 if cfg.a_high == cfg.a_low else belief_threshold(cfg.prior)
    c_cheap = phi / (2.0 * cfg.a_high)
    lam_p = hedge_cost_threshold(cfg.prior, p, phi)
    c_full = phi / (2.0 * expected_budget(cfg.prior, p))
    if c_cheap <= c < min(c_full, lam_p):
        return RegionClass(RegionTag.REGION_1, _q_star_deterrence(cfg))
    if p < p_hat:
        c_split = phi / (2.0 * (cfg.a_high - cfg.a_low))
        if (max(lam_p, c_cheap) <= c < c_split
                and 2.0 * c * cfg.a_high > phi
                and region2_condition(cfg)):
            return RegionClass(RegionTag.REGION_2, _q_star_deterrence(cfg))
        if cfg.a_low > 0.0:
            c_deter = (1.0 - p) * phi / (2.0 * cfg.a_low)
            if max(c_split, region3_min_cost(cfg)) <= c < c_deter:
                return RegionClass(RegionTag.REGION_3, _q_star_hedge(cfg))
    if c < c_cheap:
        return RegionClass(RegionTag.NO_BENEFIT_CHEAP_COST)
    if investment_regime(cfg, p) is Regime.DETERRED:
        return RegionClass(RegionTag.NO_BENEFIT_ALREADY_WINNING)
    return RegionClass(RegionTag.NO_BENEFIT_CONDITION_FAILS)


@dataclass(frozen=True)
class SpeSolution:
    """Subgame-perfect solution bundle for one game instance."""

    region: RegionClass
    q_star: float
    mu_h: float
    invest_after_h: InvestmentDecision
    invest_after_l: InvestmentDecision
    pi_star: float
    pi_ns: float
    improvement_pct: float


def spe_solve(cfg: GameConfig) -> SpeSolution:
    """Classify, pick the optimal policy, and assemble the full solution.

    For beneficial regions the optimal payoff is evaluated on the
    deterrence-border piece ``phi*(p + (1-p)*q*) + (1-p)*(1-q*)*s`` directly:
    ``q*`` sits exactly on the regime border, where re-deriving the branch
    from the rounded posterior can land on the wrong side.
    """
    region = classify(cfg)
    pi_ns = no_signal_payoff(cfg)
    if region.beneficial:
        q_star = region.q_star
        p = cfg.p
        s = math.sqrt(cfg.unit_cost * cfg.phi * cfg.a_low / 2.0)
        pi_star = cfg.phi * (p + (1.0 - p) * q_star) + (1.0 - p) * (1.0 - q_star) * s
    else:
        q_star = 1.0
        pi_star = policy_payoff(cfg, 1.0)
    mu_h = posterior_after_high(cfg.p, q_star)
    improvement = 100.0 * (pi_star / pi_ns - 1.0) if pi_ns > 0.0 else 0.0
    return SpeSolution(
        region=region,
        q_star=q_star,
        mu_h=mu_h,
        invest_after_h=invest_best_response(cfg, mu_h),
        invest_after_l=invest_best_response(cfg, POSTERIOR_AFTER_LOW),
        pi_star=pi_star,
        pi_ns=pi_ns,
        improvement_pct=improvement,
    )


# --- explicit piecewise forms, kept as an independent cross-check ----------

def _s_low(cfg: GameConfig) -> float:
    return math.sqrt(cfg.unit_cost * cfg.phi * cfg.a_low / 2.0)

def _deterred_line(cfg: GameConfig, q: float) -> float:
    p = cfg.p
    return cfg.phi * (p + (1.0 - p) * q) + (1.0 - p) * (1.0 - q) * _s_low(cfg)

def _full_line(cfg: GameConfig, q: float, mu_h: float) -> float:
    p = cfg.p
    scale = math.sqrt(cfg.unit_cost * cfg.phi / (2.0 * expected_budget(cfg.prior, mu_h)))
    return (scale * (p * cfg.a_high + (1.0 - p) * q * cfg.a_low)
            + (1.0 - p) * (1.0 - q) * _s_low(cfg))

def _hedge_line(cfg: GameConfig, q: float, mu_h: float) -> float:
    p = cfg.p
    return (p * cfg.phi
            + (1.0 - p) * q * math.sqrt(cfg.unit_cost * cfg.phi * cfg.a_low
                                        / (2.0 * (1.0 - mu_h)))
            + (1.0 - p) * (1.0 - q) * _s_low(cfg))


def _piecewise_case(cfg: GameConfig) -> int:
    """Identify which explicit-form cost band (1, 2, 3) contains (c, p)."""
    p, c, phi = cfg.p, cfg.unit_cost, cfg.phi
    p_hat = 0.0 if cfg.a_high == cfg.a_low else belief_threshold(cfg.prior)
    c_cheap = phi / (2.0 * cfg.a_high)
    lam_p = hedge_cost_threshold(cfg.prior, p, phi)
    if p >= max(p_hat, 0.0):
        if c_cheap <= c < phi / (2.0 * expected_budget(cfg.prior, p)):
            return 1
        raise PiecewiseCaseError(f"(c={c}, p={p}) outside the explicit-form bands")
    if c_cheap <= c < lam_p:
        return 1
    c_split = phi / (2.0 * (cfg.a_high - cfg.a_low))
    if max(lam_p, c_cheap) <= c < c_split:
        return 2
    c_deter = math.inf if cfg.a_low == 0.0 else (1.0 - p) * phi / (2.0 * cfg.a_low)
    if c_split <= c < c_deter:
        return 3
    raise PiecewiseCaseError(f"(c={c}, p={p}) outside the explicit-form bands")


def policy_payoff_piecewise(cfg: GameConfig, q: float) -> float:
    """``policy_payoff`` via the per-band closed forms; a second, differently
    factored evaluation path used for cross-validation.

    Case 1 alternates deterred/full lines at the deterrence cutoff
    ``q1* = (p/(1-p))(2c*a_high - phi)/(phi - 2c*a_low)``; case 2 inserts the
    hedging line above the cost-matched ``q_c`` (where the hedge threshold at
    the induced posterior equals ``c``); case 3 alternates deterred/hedge at
    ``q3* = (p/(1-p))(2c*a_low)/(phi - 2c*a_low)``.  Piece membership is
    delegated to the shared regime selector so both paths agree on borders.
    """
    case = _piecewise_case(cfg)
    _check_policy(q)
    p = cfg.p
    if p == 0.0 and q == 0.0:
        return _s_low(cfg)
    mu_h = posterior_after_high(p, q)
    regime = investment_regime(cfg, mu_h)
    if regime is Regime.DETERRED:
        if case in (1, 2, 3):
            return _deterred_line(cfg, q)
    elif regime is Regime.INVEST_FULL:
        if case in (1, 2):
            return _full_line(cfg, q, mu_h)
    else:
        if case in (2, 3):
            return _hedge_line(cfg, q, mu_h)
    raise PiecewiseCaseError(
        f"regime {regime.value} cannot occur inside band {case} (c={cfg.unit_cost}, p={p})")


def hedge_onset_policy(cfg: GameConfig) -> float:
    """Case-2 crossover ``q_c``: the policy at which the hedge threshold at
    the induced posterior equals the unit cost.

    Solves ``hedge_cost_threshold(mu_h(q)) == c`` on the sub-split belief
    range; requires case-2 parameters.
    """
    if _piecewise_case(cfg) != 2:
        raise PiecewiseCaseError("hedge onset is defined for case-2 parameters only")
    p, c, phi = cfg.p, cfg.unit_cost, cfg.phi
    p_hat = belief_threshold(cfg.prior)
    q_split = p * (1.0 - p_hat) / (p_hat * (1.0 - p))

    def gap(q: float) -> float:
        return hedge_cost_threshold(cfg.prior, posterior_after_high(p, q), phi) - c

    if gap(1.0) >= 0.0:
        return 1.0
    return float(brentq(gap, q_split, 1.0, xtol=1e-15, rtol=8.9e-16))

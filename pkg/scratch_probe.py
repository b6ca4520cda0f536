"""Scratch: compute example values and boundary behaviors before freezing tests."""
import time
import numpy as np
import lotto_signaling as ls
from lotto_signaling import (BudgetPrior, GameConfig, BudgetType, Regime, RegionTag)

P = BudgetPrior(1.2, 0.5, 0.5)

print("== model ==")
print("expected_budget mu=0.5:", repr(ls.expected_budget(P, 0.5)))
print("belief_threshold (1.2,0.5):", repr(ls.belief_threshold(BudgetPrior(1.2, 0.5, 0.5))))
print("belief_threshold (1.2,0.8):", repr(ls.belief_threshold(BudgetPrior(1.2, 0.8, 0.5))))
print("lambda mu=1:", repr(ls.hedge_cost_threshold(P, 1.0, 1.0)))
print("lambda mu=0:", repr(ls.hedge_cost_threshold(P, 0.0, 1.0)))
print("lambda mu=0.5:", repr(ls.hedge_cost_threshold(P, 0.5, 1.0)))
print("posterior p=.37 q=1:", repr(ls.posterior_after_high(0.37, 1.0)))
print("posterior p=.37 q=0:", repr(ls.posterior_after_high(0.37, 0.0)))
print("posterior p=.5 q=.4:", repr(ls.posterior_after_high(0.5, 0.4)))
print("prior_strength .75:", repr(ls.prior_strength(0.75)))
print("prior_strength .5:", repr(ls.prior_strength(0.5)))
print("payoff_a(1,2,1):", repr(ls.lotto_payoff_a(1, 2, 1)))

print("== equilibrium ==")
cfg_inv1 = GameConfig(P, 0.3, 1.0)
print("invest mu=0.8 c=0.3:", ls.invest_best_response(cfg_inv1, 0.8))
cfg_b = GameConfig(P, 0.5, 1.0)
mu57 = 5. / 7.
print("mu57:", repr(mu57), "abar:", repr(ls.expected_budget(P, mu57)),
      "thr:", repr(1.0 / (2 * ls.expected_budget(P, mu57))))
print("invest mu=5/7 c=0.5:", ls.invest_best_response(cfg_b, mu57))
print("invest mu=0 c=0.5:", ls.invest_best_response(cfg_b, 0.0))
print("interim mu=5/7 h:", repr(ls.interim_payoff(cfg_b, mu57, BudgetType.HIGH)))
print("interim mu=0 l:", repr(ls.interim_payoff(cfg_b, 0.0, BudgetType.LOW)))
print("no_signal p=.5 c=.5:", repr(ls.no_signal_payoff(cfg_b)))
print("no_signal p=.5 c=.6:", repr(ls.no_signal_payoff(GameConfig(P, 0.6, 1.0))))
cfg_ns3 = GameConfig(BudgetPrior(1.2, 0.06, 0.1), 2.0, 1.0)
print("no_signal hedge:", repr(ls.no_signal_payoff(cfg_ns3)))

print("== signaling ==")
print("objective q=1:", repr(ls.policy_payoff(cfg_b, 1.0)))
print("objective q=0.4:", repr(ls.policy_payoff(cfg_b, 0.4)))
print("  mu_h(0.4):", repr(ls.posterior_after_high(0.5, 0.4)),
      "abar:", repr(ls.expected_budget(P, ls.posterior_after_high(0.5, 0.4))))
print("  regime at mu_h(0.4):", ls.investment_regime(cfg_b, ls.posterior_after_high(0.5, 0.4)))
print("objective q=0:", repr(ls.policy_payoff(cfg_b, 0.0)))
print("piecewise q=1:", repr(ls.policy_payoff_piecewise(cfg_b, 1.0)))
print("piecewise q=0.4:", repr(ls.policy_payoff_piecewise(cfg_b, 0.4)))
print("piecewise q=0:", repr(ls.policy_payoff_piecewise(cfg_b, 0.0)))
print("region3_root f=3:", repr(ls.region3_root_cost(3.0, 0.06, 1.0)))
print("region3_root f=1:", repr(ls.region3_root_cost(1.0, 0.06, 1.0)), "expect", 1 / (8 * 0.06))
cfg_r2 = GameConfig(BudgetPrior(1.2, 0.2, 0.2), 0.45, 1.0)
print("region2_condition (p=.2,c=.45):", ls.region2_condition(cfg_r2))
print("classify c=.5:", ls.classify(cfg_b))
print("classify c=.3:", ls.classify(GameConfig(P, 0.3, 1.0)))
print("classify c=.7:", ls.classify(GameConfig(P, 0.7, 1.0)))
sol = ls.spe_solve(cfg_b)
print("spe_solve: q*", repr(sol.q_star), "mu_h", repr(sol.mu_h))
print("  invest_h:", sol.invest_after_h, "invest_l:", sol.invest_after_l)
print("  pi_star:", repr(sol.pi_star), "pi_ns:", repr(sol.pi_ns),
      "impr:", repr(sol.improvement_pct))
cfg_2x = GameConfig(BudgetPrior(1.2, 0.5, 0.999), 1 / 2.4, 1.0)
sol2 = ls.spe_solve(cfg_2x)
print("two-fold: q*", repr(sol2.q_star), "pi_star", repr(sol2.pi_star),
      "pi_ns", repr(sol2.pi_ns), "ratio", repr(sol2.pi_star / sol2.pi_ns))
print("  region:", sol2.region)

print("== oracle ==")
t0 = time.perf_counter()
rep = ls.grid_argmax(cfg_b, 10001)
t1 = time.perf_counter()
print("grid_argmax nice cfg:", rep, f"({(t1 - t0) * 1e3:.1f} ms)")
rep_nb = ls.grid_argmax(GameConfig(P, 0.3, 1.0), 10001)
print("grid_argmax NB cfg:", rep_nb)
rep_p1 = ls.grid_argmax(GameConfig(BudgetPrior(1.2, 0.5, 1.0), 0.5, 1.0), 10001)
print("grid_argmax p=1:", rep_p1)

trans = ls.boundary_scan(cfg_b, "cost", 0.3, 0.7, 4001)
print("boundary_scan cost:", [(t.bracket_lo, t.boundary, t.boundary_value) for t in trans])

cfgs = ls.sample_configs(1000, 42)
tags = {}
for c in cfgs:
    t = ls.classify(c).tag
    tags[t] = tags.get(t, 0) + 1
print("tag coverage:", {k.value: v for k, v in tags.items()})

t0 = time.perf_counter()
audit = ls.claim_audit(100, 42, grid_points=10001)
t1 = time.perf_counter()
print(f"claim_audit 100 samples: {(t1 - t0):.2f} s, violations={audit.violations}")
for name, res in audit.checks.items():
    print(f"  {name}: checked={res.checked} viol={res.violations} worst={res.worst:.3e}")

t0 = time.perf_counter()
mono = ls.monotonicity_audit(50, 7)
t1 = time.perf_counter()
print(f"mono_audit 50: {(t1 - t0):.2f} s violations={mono.violations}")

t0 = time.perf_counter()
for _ in range(100):
    ls.spe_solve(cfg_2x)
t1 = time.perf_counter()
print(f"spe_solve: {(t1 - t0) / 100 * 1e6:.1f} us per call")

"""Find and dissect grid-agreement violations."""
import numpy as np
import lotto_signaling as ls
from lotto_signaling import BudgetPrior, GameConfig, BudgetType

for i, cfg in enumerate(ls.sample_configs(100, 42)):
    rep = ls.grid_argmax(cfg, 10001)
    if not rep.agree:
        pr = cfg.prior
        print(f"[{i}] a_high={pr.a_high!r} a_low={pr.a_low!r} p={pr.p!r} "
              f"c={cfg.unit_cost!r} phi={cfg.phi!r}")
        print("   ", rep)
        print("    tag:", ls.classify(cfg).tag)
        print("    p_hat:", (pr.a_high - 2 * pr.a_low) / (pr.a_high - pr.a_low))
        print("    lam(p):", ls.hedge_cost_threshold(pr, pr.p, cfg.phi),
              "c_cheap:", cfg.phi / (2 * pr.a_high),
              "c_full:", cfg.phi / (2 * ls.expected_budget(pr, pr.p)))
        if pr.a_high > pr.a_low:
            print("    c_split:", cfg.phi / (2 * (pr.a_high - pr.a_low)))
            if 0 < pr.p < (pr.a_high - 2 * pr.a_low) / (pr.a_high - pr.a_low):
                print("    r3_floor:", ls.region3_min_cost(cfg),
                      "c_deter:", (1 - pr.p) * cfg.phi / (2 * pr.a_low))
        # where does the grid say the max is? scan manually
        qs = np.linspace(0, 1, 10001)
        vals = ls.policy_payoff_grid(cfg, qs)
        k = int(np.argmax(vals))
        print("    grid argmax(first):", qs[k], vals[k])
        # scalar check at that q
        print("    scalar objective at that q:", ls.policy_payoff(cfg, float(qs[k])))
        print("    objective(1.0):", ls.policy_payoff(cfg, 1.0),
              " no_signal:", ls.no_signal_payoff(cfg))
        print("    regime at mu_h(q_argmax):",
              ls.investment_regime(cfg, ls.posterior_after_high(pr.p, float(qs[k]))))
        print("    regime at mu=p:", ls.investment_regime(cfg, pr.p))

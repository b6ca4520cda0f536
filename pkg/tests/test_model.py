import math

import pytest
from hypothesis import given, strategies as st

from lotto_signaling import (
    BudgetPrior,
    ParameterError,
    belief_threshold,
    expected_budget,
    hedge_cost_threshold,
    lotto_payoff_a,
    lotto_payoff_b,
    posterior_after_high,
    prior_strength,
)

PRIOR = BudgetPrior(1.2, 0.5, 0.5)


class TestValidation:
    def test_budget_order(self):
        with pytest.raises(ParameterError, match="a_high >= a_low"):
            BudgetPrior(0.5, 1.2, 0.5)

    def test_negative_low_budget(self):
        with pytest.raises(ParameterError, match="a_low >= 0"):
            BudgetPrior(1.0, -0.1, 0.5)

    def test_zero_high_budget(self):
        with pytest.raises(ParameterError, match="a_high > 0"):
            BudgetPrior(0.0, 0.0, 0.5)

    def test_probability_range(self):
        with pytest.raises(ParameterError, match="0 <= p <= 1"):
            BudgetPrior(1.0, 0.5, 1.5)


class TestExpectedBudget:
    def test_degenerate_beliefs(self):
        assert expected_budget(PRIOR, 0.0) == 0.5
        assert expected_budget(PRIOR, 1.0) == 1.2

    def test_interior(self):
        assert expected_budget(PRIOR, 0.5) == pytest.approx(0.85, rel=1e-15)

    def test_belief_out_of_range(self):
        with pytest.raises(ParameterError, match="0 <= mu <= 1"):
            expected_budget(PRIOR, 1.2)


class TestBeliefThreshold:
    def test_basic(self):
        assert belief_threshold(PRIOR) == pytest.approx(0.2 / 0.7, rel=1e-12)

    def test_boundary_at_double_low(self):
        assert belief_threshold(BudgetPrior(2.0, 1.0, 0.5)) == 0.0

    def test_negative_threshold(self):
        assert belief_threshold(BudgetPrior(1.2, 0.8, 0.5)) == pytest.approx(-1.0, rel=1e-12)

    def test_degenerate_prior(self):
        with pytest.raises(ParameterError, match="degenerate prior"):
            belief_threshold(BudgetPrior(1.0, 1.0, 0.5))


class TestHedgeCostThreshold:
    def test_certain_high(self):
        # both radicands collapse to 0 and a_high
        assert hedge_cost_threshold(PRIOR, 1.0, 1.0) == pytest.approx(1 / 2.4, rel=1e-15)

    def test_certain_low(self):
        assert hedge_cost_threshold(PRIOR, 0.0, 1.0) == pytest.approx(
            2 * 0.5 / 1.2 ** 2, rel=1e-14)

    def test_interior(self):
        expected = (math.sqrt(0.25) + math.sqrt(0.85)) ** 2 / 2.88
        assert hedge_cost_threshold(PRIOR, 0.5, 1.0) == pytest.approx(expected, rel=1e-15)
        assert hedge_cost_threshold(PRIOR, 0.5, 1.0) == pytest.approx(0.702067515878, rel=1e-12)

    @given(st.floats(0.02, 0.98), st.floats(0.11, 5.0), st.floats(0.0, 1.0),
           st.floats(0.1, 3.0))
    def test_peak_value_identity(self, frac, a_high, mu_unused, phi):
        # at the split threshold the hedge threshold equals phi/(2 (a_high - a_low))
        a_low = frac * a_high / 2.0  # keep the threshold interior: a_high > 2 a_low
        prior = BudgetPrior(a_high, a_low, 0.5)
        p_hat = belief_threshold(prior)
        lhs = hedge_cost_threshold(prior, p_hat, phi)
        assert lhs == pytest.approx(phi / (2 * (a_high - a_low)), rel=1e-12)

    @given(st.floats(0.01, 0.99), st.floats(0.11, 5.0), st.floats(0.01, 0.99),
           st.floats(0.1, 3.0))
    def test_threshold_ordering(self, frac, a_high, p, phi):
        a_low = frac * a_high
        prior = BudgetPrior(a_high, a_low, p)
        if a_high == a_low:
            return
        p_hat = belief_threshold(prior)
        lam = hedge_cost_threshold(prior, p, phi)
        c_full = phi / (2 * expected_budget(prior, p))
        if p < p_hat:
            # the hedge threshold is the binding one below the split...
            assert lam <= c_full * (1 + 1e-12)
            # ...and the deterrence cap dominates both
            cap = (1 - p) * phi / (2 * a_low)
            assert max(lam, c_full) <= cap * (1 + 1e-12)
        else:
            assert c_full <= lam * (1 + 1e-12)


class TestPosterior:
    def test_trivial_policy_keeps_prior(self):
        assert posterior_after_high(0.37, 1.0) == 0.37

    def test_full_revelation(self):
        assert posterior_after_high(0.37, 0.0) == 1.0

    def test_interior(self):
        assert posterior_after_high(0.5, 0.4) == pytest.approx(5 / 7, rel=1e-15)

    def test_zero_probability_event(self):
        with pytest.raises(ParameterError, match="zero-probability"):
            posterior_after_high(0.0, 0.0)

    @given(st.floats(0.0, 1.0), st.floats(0.0, 1.0))
    def test_never_below_prior(self, p, q):
        if p == 0.0 and q == 0.0:
            return
        mu = posterior_after_high(p, q)
        assert mu >= p - 1e-15
        if 0.0 < p < 1.0 and q == 1.0:
            assert mu == pytest.approx(p, rel=1e-15)

    @given(st.floats(0.01, 0.99), st.floats(0.0, 0.98))
    def test_strictly_decreasing_in_q(self, p, q):
        assert posterior_after_high(p, q) > posterior_after_high(p, q + 0.01)


class TestPriorStrength:
    def test_exact_values(self):
        assert prior_strength(0.75) == pytest.approx(3.0, rel=1e-14)
        assert prior_strength(0.5) == pytest.approx(1 + math.sqrt(2), rel=1e-14)

    def test_limit_semantics(self):
        assert prior_strength(0.0, limit=True) == 2.0
        with pytest.raises(ParameterError, match="0 < p < 1"):
            prior_strength(0.0)
        with pytest.raises(ParameterError, match="0 < p < 1"):
            prior_strength(1.0, limit=True)

    def test_near_zero_limit(self):
        assert prior_strength(1e-9) == pytest.approx(2.0, rel=1e-6)

    @given(st.floats(0.001, 0.999))
    def test_closed_alternative_form(self, p):
        # algebraically p/(sqrt(1-p) - (1-p)) == 1 + 1/sqrt(1-p)
        assert prior_strength(p) == pytest.approx(1 + 1 / math.sqrt(1 - p), rel=1e-11)

    def test_always_above_two(self):
        for p in (0.001, 0.1, 0.5, 0.9, 0.999):
            assert prior_strength(p) > 2.0


class TestLottoPayoffs:
    def test_symmetric_split(self):
        assert lotto_payoff_a(1.0, 1.0, 1.0) == 0.5

    def test_weak_side(self):
        assert lotto_payoff_a(1.0, 2.0, 1.0) == 0.25

    def test_zero_opponent_wins_all(self):
        assert lotto_payoff_a(2.0, 0.0, 1.0) == 1.0
        assert lotto_payoff_a(0.0, 0.0, 1.0) == 1.0  # ties go to this player
        assert lotto_payoff_b(2.0, 0.0, 1.0) == 0.0

    @given(st.floats(0.0, 10.0), st.floats(0.0, 10.0),
           st.floats(0.01, 5.0))
    def test_shares_sum_to_total(self, a, b, phi):
        pa = lotto_payoff_a(a, b, phi)
        pb = lotto_payoff_b(a, b, phi)
        assert pa + pb == pytest.approx(phi, rel=1e-12)
        assert 0.0 <= pa <= phi * (1 + 1e-15)

    @given(st.floats(0.01, 10.0), st.floats(0.01, 5.0))
    def test_branches_agree_at_equal_budgets(self, a, phi):
        assert lotto_payoff_a(a, a, phi) == pytest.approx(phi / 2, rel=1e-15)
        assert lotto_payoff_b(a, a, phi) == pytest.approx(phi / 2, rel=1e-15)

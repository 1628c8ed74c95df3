# test_beta.py - Tests for the beta recursion, its table and its large-n behaviour

import functools
import math
import sys, os
from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'engine'))

from beta import solver
from beta.solver import solve_beta_next, solve_for_continuation, continuation
from beta.sequence import BetaTable, beta_sequence, gamma, beta_residual
from beta.asymptotics import (
    gamma_limit, beta_approximation, lemma_f, lemma_f_limit, step_difference_bound,
)
from model.distributions import NAMED_DISTRIBUTIONS, OrderSizeDistribution, delta
from model.errors import DomainError, InvalidModelError, SolverError, TableRangeError

D1 = NAMED_DISTRIBUTIONS["d1"]
Q1 = NAMED_DISTRIBUTIONS["q1"]
DISTRIBUTIONS = [NAMED_DISTRIBUTIONS[name] for name in ("d1", "d2", "d3", "d4", "q1", "q2", "q3")]
MIXED = [NAMED_DISTRIBUTIONS[name] for name in ("d2", "d3", "d4", "q1", "q2", "q3")]
LONG_N = 20000


@functools.lru_cache(maxsize=None)
def long_table(epsilon, name):
    return beta_sequence(epsilon, NAMED_DISTRIBUTIONS[name], LONG_N)


def residuals(table):
    """Residual of the defining equation for every stored beta, vectorized."""
    eps = table.epsilon
    m = table.orders.max_size
    padded = np.concatenate([np.zeros(m), table.values])
    c = np.zeros(table.max_index)
    for i, q_i in enumerate(table.orders.probs, start=1):
        c += q_i * padded[m - i:m - i + table.max_index]
    b = table.values
    return b ** (1.0 / (eps - 1.0)) * (b - c) - (eps - 1.0) / eps


def bisection_oracle(epsilon, q, n_max):
    """Independent beta_1..beta_n_max: plain bisection on the untransformed equation."""
    k = (epsilon - 1.0) / epsilon
    values = []
    for n in range(1, n_max + 1):
        c = sum(q_i * values[n - i - 1] for i, q_i in enumerate(q.probs, start=1) if n - i >= 1)
        # F(c) = -k < 0 and F(c + 1) >= 1 - k > 0
        lo, hi = c, c + 1.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid ** (1.0 / (epsilon - 1.0)) * (mid - c) - k > 0:
                hi = mid
            else:
                lo = mid
        values.append(0.5 * (lo + hi))
    return values


# -- Solver ------------------------------------------------------------------

class TestSolveBetaNext:
    def test_first_value_eps_2(self):
        assert solve_beta_next(2.0, D1, [0.0]) == pytest.approx(0.7071068, abs=1e-7)

    def test_second_value_eps_2(self):
        b1 = solve_beta_next(2.0, D1, [0.0])
        assert solve_beta_next(2.0, D1, [b1]) == pytest.approx(1.1441228, abs=1e-7)

    def test_first_value_eps_125(self):
        assert solve_beta_next(1.25, D1, [0.0]) == pytest.approx(0.7247797, abs=1e-7)

    def test_zero_window_gives_closed_form(self):
        for eps in (1.1, 1.6, 3.0, 10.0):
            k = (eps - 1.0) / eps
            assert solve_for_continuation(eps, 0.0) == pytest.approx(k ** ((eps - 1.0) / eps), rel=1e-12)

    def test_window_length_checked(self):
        with pytest.raises(DomainError):
            solve_beta_next(2.0, Q1, [0.0, 0.0])

    def test_negative_window_rejected(self):
        with pytest.raises(DomainError):
            continuation(D1, [-1.0])

    def test_epsilon_checked(self):
        with pytest.raises(DomainError):
            solve_beta_next(1.0, D1, [0.0])

    def test_failure_reports_index_and_final_bracket(self, monkeypatch):
        def stalled(f, a, b, **kwargs):
            return 0.5 * (a + b), SimpleNamespace(converged=False, iterations=6)

        monkeypatch.setattr(solver.optimize, "bisect", stalled)
        with pytest.raises(SolverError) as info:
            solve_beta_next(2.0, D1, [0.7], n=7)
        error = info.value
        assert "beta_7" in str(error)
        assert error.n == 7
        assert error.iterations == 6
        lo, hi = error.bracket
        # c = 0.7 grows the upper end to 2; six halvings leave width 2/64 around y
        assert (lo, hi) == pytest.approx((1.0 - 2.0 / 64, 1.0 + 2.0 / 64))

    def test_failure_without_index(self, monkeypatch):
        monkeypatch.setattr(solver.optimize, "bisect",
                            lambda f, a, b, **kwargs: (b, SimpleNamespace(converged=False, iterations=1)))
        with pytest.raises(SolverError) as info:
            solve_beta_next(2.0, D1, [0.0])
        assert "None" not in str(info.value)

    def test_large_continuation(self):
        eps = 3.0
        c = 1e3
        b = solve_for_continuation(eps, c)
        assert abs(b ** (1.0 / (eps - 1.0)) * (b - c) - (eps - 1.0) / eps) <= 1e-10


@given(eps=st.floats(1.1, 4.0), m=st.floats(0.0, 1e4))
@settings(max_examples=200, deadline=None)
def test_solver_residual(eps, m):
    # c on the scale a table reaches after about m sales
    c = m ** ((eps - 1.0) / eps)
    b = solve_for_continuation(eps, c)
    assert b >= c
    assert abs(b ** (1.0 / (eps - 1.0)) * (b - c) - (eps - 1.0) / eps) <= 1e-10


# -- BetaTable ---------------------------------------------------------------

class TestBetaSequence:
    def test_examples(self):
        table = beta_sequence(2.0, D1, 2)
        assert table.beta(1) == pytest.approx(0.7071068, abs=1e-7)
        assert table.beta(2) == pytest.approx(1.1441228, abs=1e-7)

    def test_gamma_2(self):
        table = beta_sequence(2.0, D1, 2)
        assert gamma(table, 2) == pytest.approx(0.8090170, abs=1e-7)
        assert table.gamma(2) == gamma(table, 2)

    def test_non_positive_index_is_zero(self):
        table = beta_sequence(1.6, Q1, 5)
        for n in (0, -1, -3):
            assert table.beta(n) == 0.0

    def test_beyond_table(self):
        table = beta_sequence(1.6, Q1, 5)
        with pytest.raises(TableRangeError) as info:
            table.beta(6)
        assert info.value.n == 6
        assert info.value.max_index == 5

    def test_table_range_error_is_index_error(self):
        with pytest.raises(IndexError):
            beta_sequence(1.6, Q1, 2).beta(3)

    def test_n_max_must_be_positive(self):
        with pytest.raises(DomainError):
            beta_sequence(2.0, D1, 0)

    def test_epsilon_checked(self):
        with pytest.raises(InvalidModelError):
            beta_sequence(0.9, D1, 3)

    def test_gamma_needs_positive_n(self):
        with pytest.raises(DomainError):
            gamma(beta_sequence(2.0, D1, 2), 0)

    def test_values_read_only(self):
        table = beta_sequence(2.0, D1, 3)
        with pytest.raises(ValueError):
            table.values[0] = 1.0

    def test_extend_reuses_prefix(self):
        short = beta_sequence(1.25, NAMED_DISTRIBUTIONS["q2"], 50)
        longer = short.extend(120)
        assert longer.max_index == 120
        np.testing.assert_array_equal(longer.values[:50], short.values)
        np.testing.assert_array_equal(longer.values, beta_sequence(1.25, NAMED_DISTRIBUTIONS["q2"], 120).values)

    def test_extend_is_noop_when_covered(self):
        table = beta_sequence(2.0, D1, 10)
        assert table.extend(5) is table

    def test_window_and_residual(self):
        table = beta_sequence(1.6, NAMED_DISTRIBUTIONS["q3"], 10)
        np.testing.assert_array_equal(table.window(2), [table.beta(1), 0.0, 0.0])
        assert abs(beta_residual(table, 7)) <= 1e-10
        assert table.residual(7) == beta_residual(table, 7)

    def test_manual_table(self):
        table = BetaTable(2.0, D1, [1.0, 2.0])
        assert table.beta(2) == 2.0
        assert table.matches(2.0, D1)
        assert not table.matches(2.0, Q1)

    def test_solver_tol_recorded(self):
        assert beta_sequence(2.0, D1, 1).solver_tol == 1e-12


class TestTableInvariants:
    @pytest.mark.parametrize("epsilon", [1.25, 1.5, 1.6, 2.0, 3.0])
    @pytest.mark.parametrize("name", ["d1", "d2", "d3", "d4", "q1", "q2", "q3"])
    def test_nondecreasing_and_residual(self, epsilon, name):
        table = long_table(epsilon, name)
        assert table.max_index == LONG_N
        assert np.all(table.values > 0)
        assert np.all(np.diff(table.values) >= -1e-12)
        assert np.max(np.abs(residuals(table))) <= 1e-10

    @pytest.mark.parametrize("epsilon", [1.25, 1.5, 2.0, 3.0])
    @pytest.mark.parametrize("name", ["d1", "d2", "d3", "d4", "q1", "q2", "q3"])
    def test_step_difference_bound(self, epsilon, name):
        table = beta_sequence(epsilon, NAMED_DISTRIBUTIONS[name], 2000)
        for n in range(1, table.max_index + 1):
            step = table.beta(n) - table.beta(n - 1)
            assert step <= step_difference_bound(table, n) + 1e-10

    @pytest.mark.parametrize("epsilon", [1.25, 1.5, 2.0, 3.0])
    def test_step_difference_bound_tight_for_unit_orders(self, epsilon):
        table = beta_sequence(epsilon, D1, 500)
        for n in range(1, table.max_index + 1):
            step = table.beta(n) - table.beta(n - 1)
            assert step == pytest.approx(step_difference_bound(table, n), abs=1e-10)

    @pytest.mark.parametrize("epsilon", [1.25, 1.6])
    @pytest.mark.parametrize("name", ["d2", "d3", "d4", "q1", "q2", "q3"])
    def test_matches_bisection_oracle(self, epsilon, name):
        q = NAMED_DISTRIBUTIONS[name]
        table = beta_sequence(epsilon, q, 500)
        oracle = bisection_oracle(epsilon, q, 500)
        np.testing.assert_allclose(table.values, oracle, rtol=0, atol=1e-9)


@given(weights=st.lists(st.floats(0.0, 1.0), min_size=1, max_size=5), eps=st.floats(1.1, 4.0))
@settings(max_examples=50, deadline=None)
def test_random_distribution_table(weights, eps):
    if sum(weights) < 0.05:
        weights = weights[:-1] + [1.0]
    total = sum(weights)
    q = OrderSizeDistribution(tuple(w / total for w in weights))
    table = beta_sequence(eps, q, 300)
    assert np.all(np.diff(table.values) >= -1e-12)
    assert np.max(np.abs(residuals(table))) <= 1e-10


# -- Asymptotics -------------------------------------------------------------

class TestAsymptotics:
    def test_gamma_limit_example(self):
        assert gamma_limit(1.25, Q1) == pytest.approx(0.8325532, abs=1e-7)

    def test_beta_approximation_example(self):
        assert beta_approximation(1.25, Q1, 500) == pytest.approx(2.8853998, abs=1e-7)

    def test_beta_approximation_needs_positive_n(self):
        with pytest.raises(DomainError):
            beta_approximation(2.0, D1, 0)

    @pytest.mark.parametrize("epsilon", [1.25, 1.5, 1.6, 2.0, 3.0])
    @pytest.mark.parametrize("name", ["d1", "d2", "d4", "q1", "q2", "q3"])
    def test_gamma_converges(self, epsilon, name):
        table = long_table(epsilon, name)
        limit = gamma_limit(epsilon, NAMED_DISTRIBUTIONS[name])
        error_far = abs(gamma(table, LONG_N) - limit)
        error_near = abs(gamma(table, LONG_N // 10) - limit)
        assert error_far < 0.01
        assert error_far < error_near

    @pytest.mark.parametrize("epsilon", [1.25, 1.6, 2.0])
    @pytest.mark.parametrize("name", ["d2", "d3", "d4", "q1", "q2", "q3"])
    def test_approximation_ratio_tends_to_one(self, epsilon, name):
        table = long_table(epsilon, name)
        q = NAMED_DISTRIBUTIONS[name]
        assert table.beta(LONG_N) / beta_approximation(epsilon, q, LONG_N) == pytest.approx(1.0, abs=1e-2)

    def test_unit_orders_gamma_limit_is_one(self):
        assert gamma_limit(1.6, D1) == 1.0


class TestLemmaF:
    def test_example(self):
        assert lemma_f(10, D1, 2.0) == pytest.approx(0.5131670, abs=1e-7)

    def test_vectorized(self):
        n = np.array([5.0, 10.0, 100.0])
        values = lemma_f(n, Q1, 1.6)
        assert values.shape == (3,)
        assert values[1] == pytest.approx(lemma_f(10.0, Q1, 1.6))

    def test_domain(self):
        with pytest.raises(DomainError):
            lemma_f(4, Q1, 1.6)
        with pytest.raises(DomainError):
            lemma_f(np.array([10.0, 2.0]), Q1, 1.6)

    @pytest.mark.parametrize("epsilon", [1.25, 1.5, 2.0, 3.0])
    @pytest.mark.parametrize("q", DISTRIBUTIONS, ids=lambda q: q.label)
    def test_strictly_decreasing_towards_limit(self, epsilon, q):
        n = q.max_size + np.geomspace(0.01, 1e6, 400)
        values = lemma_f(n, q, epsilon)
        assert np.all(np.diff(values) < 0)
        assert np.all(values > lemma_f_limit(q, epsilon))
        assert values[-1] == pytest.approx(lemma_f_limit(q, epsilon), rel=1e-4)

    def test_limit(self):
        assert lemma_f_limit(Q1, 1.25) == pytest.approx(2.5 * 0.2)
        assert lemma_f_limit(delta(3), 2.0) == pytest.approx(1.5)


@given(
    weights=st.lists(st.floats(0.0, 1.0), min_size=1, max_size=6),
    eps=st.floats(1.1, 4.0),
    offset=st.floats(0.01, 1e4),
    growth=st.floats(0.01, 10.0),
)
@settings(max_examples=200, deadline=None)
def test_lemma_f_decreasing_for_random_models(weights, eps, offset, growth):
    if sum(weights) < 0.05:
        weights = weights[:-1] + [1.0]
    total = sum(weights)
    q = OrderSizeDistribution(tuple(w / total for w in weights))
    n1 = q.max_size + offset
    n2 = n1 * (1.0 + growth)
    f1, f2 = lemma_f(n1, q, eps), lemma_f(n2, q, eps)
    assert f2 < f1
    assert f2 > lemma_f_limit(q, eps)

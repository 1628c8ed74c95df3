# policy.py - Closed-form optimal revenue and price.
#
#   v_n(t)  = mu * beta_n * A(t)^(1/eps)
#   p*_n(t) = beta_n^(-1/(eps-1)) * A(t)^(1/eps)
#
# v_n = 0 for n <= 0 (overselling) and at t = T. No price is posted with empty
# inventory or once the horizon is over.

from __future__ import annotations

from dataclasses import dataclass

from beta.sequence import BetaTable, beta_sequence
from model.arrivals import cumulative_arrivals
from model.errors import DomainError, InvalidModelError
from model.market import MarketModel


@dataclass(frozen=True, eq=False)
class PricePolicy:
    """Optimal pricing for a market model, backed by its beta table."""

    model: MarketModel
    betas: BetaTable

    def __post_init__(self):
        if not self.betas.matches(self.model.epsilon, self.model.orders):
            raise InvalidModelError("beta table was built for a different epsilon or order size distribution")

    @classmethod
    def for_model(cls, model, n_max):
        return cls(model, beta_sequence(model.epsilon, model.orders, max(1, n_max)))

    def covering(self, n_max):
        """This policy with its table extended to at least n_max."""
        if n_max <= self.betas.max_index:
            return self
        return PricePolicy(self.model, self.betas.extend(n_max))

    def revenue(self, n, t):
        return optimal_revenue(self, n, t)

    def price(self, n, t):
        return optimal_price(self, n, t)


def optimal_revenue(policy, n, t):
    """Optimal expected revenue v_n(t) with n items left at time t."""
    A = cumulative_arrivals(policy.model.arrivals, t)
    if n <= 0 or A == 0.0:
        return 0.0
    model = policy.model
    return model.mu * policy.betas.beta(n) * A ** (1.0 / model.epsilon)


def optimal_price(policy, n, t):
    """Optimal posted price p*_n(t).

    Raises:
        DomainError: for n <= 0 or t = T (no price is posted)
        TableRangeError: if n is beyond the beta table
    """
    if n <= 0:
        raise DomainError(f"no price is posted with inventory n={n}")
    if t == policy.model.T:
        raise DomainError(f"market is closed at t=T={t}")
    A = cumulative_arrivals(policy.model.arrivals, t)
    if A == 0.0:
        raise DomainError(f"no arrivals remain after t={t}")
    return price_at_level(policy, n, A)


def price_at_level(policy, n, level):
    """p* written in terms of the remaining arrival mass A instead of t."""
    if n <= 0:
        raise DomainError(f"no price is posted with inventory n={n}")
    eps = policy.model.epsilon
    return policy.betas.beta(n) ** (-1.0 / (eps - 1.0)) * level ** (1.0 / eps)


def maximizing_price_from_values(epsilon, mu, C):
    """Price that maximizes a(t) p^-eps (mu p - C): eps/(eps-1) * C / mu."""
    return epsilon / (epsilon - 1.0) * C / mu


def continuation_gap(policy, n, t):
    """C = v_n - sum_i q_i v_(n-i), the value lost by one sale."""
    q = policy.model.orders
    lower = sum(q_i * optimal_revenue(policy, n - i, t) for i, q_i in enumerate(q.probs, start=1))
    return optimal_revenue(policy, n, t) - lower


def revenue_derivative(policy, n, t):
    """dv_n/dt from the Bellman equation: -a(t) mu^eps (eps-1)^(eps-1)/eps^eps C^(1-eps)."""
    model = policy.model
    eps = model.epsilon
    C = continuation_gap(policy, n, t)
    const = (eps - 1.0) ** (eps - 1.0) / eps ** eps
    return -model.arrivals.rate_at(t) * model.mu ** eps * const * C ** (1.0 - eps)


def approximate_revenue(policy, n, t):
    """mu * (n/mu)^((eps-1)/eps) * A(t)^(1/eps); its ratio to v_n tends to 1."""
    model = policy.model
    eps = model.epsilon
    A = cumulative_arrivals(model.arrivals, t)
    if n <= 0:
        return 0.0
    return model.mu * (n / model.mu) ** ((eps - 1.0) / eps) * A ** (1.0 / eps)

# relative.py - Relative revenue difference between comparable models.
#
# Two models are comparable when lambda_1 * mu(q) == lambda_2 * mu(w). Their
# relative difference g_(n,t) = (v_n(t; q, lambda_1) - v_n(t; w, lambda_2)) / v_n(t; w, lambda_2)
# does not depend on t or on the arrival rates, only on q and w:
#
#     g_n = (mu(q)/mu(w))^((eps-1)/eps) * beta_n(q) / beta_n(w) - 1

from __future__ import annotations

from dataclasses import dataclass

from beta.sequence import beta_sequence
from model.errors import ComparabilityError, DomainError, InvalidModelError
from model.market import MarketModel
from pricing.policy import PricePolicy, optimal_revenue

# Relative tolerance on rate1 * mu(q) == rate2 * mu(w)
COMPARABILITY_TOL = 1e-12


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    g: float
    pair: tuple


def check_comparable(q, lambda1, w, lambda2):
    """Raise ComparabilityError unless lambda1 * mu(q) == lambda2 * mu(w) piece by piece."""
    if lambda1.T != lambda2.T:
        raise ComparabilityError(f"horizons differ: {lambda1.T} vs {lambda2.T}")
    if len(lambda1.pieces) != len(lambda2.pieces):
        raise ComparabilityError(
            f"arrival rates have {len(lambda1.pieces)} and {len(lambda2.pieces)} pieces")
    mu_q, mu_w = q.mean, w.mean
    for j, ((t1, r1), (t2, r2)) in enumerate(zip(lambda1.pieces, lambda2.pieces)):
        if t1 != t2:
            raise ComparabilityError(f"piece {j} starts at {t1} vs {t2}", piece=j)
        d1, d2 = r1 * mu_q, r2 * mu_w
        if abs(d1 - d2) > COMPARABILITY_TOL * max(1.0, abs(d2)):
            raise ComparabilityError(
                f"piece {j} (t={t1}): demand {d1!r} vs {d2!r} is not equal", piece=j)


def _table(epsilon, q, n, betas=None):
    if betas is not None:
        if not betas.matches(epsilon, q):
            raise InvalidModelError("beta table does not match epsilon / distribution")
        return betas.extend(n)
    return beta_sequence(epsilon, q, n)


def relative_difference_direct(n, t, q, lambda1, w, lambda2, epsilon, betas_q=None, betas_w=None):
    """g_(n,t) from two full revenue evaluations.

    Raises:
        ComparabilityError: if the models do not have equal demand
        DomainError: for n < 1 or t outside [0, T)
    """
    check_comparable(q, lambda1, w, lambda2)
    if n < 1:
        raise DomainError(f"g_(n,t) needs n >= 1, got {n}")
    if not 0.0 <= t < lambda1.T:
        raise DomainError(f"g_(n,t) needs 0 <= t < T, got t={t}")

    policy_q = PricePolicy(MarketModel(epsilon, lambda1, q), _table(epsilon, q, n, betas_q))
    policy_w = PricePolicy(MarketModel(epsilon, lambda2, w), _table(epsilon, w, n, betas_w))
    v_q = optimal_revenue(policy_q, n, t)
    v_w = optimal_revenue(policy_w, n, t)
    return (v_q - v_w) / v_w


def relative_difference_closed(n, q, w, epsilon, betas_q, betas_w):
    """g_n from the beta tables alone (independent of t and the arrival rates)."""
    if n < 1:
        raise DomainError(f"g_n needs n >= 1, got {n}")
    for table, dist in ((betas_q, q), (betas_w, w)):
        if not table.matches(epsilon, dist):
            raise InvalidModelError("beta table does not match epsilon / distribution")
    k = (epsilon - 1.0) / epsilon
    return (q.mean / w.mean) ** k * betas_q.beta(n) / betas_w.beta(n) - 1.0

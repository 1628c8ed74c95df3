# asymptotics.py - Large-n behaviour of beta_n.
# gamma_n tends to mu(q)^((1-eps)/eps), so (n/mu)^((eps-1)/eps) approximates
# beta_n; f(n; q) is the auxiliary function whose limit drives that result.

import numpy as np

from model.errors import DomainError


def gamma_limit(epsilon, q):
    """lim gamma_n = mu(q)^((1-eps)/eps)."""
    return q.mean ** ((1.0 - epsilon) / epsilon)


def beta_approximation(epsilon, q, n):
    """(n / mu(q))^((eps-1)/eps), asymptotically equivalent to beta_n."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return (n / q.mean) ** ((epsilon - 1.0) / epsilon)


def lemma_f(n, q, epsilon):
    """f(n; q) = n * (1 - sum_i q_i ((n-i)/n)^((eps-1)/eps)) for real n > M.

    Strictly decreasing on (M, inf) with limit mu(q)(eps-1)/eps. Evaluated as
    -n * sum_i q_i expm1(k log1p(-i/n)) so large n does not cancel.

    Args:
        n:       scalar or array of reals, all > M
        q:       OrderSizeDistribution
        epsilon: elasticity, > 1
    """
    n_arr = np.asarray(n, dtype=np.float64)
    if np.any(n_arr <= q.max_size):
        raise DomainError(f"f(n; q) is defined for n > M={q.max_size}")
    k = (epsilon - 1.0) / epsilon
    sizes = np.arange(1, q.max_size + 1, dtype=np.float64)
    terms = np.expm1(k * np.log1p(-np.multiply.outer(1.0 / n_arr, sizes)))
    value = -n_arr * (terms @ q.array)
    return float(value) if value.ndim == 0 else value


def lemma_f_limit(q, epsilon):
    """mu(q) * (eps-1)/eps, the infimum of f(n; q)."""
    return q.mean * (epsilon - 1.0) / epsilon


def step_difference_bound(table, n):
    """(eps-1)/eps * beta_n^(-1/(eps-1)), an upper bound on beta_n - beta_(n-1).

    Holds with equality when M = 1.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    eps = table.epsilon
    return (eps - 1.0) / eps * table.beta(n) ** (-1.0 / (eps - 1.0))

# solver.py - One step of the beta recursion.
#
# beta_n is the positive root of  beta^(1/(eps-1)) * (beta - c) = (eps-1)/eps
# where c = sum_i q_i * beta_(n-i). Substituting y = beta^(1/(eps-1)) gives
#
#     h(y) = y^eps - c*y - (eps-1)/eps
#
# which is smooth at 0, negative there, and has exactly one positive root.
# We bracket the root and bisect in y, then map back with beta = y^(eps-1).

import logging

import numpy as np
from scipy import optimize

from model.errors import DomainError, SolverError

logger = logging.getLogger(__name__)

# Absolute tolerance on the bracket width in y
SOLVER_TOL = 1e-12
MAX_ITERATIONS = 200


def continuation(q, window):
    """c = sum_i q_i * beta_(n-i) for window = (beta_(n-1), ..., beta_(n-M))."""
    window = np.asarray(window, dtype=np.float64)
    if window.shape != (q.max_size,):
        raise DomainError(f"window must hold M={q.max_size} values, got {window.size}")
    if np.any(window < 0):
        raise DomainError("window values must be nonnegative")
    return float(np.dot(q.array, window))


def _polish(h, epsilon, c, y, y_hi):
    """A few Newton steps from the bisection result.

    For large c the slope of h at the root is large, so a 1e-12 bracket in y
    alone can leave a residual above 1e-10. The polished value is kept only if
    it stays in the bracket and does not increase |h|.
    """
    def dh(x):
        return epsilon * x ** (epsilon - 1.0) - c

    if dh(y) <= 0:
        return y
    polished = optimize.newton(h, y, fprime=dh, tol=1e-15, rtol=1e-15, maxiter=8, disp=False)
    if 0.0 < polished <= y_hi and abs(h(polished)) <= abs(h(y)):
        return float(polished)
    return y


def solve_for_continuation(epsilon, c, n=None):
    """Root of the beta equation for a given continuation value c >= 0."""
    k = (epsilon - 1.0) / epsilon
    name = "beta" if n is None else f"beta_{n}"

    def h(y):
        return y ** epsilon - c * y - k

    # h(0) = -k < 0; grow the upper end until the sign changes
    y_hi = max(1.0, c ** (1.0 / (epsilon - 1.0)))
    grow = 0
    while h(y_hi) <= 0:
        y_hi *= 2.0
        grow += 1
        if grow > MAX_ITERATIONS:
            raise SolverError(f"no sign change found for {name} (c={c})", n=n,
                              bracket=(0.0, y_hi), iterations=grow)

    y, info = optimize.bisect(h, 0.0, y_hi, xtol=SOLVER_TOL, maxiter=MAX_ITERATIONS,
                              full_output=True, disp=False)
    if not info.converged:
        # bisection halves [0, y_hi] each step; report the bracket it ended on
        half = y_hi / 2.0 ** info.iterations
        raise SolverError(f"bisection for {name} did not converge (last iterate y={y})",
                          n=n, bracket=(max(0.0, y - half), min(y_hi, y + half)),
                          iterations=info.iterations)
    logger.debug("%s: bracket [0, %g], %d iterations", name, y_hi, info.iterations)
    return _polish(h, epsilon, c, y, y_hi) ** (epsilon - 1.0)


def solve_beta_next(epsilon, q, window, n=None):
    """Compute beta_n from the previous M values.

    Args:
        epsilon: demand elasticity, > 1
        q:       OrderSizeDistribution
        window:  (beta_(n-1), ..., beta_(n-M)), zeros for indices <= 0
        n:       index being solved, used in error messages

    Returns:
        beta_n as a float.

    Raises:
        SolverError: if the root finder does not converge
    """
    if epsilon <= 1.0:
        raise DomainError(f"epsilon must be > 1, got {epsilon}")
    return solve_for_continuation(epsilon, continuation(q, window), n=n)

from beta.solver import solve_beta_next, SOLVER_TOL, MAX_ITERATIONS
from beta.sequence import BetaTable, beta_sequence, gamma, beta_residual
from beta.asymptotics import (
    gamma_limit, beta_approximation, lemma_f, lemma_f_limit, step_difference_bound,
)

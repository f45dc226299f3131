"""1D heat equation with a shared time-varying Dirichlet value at both ends.

    y_t = nu * y_xx,   x in (0, 1),   y(0, t) = y(1, t) = u(t).

Discretization: second-order central differences on a uniform interior grid,
Crank-Nicolson in time with one tridiagonal solve per snapshot step.  The
boundary value enters through the first/last rows of the difference stencil.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from ..errors import SolverDivergenceError
from ..signals import MultiSineSignal, eval_signal

DIVERGENCE_LIMIT = 1e8


@dataclass(frozen=True)
class HeatConfig:
    nu: float                   # diffusivity, > 0
    n_interior: int = 1023      # interior grid points; dx = 1/(n_interior+1)
    horizon: float = 1.0
    n_times: int = 1001         # snapshot count (includes t=0)

    def __post_init__(self):
        if self.nu <= 0:
            raise ValueError("nu must be positive")
        if self.n_interior < 3:
            raise ValueError("n_interior must be >= 3")
        if self.n_times < 2:
            raise ValueError("n_times must be >= 2")

    @property
    def dx(self) -> float:
        return 1.0 / (self.n_interior + 1)

    @property
    def x_grid(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.n_interior + 2)[1:-1]

    @property
    def t_eval(self) -> np.ndarray:
        return np.linspace(0.0, self.horizon, self.n_times)


def heat_initial_condition(x_grid: np.ndarray, alpha: float = 100.0) -> np.ndarray:
    """Fixed exponential boundary-layer profile used for every trajectory."""
    x = np.asarray(x_grid, dtype=float)
    return np.exp(alpha * (x - 1.0)) + np.exp(-alpha * x) - np.exp(-alpha)


def _bc_samples(bc, t_eval: np.ndarray) -> np.ndarray:
    if isinstance(bc, MultiSineSignal):
        return eval_signal(bc, t_eval)
    u = np.asarray(bc, dtype=float)
    if u.shape != t_eval.shape:
        raise ValueError(
            f"boundary samples have shape {u.shape}, expected {t_eval.shape}")
    return u


def solve_heat(cfg: HeatConfig, bc, initial: np.ndarray):
    """Integrate the heat equation and return (t_eval, u_samples, states).

    Parameters
    ----------
    bc : MultiSineSignal or array of length n_times
        Boundary value u(t), applied at both ends.
    initial : array of length n_interior
        Initial interior state.

    Returns
    -------
    t_eval : (K,) snapshot times
    u : (K,) boundary samples
    states : (n_interior, K) interior solution snapshots
    """
    initial = np.asarray(initial, dtype=float)
    if initial.shape != (cfg.n_interior,):
        raise ValueError(
            f"initial has shape {initial.shape}, expected ({cfg.n_interior},)")

    t_eval = cfg.t_eval
    u = _bc_samples(bc, t_eval)
    n = cfg.n_interior
    dt = t_eval[1] - t_eval[0]
    coef = cfg.nu / cfg.dx ** 2

    # L = nu/dx^2 * tridiag(1, -2, 1); boundary forcing f(t) = coef*u(t)*(e_1+e_n).
    main = np.full(n, -2.0 * coef)
    off = np.full(n - 1, coef)
    lhs = sp.diags(
        [-0.5 * dt * off, 1.0 - 0.5 * dt * main, -0.5 * dt * off],
        offsets=[-1, 0, 1], format="csc")
    solve = spla.factorized(lhs)

    states = np.empty((n, len(t_eval)))
    states[:, 0] = initial
    y = initial.copy()
    half = 0.5 * dt
    for m in range(len(t_eval) - 1):
        # rhs = (I + dt/2 L) y_m + dt/2 (f_m + f_{m+1})
        rhs = y + half * (main * y)
        rhs[:-1] += half * coef * y[1:]
        rhs[1:] += half * coef * y[:-1]
        f_sum = coef * (u[m] + u[m + 1])
        rhs[0] += half * f_sum
        rhs[-1] += half * f_sum
        y = solve(rhs)
        if not np.all(np.isfinite(y)) or np.max(np.abs(y)) > DIVERGENCE_LIMIT:
            raise SolverDivergenceError(
                f"heat solve diverged at step {m + 1} (t={t_eval[m + 1]:.6g})")
        states[:, m + 1] = y
    return t_eval, u, states

"""Forced viscous Burgers equation on [0, 1] with Dirichlet boundary inputs.

    y_t + y y_x = nu * y_xx + s0(x) * w3(t),
    y(0, t) = w1(t),  y(1, t) = w2(t),

with the localized source profile s0(x) = sech((x - 0.5)/0.05) and an
initial condition that ramps smoothly between the boundary values at t=0.

Space: Chebyshev collocation (Gauss-Lobatto nodes mapped to [0, 1]); the
nonlinear and diffusive terms use the Chebyshev differentiation matrix and
the Dirichlet rows are replaced by the boundary signals.  Time: adaptive
Dormand-Prince 5(4) with snapshots taken from dense output.  Snapshots are
interpolated onto a uniform output grid with the barycentric formula.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from ..errors import SolverDivergenceError
from ..signals import MultiSineSignal, eval_signal

DIVERGENCE_LIMIT = 1e8
RTOL = 1e-6
ATOL = 1e-8


@dataclass(frozen=True)
class BurgersConfig:
    nu: float                 # viscosity, > 0
    n_cheb: int = 64          # interior collocation points
    n_uniform: int = 1001     # uniform output grid size (includes boundaries)
    horizon: float = 2.0
    n_times: int = 1001

    def __post_init__(self):
        if self.nu <= 0:
            raise ValueError("nu must be positive")
        if self.n_cheb < 8:
            raise ValueError("n_cheb must be >= 8")
        if self.n_uniform < 2:
            raise ValueError("n_uniform must be >= 2")
        if self.n_times < 2:
            raise ValueError("n_times must be >= 2")

    @property
    def t_eval(self) -> np.ndarray:
        return np.linspace(0.0, self.horizon, self.n_times)

    @property
    def x_uniform(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.n_uniform)


def burgers_source_profile(x) -> np.ndarray:
    """Spatial source profile sech((x - 0.5)/0.05)."""
    return 1.0 / np.cosh((np.asarray(x, dtype=float) - 0.5) / 0.05)


def burgers_initial_condition(x, w1_0: float, w2_0: float) -> np.ndarray:
    """Smooth ramp between the t=0 boundary values (tanh centered at 0.3)."""
    x = np.asarray(x, dtype=float)
    return w2_0 + 0.5 * (w1_0 - w2_0) * (1.0 - np.tanh((x - 0.3) / 0.1))


def chebyshev_points_and_matrix(n_total: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Lobatto nodes on [0, 1] (increasing) and the first-derivative
    collocation matrix on those nodes."""
    n = n_total - 1
    j = np.arange(n_total)
    z = np.cos(np.pi * j / n)                  # 1 ... -1
    c = np.hstack([2.0, np.ones(n - 1), 2.0]) * (-1.0) ** j
    zz = np.tile(z, (n_total, 1)).T
    dz = zz - zz.T + np.eye(n_total)
    d = np.outer(c, 1.0 / c) / dz
    d -= np.diag(d.sum(axis=1))
    # map x = (1 - z)/2: increasing in j, d/dx = -2 d/dz
    x = (1.0 - z) / 2.0
    return x, -2.0 * d


def barycentric_matrix(x_nodes: np.ndarray, x_out: np.ndarray) -> np.ndarray:
    """Interpolation matrix from Gauss-Lobatto nodes to arbitrary points.

    Uses the closed-form Chebyshev barycentric weights (+-1 with halved
    endpoints).  Output points that coincide with a node get an exact
    one-hot row.
    """
    n_total = len(x_nodes)
    w = (-1.0) ** np.arange(n_total)
    w[0] *= 0.5
    w[-1] *= 0.5
    diff = x_out[:, None] - x_nodes[None, :]
    exact_row, exact_col = np.nonzero(np.abs(diff) < 1e-14)
    diff[exact_row, :] = 1.0                     # avoid 0-division; rows overwritten
    p = w / diff
    p /= p.sum(axis=1, keepdims=True)
    p[exact_row, :] = 0.0
    p[exact_row, exact_col] = 1.0
    return p


def solve_burgers(cfg: BurgersConfig, w1: MultiSineSignal, w2: MultiSineSignal,
                  w3: MultiSineSignal):
    """Integrate the Burgers system and return (t_eval, inputs, states).

    Returns
    -------
    t_eval : (K,) snapshot times
    inputs : (3, K) rows w1(t), w2(t), w3(t) on the snapshot grid
    states : (n_uniform, K) solution on the uniform output grid
    """
    t_eval = cfg.t_eval
    n_total = cfg.n_cheb + 2
    x_cheb, d1 = chebyshev_points_and_matrix(n_total)
    d2 = d1 @ d1
    s0 = burgers_source_profile(x_cheb)
    nu = cfg.nu

    def rhs(t, y_int):
        yf = np.empty(n_total)
        yf[0] = eval_signal(w1, t)
        yf[-1] = eval_signal(w2, t)
        yf[1:-1] = y_int
        dydx = d1 @ yf
        d2ydx2 = d2 @ yf
        full = -yf * dydx + nu * d2ydx2 + s0 * eval_signal(w3, t)
        return full[1:-1]

    y0 = burgers_initial_condition(
        x_cheb[1:-1], eval_signal(w1, 0.0), eval_signal(w2, 0.0))
    sol = solve_ivp(rhs, (t_eval[0], t_eval[-1]), y0, method="RK45",
                    t_eval=t_eval, rtol=RTOL, atol=ATOL)
    if not sol.success:
        raise SolverDivergenceError(f"burgers RK45 failed: {sol.message}")
    if not np.all(np.isfinite(sol.y)) or np.max(np.abs(sol.y)) > DIVERGENCE_LIMIT:
        raise SolverDivergenceError("burgers solve produced non-finite or "
                                    "unbounded state")

    inputs = np.vstack([eval_signal(w1, t_eval),
                        eval_signal(w2, t_eval),
                        eval_signal(w3, t_eval)])
    full = np.empty((n_total, len(t_eval)))
    full[0, :] = inputs[0]
    full[-1, :] = inputs[1]
    full[1:-1, :] = sol.y
    p = barycentric_matrix(x_cheb, cfg.x_uniform)
    states = p @ full
    return t_eval, inputs, states

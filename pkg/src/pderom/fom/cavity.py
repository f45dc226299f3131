"""2D lid-driven cavity flow in vorticity-streamfunction form.

    w_t + v1 w_x + v2 w_y = (1/Re) (w_xx + w_yy),
    lap(psi) = -w,   v1 = psi_y,   v2 = -psi_x,

on the unit square with no-slip walls.  The top lid moves horizontally with
velocity profile*f(t) where profile(x) = 1 + 0.3 sin(2 pi x) + 0.2 x.

Discretization: second-order central differences on a uniform grid including
boundaries, forward Euler in time with a fixed inner step.  The interior
Poisson problem (psi = 0 on all walls) is solved every inner step with a
one-time sparse LU factorization of the 5-point Laplacian.  Wall vorticity
uses Thom's formula, with the lid-velocity correction on the top wall.

State snapshots stack row-major flattened w then psi into one vector.
Arrays are indexed [i, j] with i the vertical (y) index, i=0 the bottom
wall and i=-1 the lid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from ..errors import SolverConfigurationError, SolverDivergenceError
from ..signals import MultiSineSignal, eval_signal

DIVERGENCE_LIMIT = 1e8
POISSON_RTOL = 1e-8


@dataclass(frozen=True)
class CavityConfig:
    re: float                        # Reynolds number, > 0
    n_interior_per_dim: int = 32     # 34x34 grid including boundaries
    dt_inner: float = 1e-3
    snapshot_stride_time: float = 0.02
    horizon: float = 2.0

    def __post_init__(self):
        if self.re <= 0:
            raise ValueError("re must be positive")
        if self.n_interior_per_dim < 8:
            raise ValueError("n_interior_per_dim must be >= 8")
        ratio = self.snapshot_stride_time / self.dt_inner
        if abs(ratio - round(ratio)) > 1e-9 * max(1.0, ratio):
            raise ValueError("dt_inner must divide snapshot_stride_time")
        n_snap = self.horizon / self.snapshot_stride_time
        if abs(n_snap - round(n_snap)) > 1e-9 * max(1.0, n_snap):
            raise ValueError("snapshot_stride_time must divide horizon")

    @property
    def n_grid(self) -> int:
        return self.n_interior_per_dim + 2

    @property
    def h(self) -> float:
        return 1.0 / (self.n_grid - 1)

    @property
    def stride(self) -> int:
        return round(self.snapshot_stride_time / self.dt_inner)

    @property
    def n_times(self) -> int:
        return round(self.horizon / self.snapshot_stride_time) + 1

    @property
    def t_eval(self) -> np.ndarray:
        return self.snapshot_stride_time * np.arange(self.n_times)

    @property
    def x_grid(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.n_grid)


def cavity_lid_profile(x) -> np.ndarray:
    """Fixed non-symmetric spatial profile of the lid velocity."""
    x = np.asarray(x, dtype=float)
    return 1.0 + 0.3 * np.sin(2.0 * np.pi * x) + 0.2 * x


def _interior_laplacian(n_int: int, h: float) -> sp.csc_matrix:
    """Negated 5-point Laplacian (SPD) on the n_int x n_int interior,
    homogeneous Dirichlet."""
    lap1d = sp.diags([-1.0, 2.0, -1.0], [-1, 0, 1],
                     shape=(n_int, n_int), format="csr")
    eye = sp.identity(n_int, format="csr")
    return ((sp.kron(lap1d, eye) + sp.kron(eye, lap1d)) / h ** 2).tocsc()


def _laplacian_full(f: np.ndarray, h: float) -> np.ndarray:
    """5-point Laplacian of a full-grid field, evaluated at interior points."""
    return (f[1:-1, 2:] + f[1:-1, :-2] + f[2:, 1:-1] + f[:-2, 1:-1]
            - 4.0 * f[1:-1, 1:-1]) / h ** 2


def solve_cavity(cfg: CavityConfig, lid: MultiSineSignal):
    """Integrate the cavity flow and return (t_eval, lid_samples, states).

    Returns
    -------
    t_eval : (K,) snapshot times
    lid_samples : (K,) lid modulation f(t) on the snapshot grid
    states : (2*n_grid^2, K) stacked [flat(w); flat(psi)] snapshots
    """
    n = cfg.n_grid
    h = cfg.h
    dt = cfg.dt_inner
    stride = cfg.stride
    n_steps = stride * (cfg.n_times - 1)
    t_eval = cfg.t_eval

    profile = cavity_lid_profile(cfg.x_grid)
    f_inner = eval_signal(lid, dt * np.arange(n_steps + 1))
    f_inner = np.atleast_1d(f_inner)

    poisson = spla.factorized(_interior_laplacian(n - 2, h))

    omega = np.zeros((n, n))
    psi = np.zeros((n, n))
    states = np.empty((2 * n * n, cfg.n_times))

    def thom_walls(t_index: int) -> None:
        # order matters: lid formula wins at the top corners
        omega[1:-1, 0] = -2.0 * psi[1:-1, 1] / h ** 2
        omega[1:-1, -1] = -2.0 * psi[1:-1, -2] / h ** 2
        omega[0, :] = -2.0 * psi[1, :] / h ** 2
        omega[-1, :] = (-2.0 * psi[-2, :] / h ** 2
                        - 2.0 * profile * f_inner[t_index] / h)

    def record(k: int) -> None:
        resid = np.max(np.abs(_laplacian_full(psi, h) + omega[1:-1, 1:-1]))
        if resid > POISSON_RTOL * (1.0 + np.max(np.abs(omega))):
            raise SolverConfigurationError(
                f"Poisson residual {resid:.3e} above tolerance at snapshot {k}")
        states[:n * n, k] = omega.ravel()
        states[n * n:, k] = psi.ravel()

    record(0)
    snap = 1
    inv_re = 1.0 / cfg.re
    for m in range(n_steps):
        thom_walls(m)
        v1 = (psi[2:, 1:-1] - psi[:-2, 1:-1]) / (2.0 * h)
        v2 = -(psi[1:-1, 2:] - psi[1:-1, :-2]) / (2.0 * h)
        wx = (omega[1:-1, 2:] - omega[1:-1, :-2]) / (2.0 * h)
        wy = (omega[2:, 1:-1] - omega[:-2, 1:-1]) / (2.0 * h)
        omega[1:-1, 1:-1] += dt * (-(v1 * wx + v2 * wy)
                                   + inv_re * _laplacian_full(omega, h))
        if not np.all(np.isfinite(omega[1:-1, 1:-1])) or \
                np.max(np.abs(omega[1:-1, 1:-1])) > DIVERGENCE_LIMIT:
            raise SolverDivergenceError(
                f"cavity solve diverged at inner step {m + 1}")
        psi[1:-1, 1:-1] = poisson(omega[1:-1, 1:-1].ravel()).reshape(n - 2, n - 2)
        if (m + 1) % stride == 0:
            thom_walls(m + 1)
            record(snap)
            snap += 1

    lid_samples = f_inner[::stride].copy()
    return t_eval, lid_samples, states

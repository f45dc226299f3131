"""Randomized multi-sine input signals.

Every boundary condition and forcing term in this package is driven by a
signal of the form

    u(t) = bias + sum_k amps[k] * sin(2*pi*freqs[k]*t + phases[k]).

Signal parameters are drawn uniformly from per-component intervals using a
seeded ``numpy.random.Generator`` (PCG64, 64-bit seed).  The draw order is
fixed as (amp_k, freq_k, phase_k) for k = 1..n, followed by the bias, so
that identical seeds reproduce identical signals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

Interval = tuple[float, float]


@dataclass(frozen=True)
class MultiSineSpec:
    """Sampling distribution for a multi-sine signal.

    Each interval is closed; a degenerate interval [a, a] collapses to the
    constant a.  ``n_components = 0`` yields a pure-bias signal.
    """

    n_components: int
    amp_range: Interval
    freq_range: Interval          # Hz
    phase_range: Interval = (0.0, 2.0 * np.pi)
    bias_range: Interval = (0.0, 0.0)

    def __post_init__(self):
        if self.n_components < 0:
            raise ValueError("n_components must be >= 0")
        for name in ("amp_range", "freq_range", "phase_range", "bias_range"):
            lo, hi = getattr(self, name)
            if not (np.isfinite(lo) and np.isfinite(hi) and lo <= hi):
                raise ValueError(f"{name} must be a finite interval with lo <= hi")


@dataclass(frozen=True)
class MultiSineSignal:
    """One realized multi-sine signal (immutable after sampling)."""

    bias: float
    amps: np.ndarray
    freqs: np.ndarray
    phases: np.ndarray

    def __post_init__(self):
        amps = np.atleast_1d(np.asarray(self.amps, dtype=float))
        freqs = np.atleast_1d(np.asarray(self.freqs, dtype=float))
        phases = np.atleast_1d(np.asarray(self.phases, dtype=float))
        if not (amps.shape == freqs.shape == phases.shape):
            raise ValueError("amps, freqs, phases must have identical length")
        object.__setattr__(self, "amps", amps)
        object.__setattr__(self, "freqs", freqs)
        object.__setattr__(self, "phases", phases)

    def to_dict(self) -> dict:
        return {
            "bias": float(self.bias),
            "amps": self.amps.tolist(),
            "freqs": self.freqs.tolist(),
            "phases": self.phases.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MultiSineSignal":
        return cls(
            bias=float(d["bias"]),
            amps=np.asarray(d["amps"], dtype=float),
            freqs=np.asarray(d["freqs"], dtype=float),
            phases=np.asarray(d["phases"], dtype=float),
        )

    @classmethod
    def constant(cls, value: float) -> "MultiSineSignal":
        """Signal that evaluates identically to ``value``."""
        z = np.zeros(0)
        return cls(bias=float(value), amps=z, freqs=z, phases=z)


def sample_multisine(spec: MultiSineSpec, rng: np.random.Generator) -> MultiSineSignal:
    """Draw one signal from ``spec``.

    Consumes exactly 3*n_components + 1 uniform draws from ``rng`` in the
    documented order, so sampling is reproducible for a given seed.
    """
    amps = np.empty(spec.n_components)
    freqs = np.empty(spec.n_components)
    phases = np.empty(spec.n_components)
    for k in range(spec.n_components):
        amps[k] = rng.uniform(*spec.amp_range)
        freqs[k] = rng.uniform(*spec.freq_range)
        phases[k] = rng.uniform(*spec.phase_range)
    bias = rng.uniform(*spec.bias_range)
    return MultiSineSignal(bias=bias, amps=amps, freqs=freqs, phases=phases)


def eval_signal(sig: MultiSineSignal, t):
    """Evaluate ``sig`` at time(s) ``t`` (scalar or ndarray)."""
    t = np.asarray(t, dtype=float)
    if sig.amps.size == 0:
        out = np.full(t.shape, sig.bias)
    else:
        phase = 2.0 * np.pi * np.multiply.outer(t, sig.freqs) + sig.phases
        out = sig.bias + np.sin(phase) @ sig.amps
    return float(out) if out.ndim == 0 else out

"""Synthetic-data generators: exact samplers used as independent oracles.

Every generator is a pure function of (parameters, seed) and samples by
inverse CDF, so severities are exact draws from the target distribution
and never fall below the threshold.  Uniform draws come from the
half-open interval [0, 1), keeping severities finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalog import BinnedCounts, EventCatalog, EventRecord
from .lgcp import LatentPath, OuParams, ou_moments
from .powerlaw import PiecewiseModel, PowerLawModel, _piecewise_norm
from .rng import substream

__all__ = [
    "SynthSpec",
    "sample_power_law",
    "sample_piecewise",
    "simulate_lgcp_counts",
    "synthetic_catalog",
]


@dataclass(frozen=True)
class SynthSpec:
    """Recipe for one synthetic dataset.

    kind is one of "power-law", "piecewise", "lgcp"; model is the matching
    parameter record; n counts severities (or bins for lgcp, with dt as
    the bin width in days).
    """

    kind: str
    model: PowerLawModel | PiecewiseModel | OuParams
    n: int
    seed: int
    dt: float = 30.0

    def __post_init__(self):
        if self.kind not in ("power-law", "piecewise", "lgcp"):
            raise ValueError(f"unknown synthetic kind {self.kind!r}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")


def power_law_inverse_cdf(model: PowerLawModel, u) -> np.ndarray:
    """Quantile function x = x_min * (1-u)^{1/(1-alpha)} for u in [0,1)."""
    u = np.asarray(u, dtype=float)
    return model.x_min * (1.0 - u) ** (1.0 / (1.0 - model.alpha))


def sample_power_law(model: PowerLawModel, n: int, seed: int) -> np.ndarray:
    """n i.i.d. severities from the single power-law tail."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    u = substream(seed).random(n)
    return power_law_inverse_cdf(model, u)


def piecewise_inverse_cdf(model: PiecewiseModel, u) -> np.ndarray:
    """Quantile function of the two-segment tail for u in [0,1)."""
    u = np.atleast_1d(np.asarray(u, dtype=float))
    c, mass1, _ = _piecewise_norm(model)
    a1, a2 = model.alpha1, model.alpha2
    out = np.empty_like(u)
    low = u < mass1
    # segment 1: invert F(x) = c*x_min*(1 - (x/x_min)^(1-a1))/(a1-1)
    if abs(a1 - 1.0) < 1e-12:
        out[low] = model.x_min * np.exp(u[low] / (c * model.x_min))
    else:
        inner = 1.0 - u[low] * (a1 - 1.0) / (c * model.x_min)
        out[low] = model.x_min * inner ** (1.0 / (1.0 - a1))
    # segment 2: conditional tail above the break is a pure power law
    u_cond = (u[~low] - mass1) / (1.0 - mass1)
    out[~low] = model.x_break * (1.0 - u_cond) ** (1.0 / (1.0 - a2))
    return out


def sample_piecewise(model: PiecewiseModel, n: int, seed: int) -> np.ndarray:
    """n i.i.d. severities from the piecewise power-law tail."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    u = substream(seed).random(n)
    return piecewise_inverse_cdf(model, u)


def simulate_lgcp_counts(
    params: OuParams, n_bins: int, dt: float, seed: int
) -> tuple[LatentPath, BinnedCounts]:
    """Forward-simulate the latent log-intensity and binned counts.

    x_0 comes from the stationary density, subsequent values from the
    exact mean-reverting transition; bin counts are Poisson with mean
    dt * exp(x_i).  Returns both the latent truth and the observations.
    """
    if n_bins < 1:
        raise ValueError(f"n_bins must be >= 1, got {n_bins}")
    if dt <= 0:
        raise ValueError(f"dt must be > 0, got {dt}")
    rng = substream(seed)
    x = np.empty(n_bins)
    stat_sd = params.sigma / math.sqrt(2.0 * params.omega)
    x[0] = params.mu + stat_sd * rng.standard_normal()
    mean_step = math.exp(-params.omega * dt)
    step_sd = math.sqrt(ou_moments(0.0, params, dt)[1])
    for i in range(1, n_bins):
        x[i] = params.mu + (x[i - 1] - params.mu) * mean_step + step_sd * rng.standard_normal()
    counts = rng.poisson(dt * np.exp(x))
    path = LatentPath(dt=dt, x=x)
    binned = BinnedCounts(dt=dt, counts=tuple(int(c) for c in counts), origin=0.0)
    return path, binned


def synthetic_catalog(spec: SynthSpec) -> EventCatalog:
    """Generate an event catalog matching the CSV schema of real inputs.

    For severity kinds ("power-law", "piecewise"), event times are spread
    uniformly at one event per day starting 1970-01-01 so n events span n
    days.  For "lgcp", times follow the simulated intensity within each
    bin (exponential gaps at that bin's rate) and severities are drawn
    from a reference power-law tail (alpha=2.4, x_min=10).
    """
    if spec.kind == "power-law":
        sev = sample_power_law(spec.model, spec.n, spec.seed)
        times = np.arange(spec.n, dtype=float)
    elif spec.kind == "piecewise":
        sev = sample_piecewise(spec.model, spec.n, spec.seed)
        times = np.arange(spec.n, dtype=float)
    else:
        path, _ = simulate_lgcp_counts(spec.model, spec.n, spec.dt, spec.seed)
        rng = substream(spec.seed, 1)
        times_list: list[float] = []
        for i, rate in enumerate(np.exp(path.x)):
            # exponential gaps at the bin's intensity; memorylessness makes
            # restarting at each bin edge exact for a piecewise-constant rate
            t = i * spec.dt
            while True:
                t += rng.exponential(1.0 / rate)
                if t >= (i + 1) * spec.dt:
                    break
                times_list.append(t)
        times = np.asarray(times_list)
        ref = PowerLawModel(alpha=2.4, x_min=10.0)
        sev = power_law_inverse_cdf(ref, substream(spec.seed, 2).random(times.size))

    order = np.argsort(times, kind="stable")
    events = tuple(
        EventRecord(
            time=float(times[i]),
            severity=int(math.floor(sev[i])),
            weapon="synthetic",
            source=f"synth-{spec.kind}",
        )
        for i in order
    )
    if not events:
        return EventCatalog(events=(), span=None)
    span = (events[0].time, events[-1].time)
    return EventCatalog(events=events, span=span)

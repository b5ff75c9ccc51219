"""Log-Gaussian Cox process with mean-reverting latent log-intensity.

The observed bin counts y_i are Poisson with mean dt * exp(x_i), where
the latent log-intensity x follows an Ornstein-Uhlenbeck process

    dx = -omega (x - mu) dt + sigma dB.

The discrete transition is exact (no Euler error) and x_0 is anchored by
the stationary density Normal(mu, sigma^2 / (2 omega)).  Paths are
sampled by Metropolis-adjusted Langevin (MALA) sweeps alternating with
random-walk Metropolis updates of (log omega, mu, log sigma).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .catalog import BinnedCounts
from .errors import AdaptationError
from .rng import substream

__all__ = [
    "OuParams",
    "LatentPath",
    "PriorConfig",
    "McmcConfig",
    "PosteriorDraws",
    "ForecastDistribution",
    "ou_moments",
    "log_posterior",
    "grad_log_posterior",
    "mala_step",
    "update_params",
    "sample_posterior",
    "forecast_counts",
]

# MALA acceptance optimum; random-walk optimum for the scalar updates
MALA_TARGET = 0.574
RW_TARGET = 0.44

_LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class OuParams:
    """Mean-reverting process parameters.

    omega is the reversion rate (per day), mu the long-run mean of the
    log-intensity (log events per day), sigma the diffusion amplitude
    (per sqrt(day)).
    """

    omega: float
    mu: float
    sigma: float

    def __post_init__(self):
        if not (self.omega > 0):
            raise ValueError(f"omega must be > 0, got {self.omega}")
        if not (self.sigma > 0):
            raise ValueError(f"sigma must be > 0, got {self.sigma}")
        if not math.isfinite(self.mu):
            raise ValueError(f"mu must be finite, got {self.mu}")

    @property
    def stationary_variance(self) -> float:
        return self.sigma**2 / (2.0 * self.omega)


@dataclass(frozen=True, eq=False)
class LatentPath:
    """Log-intensity values, one per bin of width dt days."""

    dt: float
    x: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.x, dtype=float)
        if not (self.dt > 0):
            raise ValueError(f"dt must be > 0, got {self.dt}")
        if arr.ndim != 1:
            raise ValueError(f"x must be one-dimensional, got shape {arr.shape}")
        if arr.size and not np.all(np.isfinite(arr)):
            raise ValueError("latent path contains nonfinite values")
        object.__setattr__(self, "x", arr)

    @property
    def intensity(self) -> np.ndarray:
        """Events per day, exp(x)."""
        return np.exp(self.x)


@dataclass(frozen=True)
class PriorConfig:
    """Independent Gaussian priors on (log omega, mu, log sigma)."""

    log_omega_mean: float = math.log(1.0 / 365.0)
    log_omega_sd: float = 1.5
    mu_mean: float = 0.0
    mu_sd: float = 2.0
    log_sigma_mean: float = math.log(0.05)
    log_sigma_sd: float = 1.5

    def __post_init__(self):
        for name in ("log_omega_sd", "mu_sd", "log_sigma_sd"):
            if not (getattr(self, name) > 0):
                raise ValueError(f"{name} must be > 0")

    @classmethod
    def from_counts(cls, counts: BinnedCounts) -> "PriorConfig":
        """Center the mu prior on the empirical mean log-rate.

        The mean bin count is floored at 0.5 so empty records still give
        a finite center.
        """
        y = counts.counts_array
        ybar = max(float(y.mean()) if y.size else 0.0, 0.5)
        return cls(mu_mean=math.log(ybar / counts.dt))

    @property
    def means(self) -> np.ndarray:
        return np.array([self.log_omega_mean, self.mu_mean, self.log_sigma_mean])

    @property
    def sds(self) -> np.ndarray:
        return np.array([self.log_omega_sd, self.mu_sd, self.log_sigma_sd])


@dataclass(frozen=True)
class McmcConfig:
    """Chain-length and proposal settings for sample_posterior."""

    n_samples: int = 2000
    burn_in: int = 5000
    thin: int = 5
    step_size_init: float = 0.1
    seed: int = 0
    proposal_scales: tuple[float, float, float] = (0.4, 0.25, 0.4)
    adapt_scales: bool = True

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError(f"n_samples must be >= 1, got {self.n_samples}")
        if self.burn_in < 0:
            raise ValueError(f"burn_in must be >= 0, got {self.burn_in}")
        if self.thin < 1:
            raise ValueError(f"thin must be >= 1, got {self.thin}")
        if not (self.step_size_init > 0):
            raise ValueError(f"step_size_init must be > 0, got {self.step_size_init}")
        if any(s < 0 for s in self.proposal_scales):
            raise ValueError("proposal_scales must be >= 0")


@dataclass(frozen=True, eq=False)
class PosteriorDraws:
    """Thinned post-burn-in draws of the latent path and parameters."""

    paths: tuple[LatentPath, ...]
    params: tuple[OuParams, ...]
    path_acceptance: float
    param_acceptance: tuple[float, float, float]
    step_size: float
    seed: int

    def __post_init__(self):
        if len(self.paths) != len(self.params):
            raise ValueError("paths and params must align")
        rates = (self.path_acceptance, *self.param_acceptance)
        if any(not (0.0 <= r <= 1.0) for r in rates):
            raise ValueError("acceptance rates must lie in [0, 1]")

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def dt(self) -> float:
        return self.paths[0].dt

    @property
    def paths_array(self) -> np.ndarray:
        """(n_draws, n_bins) matrix of latent values."""
        return np.vstack([p.x for p in self.paths])

    @property
    def params_array(self) -> np.ndarray:
        """(n_draws, 3) matrix with columns omega, mu, sigma."""
        return np.array([[p.omega, p.mu, p.sigma] for p in self.params])


@dataclass(frozen=True, eq=False)
class ForecastDistribution:
    """Pooled Monte Carlo totals of events over a forecast horizon."""

    horizon: float
    dt: float
    counts: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.counts, dtype=np.int64)
        if not (self.horizon > 0):
            raise ValueError(f"horizon must be > 0, got {self.horizon}")
        if arr.size == 0:
            raise ValueError("forecast requires at least one simulated total")
        if np.any(arr < 0):
            raise ValueError("counts must be nonnegative")
        object.__setattr__(self, "counts", arr)

    @property
    def mean(self) -> float:
        return float(self.counts.mean())

    def quantile(self, q: float) -> float:
        return float(np.quantile(self.counts, q))

    @property
    def summary(self) -> tuple[float, float, float, float]:
        """(mean, q05, q50, q95), recomputable from counts."""
        return (self.mean, self.quantile(0.05), self.quantile(0.50), self.quantile(0.95))

    def prob_range(self, lo: float, hi: float) -> float:
        """P(lo <= total <= hi), bounds inclusive."""
        return float(np.mean((self.counts >= lo) & (self.counts <= hi)))


def ou_moments(x_prev: float, params: OuParams, dt: float) -> tuple[float, float]:
    """Exact transition mean and variance of the process over dt days."""
    if dt < 0:
        raise ValueError(f"dt must be >= 0, got {dt}")
    decay = math.exp(-params.omega * dt)
    mean = params.mu + (x_prev - params.mu) * decay
    var = params.stationary_variance * (1.0 - decay * decay)
    return mean, var


def _prior_logpdf(theta: np.ndarray, priors: PriorConfig) -> float:
    z = (theta - priors.means) / priors.sds
    return float(-0.5 * np.sum(z * z) - np.sum(np.log(priors.sds)) - 1.5 * _LOG_2PI)


def _theta(params: OuParams) -> np.ndarray:
    return np.array([math.log(params.omega), params.mu, math.log(params.sigma)])


def _check_aligned(path: LatentPath, counts: BinnedCounts) -> None:
    if len(path.x) != len(counts.counts):
        raise ValueError(
            f"path has {len(path.x)} bins but counts has {len(counts.counts)}"
        )
    if path.dt != counts.dt:
        raise ValueError(f"bin widths differ: path {path.dt}, counts {counts.dt}")


def log_posterior(
    path: LatentPath,
    params: OuParams,
    counts: BinnedCounts,
    priors: PriorConfig | None = None,
) -> float:
    """Joint log-density of (path, params) given counts, up to y_i! terms.

    Poisson terms sum y_i*x_i - dt*exp(x_i); the latent prior is the
    stationary density at x_0 plus exact transition densities; parameter
    priors act on (log omega, mu, log sigma).
    """
    _check_aligned(path, counts)
    if priors is None:
        priors = PriorConfig.from_counts(counts)
    lp = kernels.path_logpost(
        path.x, counts.counts_array, path.dt, params.omega, params.mu, params.sigma
    )
    return lp + _prior_logpdf(_theta(params), priors)


def grad_log_posterior(
    path: LatentPath, params: OuParams, counts: BinnedCounts
) -> np.ndarray:
    """Gradient of log_posterior with respect to each path value.

    Parameter priors do not involve x, so the gradient is the data term
    y_i - dt*exp(x_i) plus the tridiagonal Gaussian terms.
    """
    _check_aligned(path, counts)
    return kernels.path_grad(
        path.x, counts.counts_array, path.dt, params.omega, params.mu, params.sigma
    )


def _mala_core(x, lp, grad, y, dt, params, step, rng):
    """One Langevin proposal and accept/reject on raw arrays.

    Takes and returns the cached (x, log-post, gradient) triple so chain
    sweeps pay one posterior and one gradient evaluation per step.
    """
    if not np.all(np.isfinite(grad)):
        raise AdaptationError("nonfinite gradient in Langevin proposal")
    half = 0.5 * step * step
    noise = rng.standard_normal(x.size)
    prop = x + half * grad + step * noise
    lp_prop = kernels.path_logpost(prop, y, dt, params.omega, params.mu, params.sigma)
    grad_prop = kernels.path_grad(prop, y, dt, params.omega, params.mu, params.sigma)
    if np.all(np.isfinite(grad_prop)) and math.isfinite(lp_prop):
        # asymmetric proposal correction: q(x|x') vs q(x'|x)
        fwd = prop - x - half * grad
        rev = x - prop - half * grad_prop
        log_q = (fwd @ fwd - rev @ rev) / (2.0 * step * step)
        if math.log(rng.random()) < lp_prop - lp + log_q:
            return prop, lp_prop, grad_prop, True
    return x, lp, grad, False


def mala_step(
    path: LatentPath,
    params: OuParams,
    counts: BinnedCounts,
    step_size: float,
    rng: np.random.Generator,
) -> tuple[LatentPath, bool]:
    """Single Metropolis-adjusted Langevin update of the whole path."""
    _check_aligned(path, counts)
    if not (step_size > 0):
        raise ValueError(f"step_size must be > 0, got {step_size}")
    y = counts.counts_array
    lp = kernels.path_logpost(path.x, y, path.dt, params.omega, params.mu, params.sigma)
    grad = kernels.path_grad(path.x, y, path.dt, params.omega, params.mu, params.sigma)
    x_new, _, _, accepted = _mala_core(
        path.x, lp, grad, y, path.dt, params, step_size, rng
    )
    if accepted:
        return LatentPath(dt=path.dt, x=x_new), True
    return path, False


def _param_core(x, dt, params, priors, scales, rng):
    """Per-coordinate random walk on (log omega, mu, log sigma).

    The Poisson data term does not involve the parameters, so the target
    is the latent-path Gaussian part plus the priors.
    """
    theta = _theta(params)

    def target(th):
        # x doubles as a placeholder for y; counts are skipped entirely
        lat = kernels.path_logpost(
            x, x, dt, math.exp(th[0]), th[1], math.exp(th[2]), include_data=False
        )
        return lat + _prior_logpdf(th, priors)

    cur = target(theta)
    accepted = np.zeros(3, dtype=bool)
    moved = False
    for k in range(3):
        if scales[k] == 0.0:
            accepted[k] = True
            continue
        prop = theta.copy()
        prop[k] += scales[k] * rng.standard_normal()
        cand = target(prop)
        if math.log(rng.random()) < cand - cur:
            theta, cur, accepted[k] = prop, cand, True
            moved = True
    if not moved:
        # skip the exp/log round trip so unchanged params stay bit-identical
        return params, accepted
    new = OuParams(omega=math.exp(theta[0]), mu=theta[1], sigma=math.exp(theta[2]))
    return new, accepted


def update_params(
    path: LatentPath,
    params: OuParams,
    counts: BinnedCounts,
    proposal_scales,
    rng: np.random.Generator,
    priors: PriorConfig | None = None,
) -> tuple[OuParams, np.ndarray]:
    """Metropolis updates of omega, mu, sigma with the path held fixed."""
    _check_aligned(path, counts)
    scales = np.asarray(proposal_scales, dtype=float)
    if scales.shape != (3,) or np.any(scales < 0):
        raise ValueError("proposal_scales must be 3 nonnegative values")
    if priors is None:
        priors = PriorConfig.from_counts(counts)
    return _param_core(path.x, path.dt, params, priors, scales, rng)


def sample_posterior(
    counts: BinnedCounts,
    config: McmcConfig | None = None,
    priors: PriorConfig | None = None,
) -> PosteriorDraws:
    """Run the alternating path/parameter chain and return thinned draws.

    The Langevin step size adapts multiplicatively toward 0.574 path
    acceptance during burn-in only, then freezes so the recorded draws
    target the exact posterior.  Raises AdaptationError if post-burn-in
    path acceptance pins at 0 or 1 (50 sweeps minimum to judge).
    """
    y = counts.counts_array
    if y.size == 0:
        raise ValueError("counts must be nonempty")
    if config is None:
        config = McmcConfig()
    if priors is None:
        priors = PriorConfig.from_counts(counts)
    dt = counts.dt
    rng = substream(config.seed)

    x = np.log((y + 0.5) / dt)
    params = OuParams(
        omega=math.exp(priors.log_omega_mean),
        mu=priors.mu_mean,
        sigma=math.exp(priors.log_sigma_mean),
    )
    lp = kernels.path_logpost(x, y, dt, params.omega, params.mu, params.sigma)
    grad = kernels.path_grad(x, y, dt, params.omega, params.mu, params.sigma)

    step = config.step_size_init
    scales = np.asarray(config.proposal_scales, dtype=float)
    post_sweeps = config.n_samples * config.thin
    total = config.burn_in + post_sweeps

    paths: list[LatentPath] = []
    draws: list[OuParams] = []
    n_acc = 0
    n_acc_params = np.zeros(3)

    for t in range(total):
        x, lp, grad, accepted = _mala_core(x, lp, grad, y, dt, params, step, rng)
        new_params, acc3 = _param_core(x, dt, params, priors, scales, rng)
        if new_params != params:
            params = new_params
            lp = kernels.path_logpost(x, y, dt, params.omega, params.mu, params.sigma)
            grad = kernels.path_grad(x, y, dt, params.omega, params.mu, params.sigma)

        if t < config.burn_in:
            # Robbins-Monro on the log scale; decaying gain keeps the
            # adaptation diminishing so the frozen step is stable
            gain = (t + 1.0) ** -0.6
            step = min(max(step * math.exp(gain * (accepted - MALA_TARGET)), 1e-8), 1e3)
            if config.adapt_scales:
                live = scales > 0
                scales[live] *= np.exp(gain * (acc3[live] - RW_TARGET))
                scales = np.minimum(np.maximum(scales, 1e-6), 1e3)
        else:
            n_acc += accepted
            n_acc_params += acc3
            if (t - config.burn_in + 1) % config.thin == 0:
                if not np.all(np.isfinite(x)):
                    raise AdaptationError("chain produced a nonfinite path value")
                paths.append(LatentPath(dt=dt, x=x.copy()))
                draws.append(params)

    path_rate = n_acc / post_sweeps
    if post_sweeps >= 50 and (n_acc == 0 or n_acc == post_sweeps):
        raise AdaptationError(
            f"path acceptance pinned at {path_rate:.0%} after burn-in; "
            f"adjust step_size_init (frozen step was {step:.3g})"
        )
    param_rate = tuple(float(r) for r in n_acc_params / post_sweeps)
    return PosteriorDraws(
        paths=tuple(paths),
        params=tuple(draws),
        path_acceptance=float(path_rate),
        param_acceptance=param_rate,
        step_size=float(step),
        seed=config.seed,
    )


def forecast_counts(
    draws: PosteriorDraws,
    horizon: float,
    sims_per_draw: int = 10,
    seed: int = 0,
) -> ForecastDistribution:
    """Simulate total event counts over the horizon from posterior draws.

    Each simulation continues the latent process from the draw's terminal
    value by exact transitions over bins of the fitting width (last bin
    truncated to fit the horizon) and draws Poisson counts per bin.  The
    RNG stream for (draw i, sim j) derives from (seed, i, j), so results
    do not depend on processing order.
    """
    if len(draws) == 0:
        raise ValueError("posterior draws are empty")
    if not (horizon > 0):
        raise ValueError(f"horizon must be > 0, got {horizon}")
    if sims_per_draw < 1:
        raise ValueError(f"sims_per_draw must be >= 1, got {sims_per_draw}")
    dt = draws.dt
    n_bins = max(1, math.ceil(horizon / dt - 1e-12))
    widths = np.full(n_bins, dt)
    widths[-1] = horizon - (n_bins - 1) * dt

    totals = np.empty(len(draws) * sims_per_draw, dtype=np.int64)
    for i, (path, params) in enumerate(zip(draws.paths, draws.params)):
        x_end = float(path.x[-1])
        v0 = params.stationary_variance
        decays = np.exp(-params.omega * widths)
        sds = np.sqrt(v0 * (1.0 - decays * decays))
        for j in range(sims_per_draw):
            totals[i * sims_per_draw + j] = _forecast_total(
                params.mu, x_end, widths, decays, sds, substream(seed, i, j)
            )
    return ForecastDistribution(horizon=float(horizon), dt=dt, counts=totals)


def _forecast_total(mu, x_end, widths, decays, sds, rng) -> int:
    """Total count of one forward simulation; one RNG stream per call."""
    n_bins = widths.size
    noise = rng.standard_normal(n_bins)
    x = x_end
    lam = np.empty(n_bins)
    for b in range(n_bins):
        x = mu + (x - mu) * decays[b] + sds[b] * noise[b]
        lam[b] = math.exp(x)
    return int(rng.poisson(widths * lam).sum())

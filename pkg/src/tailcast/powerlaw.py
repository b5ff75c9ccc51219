"""Power-law and piecewise power-law severity tails.

Severity models live on [x_min, inf).  The single power law has density
(alpha-1)/x_min * (x/x_min)^(-alpha).  The piecewise model uses exponent
alpha1 on [x_min, x_break) and alpha2 on [x_break, inf), continuous at
the break and normalized to total mass one.

Fitting follows the KS recipe: for each candidate threshold, estimate the
exponent by maximum likelihood and keep the threshold minimizing the
L-infinity distance between the model CDF and the empirical CDF of the
tail sample.  The KS comparison is two-sided (empirical step function and
its left limit), which is the correct supremum for a step-vs-continuous
comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize, stats

from . import kernels
from .errors import DegenerateSampleError
from .rng import substream

__all__ = [
    "PowerLawModel",
    "PiecewiseModel",
    "TailFit",
    "BootstrapResult",
    "tail_cdf",
    "tail_survival",
    "empirical_tail_cdf",
    "mle_alpha",
    "ks_distance",
    "select_xmin",
    "fit_piecewise",
    "log_likelihood",
    "likelihood_ratio_test",
    "sample_max_quantile",
    "exceedance_probability",
    "bootstrap_fit",
    "extreme_tail_ks",
    "cv_select_xmin",
]


@dataclass(frozen=True)
class PowerLawModel:
    """Single power-law tail: exponent alpha > 1 on [x_min, inf)."""

    alpha: float
    x_min: float

    def __post_init__(self):
        if not self.alpha > 1:
            raise ValueError(f"alpha must be > 1 for a normalizable tail, got {self.alpha}")
        if not self.x_min > 0:
            raise ValueError(f"x_min must be > 0, got {self.x_min}")


@dataclass(frozen=True)
class PiecewiseModel:
    """Two-segment power law, continuous at x_break.

    Density is c*(x/x_min)^(-alpha1) below the break and
    c*(x_break/x_min)^(-alpha1)*(x/x_break)^(-alpha2) above it, with c
    fixed by unit total mass.  Only the extreme segment needs alpha > 1.
    """

    alpha1: float
    alpha2: float
    x_min: float
    x_break: float

    def __post_init__(self):
        if not self.alpha1 > 0:
            raise ValueError(f"alpha1 must be > 0, got {self.alpha1}")
        if not self.alpha2 > 1:
            raise ValueError(f"alpha2 must be > 1 (extreme segment), got {self.alpha2}")
        if not self.x_min > 0:
            raise ValueError(f"x_min must be > 0, got {self.x_min}")
        if not self.x_break > self.x_min:
            raise ValueError(
                f"x_break must exceed x_min, got {self.x_break} <= {self.x_min}"
            )


@dataclass(frozen=True)
class TailFit:
    """A fitted tail model with its goodness-of-fit summary."""

    model: PowerLawModel | PiecewiseModel
    ks_error: float
    n_tail: int
    log_lik: float
    n_upper: int | None = None  # events at/above x_break (piecewise fits)

    def __post_init__(self):
        if not 0.0 <= self.ks_error <= 1.0:
            raise ValueError(f"ks_error must lie in [0,1], got {self.ks_error}")
        if self.n_tail < 1:
            raise ValueError(f"n_tail must be >= 1, got {self.n_tail}")


@dataclass(frozen=True)
class BootstrapResult:
    """Joint (x_min, alpha) draws from nonparametric resampling."""

    draws: np.ndarray  # shape (n_ok, 2): columns x_min, alpha
    n_resamples: int
    n_failures: int
    seed: int

    @property
    def xmins(self) -> np.ndarray:
        return self.draws[:, 0]

    @property
    def alphas(self) -> np.ndarray:
        return self.draws[:, 1]


def _piecewise_norm(model: PiecewiseModel) -> tuple[float, float, float]:
    """Normalization of the piecewise density.

    Returns (c, mass1, mass2): the density constant and the masses of the
    [x_min, x_break) and [x_break, inf) segments (mass1 + mass2 == 1).
    """
    a1, a2 = model.alpha1, model.alpha2
    log_r = math.log(model.x_break / model.x_min)
    if abs(a1 - 1.0) < 1e-12:
        seg1 = model.x_min * log_r
    else:
        seg1 = model.x_min * -math.expm1((1.0 - a1) * log_r) / (a1 - 1.0)
    seg2 = math.exp(-a1 * log_r) * model.x_break / (a2 - 1.0)
    c = 1.0 / (seg1 + seg2)
    return c, c * seg1, c * seg2


def tail_survival(model: PowerLawModel | PiecewiseModel, x):
    """P(X > x) for x >= x_min.  Accepts scalars or arrays."""
    scalar = np.ndim(x) == 0
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x_arr < model.x_min):
        raise ValueError(f"x must be >= x_min = {model.x_min}")
    if isinstance(model, PowerLawModel):
        out = np.exp((1.0 - model.alpha) * np.log(x_arr / model.x_min))
    else:
        c, _, mass2 = _piecewise_norm(model)
        a1, a2 = model.alpha1, model.alpha2
        out = np.empty_like(x_arr)
        below = x_arr < model.x_break
        xb = x_arr[below]
        if abs(a1 - 1.0) < 1e-12:
            inner = c * model.x_min * np.log(model.x_break / xb)
        else:
            ratio_pow = np.exp((1.0 - a1) * np.log(xb / model.x_min))
            r_pow = math.exp((1.0 - a1) * math.log(model.x_break / model.x_min))
            inner = c * model.x_min * (ratio_pow - r_pow) / (a1 - 1.0)
        out[below] = mass2 + inner
        xa = x_arr[~below]
        out[~below] = mass2 * np.exp((1.0 - a2) * np.log(xa / model.x_break))
    return float(out[0]) if scalar else out


def tail_cdf(model: PowerLawModel | PiecewiseModel, x):
    """P(X <= x) on [x_min, inf); zero at x_min, one at infinity."""
    s = tail_survival(model, x)
    return 1.0 - s


def empirical_tail_cdf(severities, x_min: float, x):
    """Fraction of the tail sample <= x (right-continuous step function)."""
    sample = np.asarray(severities, dtype=float)
    if sample.size == 0:
        raise ValueError("empty tail sample")
    if np.any(sample < x_min):
        raise ValueError(f"all sample values must be >= x_min = {x_min}")
    sorted_x = np.sort(sample)
    frac = np.searchsorted(sorted_x, np.asarray(x, dtype=float), side="right") / sample.size
    return float(frac) if np.ndim(x) == 0 else frac


def mle_alpha(severities, x_min: float) -> float:
    """Continuous-tail maximum likelihood exponent: 1 + n / sum(ln(x_i/x_min))."""
    sample = np.asarray(severities, dtype=float)
    if sample.size < 2:
        raise ValueError(f"need at least 2 tail values, got {sample.size}")
    if np.any(sample < x_min):
        raise ValueError(f"all sample values must be >= x_min = {x_min}")
    log_sum = float(np.sum(np.log(sample / x_min)))
    if log_sum <= 0.0:
        raise DegenerateSampleError(
            "every tail value equals x_min; scaling exponent is unidentified"
        )
    return 1.0 + sample.size / log_sum


def ks_distance(model, severities, x_min: float) -> float:
    """Two-sided L-infinity distance between the model CDF and the
    empirical CDF of the tail sample, evaluated at sample points."""
    if model.x_min != x_min:
        raise ValueError(f"model.x_min = {model.x_min} differs from x_min = {x_min}")
    sample = np.asarray(severities, dtype=float)
    if sample.size == 0:
        raise ValueError("empty tail sample")
    if np.any(sample < x_min):
        raise ValueError(f"all sample values must be >= x_min = {x_min}")
    sorted_x = np.sort(sample)
    f = tail_cdf(model, sorted_x)
    g_hi = np.searchsorted(sorted_x, sorted_x, side="right") / sample.size
    g_lo = np.searchsorted(sorted_x, sorted_x, side="left") / sample.size
    return float(np.maximum(np.abs(f - g_hi), np.abs(f - g_lo)).max())


def _candidate_grid(sorted_pos: np.ndarray, candidates) -> np.ndarray:
    if candidates is None:
        distinct = np.unique(sorted_pos)
        return distinct[:-1]
    cands = np.unique(np.asarray(candidates, dtype=float))
    return cands[cands > 0]


def select_xmin(severities, candidates=None) -> TailFit:
    """Jointly choose (x_min, alpha) by scanning candidate thresholds.

    Default candidates are the distinct observed positive severities
    except the largest.  Each candidate's exponent comes from the MLE on
    the tail at/above it; the returned fit minimizes the KS distance,
    with ties broken toward the smallest threshold.
    """
    sample = np.asarray(severities, dtype=float)
    if np.unique(sample).size < 2:
        raise ValueError("need at least 2 distinct severities to select a threshold")
    sorted_pos = np.sort(sample[sample > 0])
    cands = _candidate_grid(sorted_pos, candidates)
    if cands.size == 0:
        raise ValueError("no usable threshold candidates (need >= 2 distinct positive values)")

    starts = np.searchsorted(sorted_pos, cands, side="left")
    alphas, ks = kernels.ks_scan(sorted_pos, starts.astype(np.int64), cands)
    if not np.isfinite(ks).any():
        raise DegenerateSampleError("no candidate admits a power-law fit")
    best = int(np.argmin(ks))  # candidates ascend, so argmin ties pick smallest x_min
    model = PowerLawModel(alpha=float(alphas[best]), x_min=float(cands[best]))
    tail = sorted_pos[starts[best]:]
    return TailFit(
        model=model,
        ks_error=float(ks[best]),
        n_tail=int(tail.size),
        log_lik=log_likelihood(model, tail),
    )


def log_likelihood(model, severities) -> float:
    """Sum of log densities of the tail sample under the model."""
    sample = np.asarray(severities, dtype=float)
    if np.any(sample < model.x_min):
        raise ValueError(f"sample value below model support [{model.x_min}, inf)")
    if isinstance(model, PowerLawModel):
        a = model.alpha
        return float(
            sample.size * (math.log(a - 1.0) - math.log(model.x_min))
            - a * np.sum(np.log(sample / model.x_min))
        )
    c, _, _ = _piecewise_norm(model)
    a1, a2 = model.alpha1, model.alpha2
    log_r = math.log(model.x_break / model.x_min)
    below = sample < model.x_break
    ll = sample.size * math.log(c)
    ll -= a1 * float(np.sum(np.log(sample[below] / model.x_min)))
    n_above = int(np.sum(~below))
    ll -= n_above * a1 * log_r
    ll -= a2 * float(np.sum(np.log(sample[~below] / model.x_break)))
    return float(ll)


def _piecewise_neg_ll_and_grad(params, x_min, x_break, n, n2, t1, t2):
    """Negative piecewise log-likelihood and its gradient in (alpha1, alpha2).

    t1 = sum_below ln(x/x_min) + n2*ln(r), t2 = sum_above ln(x/x_break).
    """
    a1, a2 = params
    log_r = math.log(x_break / x_min)
    eps = a1 - 1.0
    if abs(eps) < 1e-8:
        # series around alpha1 = 1 where (1 - r^(1-a1))/(a1-1) is 0/0
        seg1 = x_min * log_r * (1.0 - eps * log_r / 2.0 + eps * eps * log_r * log_r / 6.0)
        dseg1 = x_min * log_r * log_r * (-0.5 + eps * log_r / 3.0)
    else:
        rp = math.exp(-eps * log_r)  # r^(1-a1)
        seg1 = x_min * (1.0 - rp) / eps
        dseg1 = x_min * (log_r * rp * eps - (1.0 - rp)) / (eps * eps)
    seg2 = math.exp(-a1 * log_r) * x_break / (a2 - 1.0)
    total = seg1 + seg2
    ll = -n * math.log(total) - a1 * t1 - a2 * t2
    d_a1 = -n * (dseg1 - log_r * seg2) / total - t1
    d_a2 = -n * (-seg2 / (a2 - 1.0)) / total - t2
    return -ll, np.array([-d_a1, -d_a2])


def fit_piecewise(severities, x_min: float, x_break: float) -> TailFit:
    """Maximum-likelihood piecewise power law with the break fixed.

    Maximizes over (alpha1, alpha2) under the continuity constraint,
    multi-started so the result is never worse than the nested single
    power law.  Requires at least one point on each side of the break.
    """
    if not x_min < x_break:
        raise ValueError(f"x_min must be < x_break, got {x_min} >= {x_break}")
    sample = np.asarray(severities, dtype=float)
    if np.any(sample < x_min):
        raise ValueError(f"all sample values must be >= x_min = {x_min}")
    below = sample < x_break
    n1, n2 = int(np.sum(below)), int(np.sum(~below))
    if n1 == 0 or n2 == 0:
        raise ValueError(
            f"empty segment: {n1} events below and {n2} at/above x_break = {x_break}"
        )

    n = sample.size
    log_r = math.log(x_break / x_min)
    s1 = float(np.sum(np.log(sample[below] / x_min)))
    s2 = float(np.sum(np.log(sample[~below] / x_break)))
    t1 = s1 + n2 * log_r

    bounds = [(1e-6, 64.0), (1.0 + 1e-9, 64.0)]
    alpha_single = mle_alpha(sample, x_min)
    starts = [(alpha_single, alpha_single), (1.5, 2.5), (2.5, 3.5)]
    if s2 > 0:
        a2_seg = min(1.0 + n2 / s2, 64.0)
        a1_seg = min(1.0 + n1 / s1, 64.0) if s1 > 0 else alpha_single
        starts.append((a1_seg, a2_seg))

    best_params, best_nll = None, np.inf
    for start in starts:
        x0 = np.clip(start, [b[0] for b in bounds], [b[1] for b in bounds])
        nll0, _ = _piecewise_neg_ll_and_grad(x0, x_min, x_break, n, n2, t1, s2)
        if nll0 < best_nll:
            best_params, best_nll = tuple(x0), nll0
        res = optimize.minimize(
            _piecewise_neg_ll_and_grad,
            x0,
            args=(x_min, x_break, n, n2, t1, s2),
            jac=True,
            method="L-BFGS-B",
            bounds=bounds,
            options={"gtol": 1e-10, "ftol": 1e-14, "maxiter": 500},
        )
        if res.fun < best_nll:
            best_params, best_nll = tuple(res.x), res.fun

    model = PiecewiseModel(
        alpha1=float(best_params[0]),
        alpha2=float(best_params[1]),
        x_min=x_min,
        x_break=x_break,
    )
    return TailFit(
        model=model,
        ks_error=ks_distance(model, sample, x_min),
        n_tail=n,
        log_lik=log_likelihood(model, sample),
        n_upper=n2,
    )


def likelihood_ratio_test(single: TailFit, piecewise: TailFit, df: int = 1):
    """LRT of the nested single power law against the piecewise model.

    Returns (statistic, p_value) with the statistic 2*(logL_pw - logL_single)
    and the p-value from the chi-squared upper tail on df degrees of
    freedom (df=1 for a break fixed a priori, df=2 for an optimized break).
    """
    if single.n_tail != piecewise.n_tail:
        raise ValueError(
            f"mismatched fits: tail sizes {single.n_tail} vs {piecewise.n_tail}"
        )
    if single.model.x_min != piecewise.model.x_min:
        raise ValueError(
            f"mismatched fits: x_min {single.model.x_min} vs {piecewise.model.x_min}"
        )
    tol = 1e-7 * max(1.0, abs(single.log_lik))
    if piecewise.log_lik < single.log_lik - tol:
        raise ValueError(
            "mismatched fits: piecewise log-likelihood below the nested single model"
        )
    statistic = max(0.0, 2.0 * (piecewise.log_lik - single.log_lik))
    p_value = float(stats.chi2.sf(statistic, df))
    return statistic, p_value


def sample_max_quantile(model: PowerLawModel, n: int, q: float) -> float:
    """q-quantile of the maximum of n i.i.d. tail draws: F^{-1}(q^{1/n})."""
    if not isinstance(model, PowerLawModel):
        raise TypeError("sample_max_quantile is defined for the single power law")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < q < 1.0:
        raise ValueError(f"q must lie in (0,1), got {q}")
    # 1 - q^{1/n} via expm1 for precision at large n
    tail_prob = -math.expm1(math.log(q) / n)
    return model.x_min * tail_prob ** (1.0 / (1.0 - model.alpha))


def exceedance_probability(model, n: int, x_target: float) -> float:
    """Probability that at least one of n i.i.d. tail draws reaches x_target."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if x_target < model.x_min:
        raise ValueError(f"x_target must be >= x_min = {model.x_min}")
    if n == 0:
        return 0.0
    s = tail_survival(model, x_target)
    if s >= 1.0:
        return 1.0
    return -math.expm1(n * math.log1p(-s))


def bootstrap_fit(severities, n_resamples: int, seed: int) -> BootstrapResult:
    """Nonparametric bootstrap of the joint (x_min, alpha) selection.

    Each resample draws the full sample size with replacement and re-runs
    select_xmin.  Degenerate resamples are counted as failures, never
    fatal.  Resample k uses the RNG stream (seed, k), so the draws are
    identical under any evaluation order or parallelism.
    """
    if n_resamples < 1:
        raise ValueError(f"n_resamples must be >= 1, got {n_resamples}")
    sample = np.asarray(severities, dtype=float)
    rows = []
    n_failures = 0
    for k in range(n_resamples):
        fit = _bootstrap_one(sample, seed, k)
        if fit is None:
            n_failures += 1
        else:
            rows.append((fit.model.x_min, fit.model.alpha))
    draws = np.array(rows, dtype=float).reshape(len(rows), 2)
    return BootstrapResult(
        draws=draws, n_resamples=n_resamples, n_failures=n_failures, seed=seed
    )


def _bootstrap_one(sample: np.ndarray, seed: int, k: int) -> TailFit | None:
    """Fit of resample k; None when the resample is degenerate."""
    rng = substream(seed, k)
    resample = sample[rng.integers(0, sample.size, sample.size)]
    try:
        return select_xmin(resample)
    except (ValueError, DegenerateSampleError):
        return None


def extreme_tail_ks(model, severities, x_tail_start: float) -> float:
    """KS distance between the conditional distributions on [x_tail_start, inf).

    Both the model CDF and the empirical CDF are re-normalized to the
    extreme interval before taking the supremum, so mid-tail mass cannot
    mask an extreme-tail mismatch.
    """
    if x_tail_start < model.x_min:
        raise ValueError(
            f"x_tail_start must be >= model.x_min = {model.x_min}, got {x_tail_start}"
        )
    sample = np.asarray(severities, dtype=float)
    if np.any(sample < model.x_min):
        raise ValueError(f"all sample values must be >= x_min = {model.x_min}")
    sub = np.sort(sample[sample >= x_tail_start])
    if sub.size == 0:
        raise ValueError(f"no sample points at/above x_tail_start = {x_tail_start}")
    s_start = tail_survival(model, x_tail_start)
    f_cond = 1.0 - tail_survival(model, sub) / s_start
    g_hi = np.searchsorted(sub, sub, side="right") / sub.size
    g_lo = np.searchsorted(sub, sub, side="left") / sub.size
    return float(np.maximum(np.abs(f_cond - g_hi), np.abs(f_cond - g_lo)).max())


def cv_select_xmin(
    severities,
    candidates=None,
    k_folds: int = 5,
    x_tail_fraction: float = 0.05,
    seed: int = 0,
    return_scores: bool = False,
):
    """Cross-validated threshold selection scored on the extreme tail.

    For each candidate threshold, the exponent is fit on the training
    folds and scored by extreme_tail_ks on the held-out fold, with the
    extreme region starting at the held-out tail's (1 - x_tail_fraction)
    quantile.  The candidate minimizing the mean held-out score wins;
    ties go to the smallest threshold.  Candidates that cannot be fit or
    scored on every fold are skipped.

    Returns the refit TailFit, or (TailFit, scores) with a (candidate,
    mean score, standard error) row per scoreable candidate when
    return_scores is set.

    Scores are noisy, so exact ties never occur; the smallest-threshold
    tie rule is applied at score resolution via the one-standard-error
    rule: the winner is the smallest candidate whose mean score is
    within one standard error (over folds) of the minimizing
    candidate's mean.  Without this, thresholds deep in the tail win by
    luck on pure power-law data, where every candidate is valid.
    """
    if k_folds < 2:
        raise ValueError(f"k_folds must be >= 2, got {k_folds}")
    sample = np.asarray(severities, dtype=float)
    if sample.size < 2 * k_folds:
        raise ValueError(
            f"need at least 2*k_folds = {2 * k_folds} points, got {sample.size}"
        )
    sorted_pos = np.sort(sample[sample > 0])
    cands = _candidate_grid(sorted_pos, candidates)
    if cands.size == 0:
        raise ValueError("no usable threshold candidates")

    perm = substream(seed, 0).permutation(sample.size)
    fold_ids = np.array_split(perm, k_folds)
    folds = [np.sort(sample[ids][sample[ids] > 0]) for ids in fold_ids]
    if any(f.size == 0 for f in folds):
        raise ValueError("a fold has no positive severities; reduce k_folds")
    # the scored extreme region is a fixed property of each held-out fold,
    # never of the candidate, so all thresholds compete on the same points
    s_starts = [float(np.quantile(f, 1.0 - x_tail_fraction)) for f in folds]
    trains = []
    for f in range(k_folds):
        mask = np.ones(sample.size, dtype=bool)
        mask[fold_ids[f]] = False
        train = np.sort(sample[mask][sample[mask] > 0])
        # suffix log-sums let each candidate's MLE come from one lookup
        suffix = np.concatenate([np.cumsum(np.log(train[::-1]))[::-1], [0.0]])
        trains.append((train, suffix))

    table: list[tuple[float, float, float]] = []
    for c in cands:
        scores = []
        for f in range(k_folds):
            if c > s_starts[f]:
                # threshold sits inside the scored region; not comparable
                scores = None
                break
            train, suffix = trains[f]
            i = int(np.searchsorted(train, c, side="left"))
            n_tr = train.size - i
            if n_tr < 2:
                scores = None
                break
            log_sum = suffix[i] - n_tr * math.log(c)
            if log_sum <= 0.0:
                scores = None
                break
            alpha = 1.0 + n_tr / log_sum
            test = folds[f]
            test_tail = test[np.searchsorted(test, c, side="left"):]
            scores.append(
                extreme_tail_ks(PowerLawModel(alpha, float(c)), test_tail, s_starts[f])
            )
        if scores is None:
            continue
        se = float(np.std(scores, ddof=1)) / math.sqrt(k_folds)
        table.append((float(c), float(np.mean(scores)), se))

    if not table:
        raise ValueError("no candidate could be fit and scored on every fold")
    means = np.array([row[1] for row in table])
    best = int(np.argmin(means))
    cutoff = means[best] + table[best][2]
    best_c = table[int(np.argmax(means <= cutoff))][0]

    tail = sorted_pos[np.searchsorted(sorted_pos, best_c, side="left"):]
    model = PowerLawModel(alpha=mle_alpha(tail, best_c), x_min=best_c)
    fit = TailFit(
        model=model,
        ks_error=ks_distance(model, tail, best_c),
        n_tail=int(tail.size),
        log_lik=log_likelihood(model, tail),
    )
    if return_scores:
        return fit, np.asarray(table, dtype=float)
    return fit

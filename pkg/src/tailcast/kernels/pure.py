"""NumPy fallback implementations of the hot kernels.

Mirrors the compiled extension in ``_ctail.pyx``; selected automatically
at import when the extension is unavailable (see ``kernels.__init__``).
"""

from __future__ import annotations

import numpy as np

__all__ = ["ks_scan", "path_logpost", "path_grad"]

_LOG_2PI = float(np.log(2.0 * np.pi))


def ks_scan(sorted_x: np.ndarray, starts: np.ndarray, xmins: np.ndarray):
    """Joint MLE + KS scan over tail-threshold candidates.

    For candidate k, the tail is ``sorted_x[starts[k]:]`` with threshold
    ``xmins[k]`` (every tail value must be >= the threshold).  Returns
    (alpha, ks) arrays; candidates with fewer than 2 tail points or a
    degenerate tail (all values at the threshold) get alpha=nan, ks=inf.

    The KS distance is the two-sided step comparison: at each tail point
    both the empirical CDF and its left limit are compared against the
    fitted power-law CDF.
    """
    sorted_x = np.ascontiguousarray(sorted_x, dtype=float)
    starts = np.asarray(starts, dtype=np.int64)
    xmins = np.asarray(xmins, dtype=float)
    n = sorted_x.size

    log_x = np.log(sorted_x)
    suffix_logsum = np.concatenate([np.cumsum(log_x[::-1])[::-1], [0.0]])
    # ranks of each position's value within the full sorted sample:
    # lo = # strictly smaller, hi = # less-or-equal (handles ties)
    lo_rank = np.searchsorted(sorted_x, sorted_x, side="left")
    hi_rank = np.searchsorted(sorted_x, sorted_x, side="right")

    alphas = np.full(starts.size, np.nan)
    ks = np.full(starts.size, np.inf)
    for k in range(starts.size):
        s = int(starts[k])
        xmin = xmins[k]
        n_tail = n - s
        if n_tail < 2:
            continue
        log_sum = suffix_logsum[s] - n_tail * np.log(xmin)
        if log_sum <= 0.0:
            continue
        alpha = 1.0 + n_tail / log_sum
        f = 1.0 - np.exp((1.0 - alpha) * (log_x[s:] - np.log(xmin)))
        g_hi = (hi_rank[s:] - s) / n_tail
        g_lo = (lo_rank[s:] - s) / n_tail
        d = np.maximum(np.abs(f - g_hi), np.abs(f - g_lo)).max()
        alphas[k] = alpha
        ks[k] = d
    return alphas, ks


def path_logpost(
    x: np.ndarray,
    y: np.ndarray,
    dt: float,
    omega: float,
    mu: float,
    sigma: float,
    include_data: bool = True,
) -> float:
    """Path-dependent part of the log posterior: Poisson count terms
    (y_i x_i - dt e^{x_i}) plus the latent chain's Gaussian transition
    densities and the stationary density anchoring x_0.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size == 0:
        return 0.0
    v0 = sigma * sigma / (2.0 * omega)
    a = np.exp(-omega * dt)
    v = v0 * (1.0 - a * a)

    total = 0.0
    if include_data:
        # exp may overflow to inf for wild proposals; callers treat -inf
        # log-density as an automatic reject
        with np.errstate(over="ignore"):
            total += float(np.sum(y * x) - dt * np.sum(np.exp(x)))
    d0 = x[0] - mu
    total += -0.5 * (_LOG_2PI + np.log(v0)) - d0 * d0 / (2.0 * v0)
    if x.size > 1:
        r = x[1:] - mu - a * (x[:-1] - mu)
        total += float(
            -0.5 * (x.size - 1) * (_LOG_2PI + np.log(v)) - np.sum(r * r) / (2.0 * v)
        )
    return total


def path_grad(
    x: np.ndarray,
    y: np.ndarray,
    dt: float,
    omega: float,
    mu: float,
    sigma: float,
    include_data: bool = True,
) -> np.ndarray:
    """Gradient of ``path_logpost`` with respect to each x_i."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    v0 = sigma * sigma / (2.0 * omega)
    a = np.exp(-omega * dt)
    v = v0 * (1.0 - a * a)

    if include_data:
        with np.errstate(over="ignore"):
            g = y - dt * np.exp(x)
    else:
        g = np.zeros_like(x)
    if x.size == 0:
        return g
    g[0] -= (x[0] - mu) / v0
    if x.size > 1:
        r = x[1:] - mu - a * (x[:-1] - mu)
        g[1:] -= r / v
        g[:-1] += a * r / v
    return g

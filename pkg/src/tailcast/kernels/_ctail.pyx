# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: KS threshold scan and latent-path log posterior.

Same contracts as the numpy fallback in ``pure.py``.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, log

cnp.import_array()

cdef double _LOG_2PI = log(2.0 * 3.141592653589793)


def ks_scan(sorted_x, starts, xmins):
    """See ``tailcast.kernels.pure.ks_scan``."""
    cdef double[::1] xv = np.ascontiguousarray(sorted_x, dtype=np.float64)
    cdef long long[::1] sv = np.ascontiguousarray(starts, dtype=np.int64)
    cdef double[::1] mv = np.ascontiguousarray(xmins, dtype=np.float64)
    cdef Py_ssize_t n = xv.shape[0]
    cdef Py_ssize_t m = sv.shape[0]

    cdef cnp.ndarray[cnp.float64_t, ndim = 1] log_x = np.log(np.asarray(xv))
    cdef double[::1] lx = log_x
    cdef cnp.ndarray[cnp.float64_t, ndim = 1] suffix = np.empty(n + 1)
    cdef double[::1] sfx = suffix
    cdef Py_ssize_t i, j
    sfx[n] = 0.0
    for i in range(n - 1, -1, -1):
        sfx[i] = sfx[i + 1] + lx[i]

    # per-position tie ranks: first and one-past-last occurrence of the value
    cdef cnp.ndarray[cnp.int64_t, ndim = 1] lo_rank = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim = 1] hi_rank = np.empty(n, dtype=np.int64)
    cdef long long[::1] lo = lo_rank
    cdef long long[::1] hi = hi_rank
    cdef Py_ssize_t run_start = 0
    for i in range(n):
        if i > 0 and xv[i] != xv[i - 1]:
            run_start = i
        lo[i] = run_start
    run_start = n
    for i in range(n - 1, -1, -1):
        if i < n - 1 and xv[i] != xv[i + 1]:
            run_start = i + 1
        hi[i] = run_start

    cdef cnp.ndarray[cnp.float64_t, ndim = 1] alphas = np.full(m, np.nan)
    cdef cnp.ndarray[cnp.float64_t, ndim = 1] ks = np.full(m, np.inf)
    cdef double[::1] av = alphas
    cdef double[::1] kv = ks
    cdef Py_ssize_t s, n_tail
    cdef double xmin, log_xmin, log_sum, alpha, one_minus_alpha
    cdef double f, g_hi, g_lo, d, best
    for j in range(m):
        s = <Py_ssize_t> sv[j]
        xmin = mv[j]
        n_tail = n - s
        if n_tail < 2:
            continue
        log_xmin = log(xmin)
        log_sum = sfx[s] - n_tail * log_xmin
        if log_sum <= 0.0:
            continue
        alpha = 1.0 + n_tail / log_sum
        one_minus_alpha = 1.0 - alpha
        best = 0.0
        for i in range(s, n):
            f = 1.0 - exp(one_minus_alpha * (lx[i] - log_xmin))
            g_hi = (<double> (hi[i] - s)) / n_tail
            g_lo = (<double> (lo[i] - s)) / n_tail
            d = fabs(f - g_hi)
            if fabs(f - g_lo) > d:
                d = fabs(f - g_lo)
            if d > best:
                best = d
        av[j] = alpha
        kv[j] = best
    return alphas, ks


def path_logpost(x, y, double dt, double omega, double mu, double sigma,
                 bint include_data=True):
    """See ``tailcast.kernels.pure.path_logpost``."""
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[::1] yv = np.ascontiguousarray(y, dtype=np.float64)
    cdef Py_ssize_t n = xv.shape[0]
    if n == 0:
        return 0.0
    cdef double v0 = sigma * sigma / (2.0 * omega)
    cdef double a = exp(-omega * dt)
    cdef double v = v0 * (1.0 - a * a)

    cdef double total = 0.0
    cdef Py_ssize_t i
    if include_data:
        for i in range(n):
            total += yv[i] * xv[i] - dt * exp(xv[i])
    cdef double d0 = xv[0] - mu
    total += -0.5 * (_LOG_2PI + log(v0)) - d0 * d0 / (2.0 * v0)
    cdef double r
    if n > 1:
        total += -0.5 * (n - 1) * (_LOG_2PI + log(v))
        for i in range(1, n):
            r = xv[i] - mu - a * (xv[i - 1] - mu)
            total += -r * r / (2.0 * v)
    return total


def path_grad(x, y, double dt, double omega, double mu, double sigma,
              bint include_data=True):
    """See ``tailcast.kernels.pure.path_grad``."""
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[::1] yv = np.ascontiguousarray(y, dtype=np.float64)
    cdef Py_ssize_t n = xv.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim = 1] grad = np.zeros(n)
    cdef double[::1] gv = grad
    if n == 0:
        return grad
    cdef double v0 = sigma * sigma / (2.0 * omega)
    cdef double a = exp(-omega * dt)
    cdef double v = v0 * (1.0 - a * a)

    cdef Py_ssize_t i
    if include_data:
        for i in range(n):
            gv[i] = yv[i] - dt * exp(xv[i])
    gv[0] -= (xv[0] - mu) / v0
    cdef double r
    for i in range(1, n):
        r = xv[i] - mu - a * (xv[i - 1] - mu)
        gv[i] -= r / v
        gv[i - 1] += a * r / v
    return grad

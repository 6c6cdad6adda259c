"""Batch numeric kernels.

Each kernel exists twice: a numba ``@njit`` version and a pure-numpy
version with identical update order.  The numba path is used when numba
imports cleanly and ``ACMCUBIC_DISABLE_NUMBA`` is unset (or ``0``).
"""
import os

import numpy as np

_flag = os.environ.get("ACMCUBIC_DISABLE_NUMBA", "").strip().lower()
_disabled = _flag not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError("numba disabled by ACMCUBIC_DISABLE_NUMBA")
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return lambda f: f


# ---------------------------------------------------------------------------
# Durand-Kerner (Weierstrass) simultaneous iteration


def _dk_numpy(coeffs, seeds, max_iter, tol):
    """Gauss-Seidel Durand-Kerner sweep, vectorised over the batch axis.

    Parameters
    ----------
    coeffs : (N, n+1) complex array, monic, highest degree first
    seeds : (N, n) complex array of starting points
    max_iter : int
    tol : float
        Stop a row once every correction satisfies ``|d| <= tol*(1+|z|)``.

    Returns
    -------
    roots : (N, n) complex array
    iters : (N,) int array
    converged : (N,) bool array
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    z = np.array(seeds, dtype=np.complex128, copy=True)
    nb, n = z.shape
    iters = np.full(nb, max_iter, dtype=np.int64)
    converged = np.zeros(nb, dtype=bool)
    active = np.arange(nb)
    for it in range(max_iter):
        if active.size == 0:
            break
        za = z[active]
        ca = coeffs[active]
        big = np.zeros(active.size)
        for k in range(n):
            zk = za[:, k]
            num = ca[:, 0].copy()
            for j in range(1, n + 1):
                num = num * zk + ca[:, j]
            den = np.ones(active.size, dtype=np.complex128)
            for j in range(n):
                if j != k:
                    den = den * (zk - za[:, j])
            den = np.where(den == 0, 1e-300 + 0j, den)
            d = num / den
            za[:, k] = zk - d
            big = np.maximum(big, np.abs(d) / (1.0 + np.abs(za[:, k])))
        z[active] = za
        done = big <= tol
        iters[active[done]] = it + 1
        converged[active[done]] = True
        active = active[~done]
    return z, iters, converged


@njit(cache=True)
def _dk_numba(coeffs, seeds, max_iter, tol):
    nb, n = seeds.shape
    z = seeds.copy()
    iters = np.full(nb, max_iter, dtype=np.int64)
    converged = np.zeros(nb, dtype=np.bool_)
    for b in range(nb):
        for it in range(max_iter):
            big = 0.0
            for k in range(n):
                zk = z[b, k]
                num = coeffs[b, 0]
                for j in range(1, n + 1):
                    num = num * zk + coeffs[b, j]
                den = 1.0 + 0.0j
                for j in range(n):
                    if j != k:
                        den *= zk - z[b, j]
                if den == 0:
                    den = 1e-300 + 0.0j
                d = num / den
                z[b, k] = zk - d
                rel = abs(d) / (1.0 + abs(z[b, k]))
                if rel > big:
                    big = rel
            if big <= tol:
                iters[b] = it + 1
                converged[b] = True
                break
    return z, iters, converged


def durand_kerner(coeffs, seeds, max_iter=500, tol=1e-14):
    """Dispatch to the active Durand-Kerner kernel (see :func:`_dk_numpy`)."""
    coeffs = np.ascontiguousarray(coeffs, dtype=np.complex128)
    seeds = np.ascontiguousarray(seeds, dtype=np.complex128)
    if NUMBA_ENABLED:
        return _dk_numba(coeffs, seeds, int(max_iter), float(tol))
    return _dk_numpy(coeffs, seeds, int(max_iter), float(tol))


# ---------------------------------------------------------------------------
# characteristic polynomial of a stack of 3x3 matrices


def _charpoly3_numpy(m):
    m = np.asarray(m, dtype=np.complex128)
    a, b, c = m[:, 0, 0], m[:, 0, 1], m[:, 0, 2]
    d, e, f = m[:, 1, 0], m[:, 1, 1], m[:, 1, 2]
    g, h, i = m[:, 2, 0], m[:, 2, 1], m[:, 2, 2]
    out = np.empty((m.shape[0], 3), dtype=np.complex128)
    out[:, 0] = -(a + e + i)
    out[:, 1] = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
    out[:, 2] = -(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))
    return out


@njit(cache=True)
def _charpoly3_numba(m):
    nb = m.shape[0]
    out = np.empty((nb, 3), dtype=np.complex128)
    for k in range(nb):
        a, b, c = m[k, 0, 0], m[k, 0, 1], m[k, 0, 2]
        d, e, f = m[k, 1, 0], m[k, 1, 1], m[k, 1, 2]
        g, h, i = m[k, 2, 0], m[k, 2, 1], m[k, 2, 2]
        out[k, 0] = -(a + e + i)
        out[k, 1] = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
        out[k, 2] = -(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))
    return out


def charpoly3(m):
    """Coefficients ``(c1, c2, c3)`` of ``det(zI - m)`` for an (N, 3, 3) stack."""
    m = np.ascontiguousarray(m, dtype=np.complex128)
    if NUMBA_ENABLED:
        return _charpoly3_numba(m)
    return _charpoly3_numpy(m)

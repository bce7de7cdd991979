# cython: language_level=3
"""Compiled kernels; same API as ``eoent._kernels_py``."""
from libc.math cimport sqrt, cbrt, acos, cos, fabs, copysign, M_PI

import numpy as np

from eoent.errors import NumericalError

cdef double PIVOT_RTOL = 1e-13
cdef int NEWTON_MAX = 8
cdef double DISC_RTOL = 1e-12
cdef double MERGE_RTOL = 1e-9


cdef inline double max_d(double a, double b) nogil:
    return a if a > b else b


cdef inline double _cubic(double y, double b, double c, double d) nogil:
    return ((y + b) * y + c) * y + d


cdef double _polish(double y, double b, double c, double d) nogil:
    cdef double f = _cubic(y, b, c, d)
    cdef double fp, step, y_new, f_new
    cdef int it
    for it in range(NEWTON_MAX):
        fp = (3.0 * y + 2.0 * b) * y + c
        if fp == 0.0:
            break
        step = f / fp
        y_new = y - step
        f_new = _cubic(y_new, b, c, d)
        if fabs(f_new) > fabs(f):
            break
        y = y_new
        f = f_new
        if fabs(step) <= 1e-16 * fabs(y) or f == 0.0:
            break
    return y


cdef int _cubic_roots(double b, double c, double d, double* out) nogil:
    cdef double shift = b / 3.0
    cdef double p = c - b * shift
    cdef double q = (2.0 * b * b * b) / 27.0 - b * c / 3.0 + d
    cdef double disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0)
    cdef double ts[3]
    cdef double r, arg, phi, s, big, tmp, prev, scale
    cdef int n, i, j, m
    if p == 0.0 and q == 0.0:
        ts[0] = 0.0
        n = 1
    elif p < 0.0 and disc <= DISC_RTOL * max_d((q / 2.0) * (q / 2.0), (-p / 3.0) * (-p / 3.0) * (-p / 3.0)):
        r = sqrt(-p / 3.0)
        arg = -q / (2.0 * r * r * r)
        if arg > 1.0:
            arg = 1.0
        elif arg < -1.0:
            arg = -1.0
        phi = acos(arg)
        for i in range(3):
            ts[i] = 2.0 * r * cos((phi - 2.0 * M_PI * i) / 3.0)
        n = 3
    else:
        s = sqrt(disc) if disc > 0.0 else 0.0
        big = -copysign(1.0, q) * cbrt(fabs(q) / 2.0 + s)
        ts[0] = big - p / (3.0 * big) if big != 0.0 else 0.0
        n = 1
    for i in range(n):
        ts[i] = _polish(ts[i] - shift, b, c, d)
    # insertion sort, n <= 3
    for i in range(1, n):
        tmp = ts[i]
        j = i - 1
        while j >= 0 and ts[j] > tmp:
            ts[j + 1] = ts[j]
            j -= 1
        ts[j + 1] = tmp
    m = 0
    for i in range(n):
        if m > 0:
            prev = out[m - 1]
            scale = fabs(ts[i]) if fabs(ts[i]) > fabs(prev) else fabs(prev)
            if scale < 1e-300:
                scale = 1e-300
            if fabs(ts[i] - prev) <= MERGE_RTOL * scale:
                continue
        out[m] = ts[i]
        m += 1
    return m


def cubic_real_roots(double b, double c, double d):
    cdef double out[3]
    cdef int n = _cubic_roots(b, c, d, out)
    return [out[i] for i in range(n)]


def steady_photon_numbers(double g, double e_o, double e_m, double gamma_o,
                          double gamma_m, double delta_o, double delta_m):
    cdef double k, a, slope, x
    cdef double ys[3]
    cdef int n, i
    if e_o == 0.0:
        return [0.0]
    k = 2.0 * g / (gamma_m * gamma_m + delta_m * delta_m)
    a = delta_o - k * e_m * gamma_m
    slope = k * g * delta_m
    if slope == 0.0:
        return [e_o * e_o / (gamma_o * gamma_o + a * a)]
    n = _cubic_roots(-2.0 * a, gamma_o * gamma_o + a * a, -slope * e_o * e_o, ys)
    xs = []
    for i in range(n):
        x = ys[i] / slope
        if x >= 0.0:
            xs.append(x)
    xs.sort()
    return xs


def lyapunov_solve(A, D):
    cdef const double[:, ::1] a = np.ascontiguousarray(A, dtype=np.float64)
    cdef const double[:, ::1] dm = np.ascontiguousarray(D, dtype=np.float64)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t N = n * n
    M_arr = np.zeros((N, N), dtype=np.float64)
    rhs_arr = np.empty(N, dtype=np.float64)
    cdef double[:, ::1] M = M_arr
    cdef double[::1] rhs = rhs_arr
    cdef Py_ssize_t i, j, l, row, col, piv, r, k
    cdef double scale = 0.0, best, tmp, factor, acc
    for i in range(n):
        for j in range(n):
            row = i * n + j
            rhs[row] = -dm[i, j]
            for l in range(n):
                M[row, l * n + j] += a[i, l]
                M[row, i * n + l] += a[j, l]
    for r in range(N):
        for k in range(N):
            if fabs(M[r, k]) > scale:
                scale = fabs(M[r, k])
    # Gaussian elimination, partial pivoting
    for col in range(N):
        piv = col
        best = fabs(M[col, col])
        for r in range(col + 1, N):
            if fabs(M[r, col]) > best:
                best = fabs(M[r, col])
                piv = r
        if not (best > PIVOT_RTOL * scale):
            raise NumericalError("Lyapunov system is singular (marginal spectrum)", np.asarray(a))
        if piv != col:
            for k in range(col, N):
                tmp = M[col, k]
                M[col, k] = M[piv, k]
                M[piv, k] = tmp
            tmp = rhs[col]
            rhs[col] = rhs[piv]
            rhs[piv] = tmp
        for r in range(col + 1, N):
            factor = M[r, col] / M[col, col]
            if factor != 0.0:
                for k in range(col, N):
                    M[r, k] -= factor * M[col, k]
                rhs[r] -= factor * rhs[col]
    for r in range(N - 1, -1, -1):
        acc = rhs[r]
        for k in range(r + 1, N):
            acc -= M[r, k] * rhs[k]
        rhs[r] = acc / M[r, r]
    V = rhs_arr.reshape(n, n)
    return 0.5 * (V + V.T)


cdef inline double _det2(double a, double b, double c, double d) nogil:
    return a * d - b * c


def covariance_invariants(V):
    cdef const double[:, ::1] v = np.ascontiguousarray(V, dtype=np.float64)
    cdef double d11 = _det2(v[0, 0], v[0, 1], v[1, 0], v[1, 1])
    cdef double d22 = _det2(v[2, 2], v[2, 3], v[3, 2], v[3, 3])
    cdef double d12 = _det2(v[0, 2], v[0, 3], v[1, 2], v[1, 3])
    # Laplace expansion along the first two rows
    cdef double det = (
        _det2(v[0, 0], v[0, 1], v[1, 0], v[1, 1]) * _det2(v[2, 2], v[2, 3], v[3, 2], v[3, 3])
        - _det2(v[0, 0], v[0, 2], v[1, 0], v[1, 2]) * _det2(v[2, 1], v[2, 3], v[3, 1], v[3, 3])
        + _det2(v[0, 0], v[0, 3], v[1, 0], v[1, 3]) * _det2(v[2, 1], v[2, 2], v[3, 1], v[3, 2])
        + _det2(v[0, 1], v[0, 2], v[1, 1], v[1, 2]) * _det2(v[2, 0], v[2, 3], v[3, 0], v[3, 3])
        - _det2(v[0, 1], v[0, 3], v[1, 1], v[1, 3]) * _det2(v[2, 0], v[2, 2], v[3, 0], v[3, 2])
        + _det2(v[0, 2], v[0, 3], v[1, 2], v[1, 3]) * _det2(v[2, 0], v[2, 1], v[3, 0], v[3, 1])
    )
    return d11 + d22 - 2.0 * d12, det, d11, d22, d12

# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled pixel kernels.

Each map returns ``(out, bad)`` where ``bad`` is the index of the first pixel
whose result is not a positive finite double, or -1.  Expressions mirror
:mod:`lipgain.core` term for term so results agree bit for bit with the
scalar operations.
"""

import numpy as np

from libc.math cimport exp, log, pow, isfinite


cdef inline bint _bad(double r) noexcept nogil:
    return not (isfinite(r) and r > 0.0)


def add(const double[::1] a, const double[::1] b, double M):
    cdef Py_ssize_t k, n = a.shape[0], bad = -1
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for k in range(n):
            o[k] = a[k] * b[k] / M
            if bad < 0 and _bad(o[k]):
                bad = k
    return out, bad


def sub(const double[::1] a, const double[::1] b, double M):
    cdef Py_ssize_t k, n = a.shape[0], bad = -1
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for k in range(n):
            o[k] = a[k] * M / b[k]
            if bad < 0 and _bad(o[k]):
                bad = k
    return out, bad


def smul(const double[::1] a, double lam, double M):
    cdef Py_ssize_t k, n = a.shape[0], bad = -1
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for k in range(n):
            o[k] = M * pow(a[k] / M, lam)
            if bad < 0 and _bad(o[k]):
                bad = k
    return out, bad


def prod(const double[::1] a, const double[::1] b, double M):
    cdef Py_ssize_t k, n = a.shape[0], bad = -1
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for k in range(n):
            o[k] = M * exp(M * (log(a[k] / M) * log(b[k] / M)))
            if bad < 0 and _bad(o[k]):
                bad = k
    return out, bad


cdef inline void _neumaier(double *s, double *c, double x) noexcept nogil:
    cdef double t = s[0] + x
    if abs(s[0]) >= abs(x):
        c[0] += (s[0] - t) + x
    else:
        c[0] += (x - t) + s[0]
    s[0] = t


def moments(const double[::1] a):
    """Raw moments m1..m3 and central moments of order 2 and 3.

    Neumaier-compensated sums in pixel order; the central pass reuses m1.
    """
    cdef Py_ssize_t k, n = a.shape[0]
    cdef double s1 = 0, c1 = 0, s2 = 0, c2 = 0, s3 = 0, c3 = 0
    cdef double q2 = 0, e2 = 0, q3 = 0, e3 = 0
    cdef double x, x2, d, d2, m1
    with nogil:
        for k in range(n):
            x = a[k]
            x2 = x * x
            _neumaier(&s1, &c1, x)
            _neumaier(&s2, &c2, x2)
            _neumaier(&s3, &c3, x2 * x)
        m1 = (s1 + c1) / n
        for k in range(n):
            d = a[k] - m1
            d2 = d * d
            _neumaier(&q2, &e2, d2)
            _neumaier(&q3, &e3, d2 * d)
    return m1, (s2 + c2) / n, (s3 + c3) / n, (q2 + e2) / n, (q3 + e3) / n

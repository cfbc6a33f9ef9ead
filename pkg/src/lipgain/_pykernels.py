"""Pure-Python pixel kernels, used when the compiled extension is unavailable.

Same contract and the same floating-point operation sequence as
``_kernels.pyx``; the two backends produce identical bits.
"""

import math

import numpy as np


def _finish(values):
    out = np.array(values, dtype=np.float64)
    bad = -1
    for k, r in enumerate(values):
        if not (math.isfinite(r) and r > 0.0):
            bad = k
            break
    return out, bad


def _pow(x, y):
    try:
        return x**y
    except OverflowError:
        return math.inf


def _exp(x):
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def add(a, b, M):
    return _finish([x * y / M for x, y in zip(a.tolist(), b.tolist())])


def sub(a, b, M):
    return _finish([x * M / y for x, y in zip(a.tolist(), b.tolist())])


def smul(a, lam, M):
    return _finish([M * _pow(x / M, lam) for x in a.tolist()])


def prod(a, b, M):
    log = math.log
    return _finish([M * _exp(M * (log(x / M) * log(y / M))) for x, y in zip(a.tolist(), b.tolist())])


def _neumaier_sum(values):
    s = c = 0.0
    for x in values:
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
    return s + c


def moments(a):
    xs = a.tolist()
    n = len(xs)
    m1 = _neumaier_sum(xs) / n
    m2 = _neumaier_sum(x * x for x in xs) / n
    m3 = _neumaier_sum(x * x * x for x in xs) / n
    ds = [x - m1 for x in xs]
    c2 = _neumaier_sum(d * d for d in ds) / n
    c3 = _neumaier_sum(d * d * d for d in ds) / n
    return m1, m2, m3, c2, c3

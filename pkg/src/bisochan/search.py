"""Scalar search utilities: golden-section optimization and bisection."""

import numpy as np

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, lo, hi, xtol=1e-10):
    """Golden-section search for the maximum of a unimodal function on [lo, hi].

    Returns (argmax, max).  The best point ever evaluated is returned, so the
    result never undershoots the best bracket sample.
    """
    a, b = float(lo), float(hi)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    best_x, best_f = (c, fc) if fc >= fd else (d, fd)
    while b - a > xtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
        if fc > best_f:
            best_x, best_f = c, fc
        if fd > best_f:
            best_x, best_f = d, fd
    return best_x, best_f


def golden_section_min(f, lo, hi, xtol=1e-10):
    """Golden-section search for the minimum; returns (argmin, min)."""
    x, v = golden_section_max(lambda t: -f(t), lo, hi, xtol)
    return x, -v


def scan_then_golden_max(f, lo=0.0, hi=1.0, scan_points=1001, xtol=1e-10, f_grid=None):
    """Maximize f on [lo, hi]: uniform pre-scan, then golden-section refinement.

    The pre-scan guards against local maxima in non-concave objectives.
    `f_grid`, when given, is a vectorized version of f used for the scan pass.
    Returns (argmax, max).
    """
    xs = np.linspace(lo, hi, scan_points)
    vals = f_grid(xs) if f_grid is not None else np.array([f(x) for x in xs])
    k = int(np.argmax(vals))
    a = xs[max(k - 1, 0)]
    b = xs[min(k + 1, scan_points - 1)]
    gx, gf = golden_section_max(f, a, b, xtol)
    if vals[k] >= gf:
        return float(xs[k]), float(vals[k])
    return float(gx), float(gf)


def bisect_threshold(pred, lo, hi, xtol=1e-8):
    """Locate the boundary of a monotone predicate on [lo, hi].

    `pred` must be False on [lo, x*) and True on (x*, hi].  Returns an
    estimate of x* within xtol.  If pred(lo) is already True the boundary is
    at or below lo; if pred(hi) is False there is no boundary in range.
    """
    lo, hi = float(lo), float(hi)
    if pred(lo):
        return lo
    if not pred(hi):
        return hi
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)

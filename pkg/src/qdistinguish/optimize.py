"""Derivative-free scalar searches used by the measures."""

import math

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_min(f, lo: float, hi: float, tol: float):
    """Minimize a unimodal ``f`` on ``[lo, hi]``; return ``(x, f(x))``.

    Stops once the bracketing interval is no wider than ``tol``.
    """
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def bisect_increasing(f, target: float, lo: float, hi: float, tol: float) -> float:
    """Solve ``f(x) = target`` for nondecreasing ``f`` with ``f(lo) <= target <= f(hi)``."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)

"""Independent reference computations used by the tests.

Nothing here calls into the library's channel formulas.
"""
import math

from scipy import integrate


def q_quadrature(x):
    """Gaussian tail by numerical integration of the density."""
    val, _ = integrate.quad(lambda t: math.exp(-0.5 * t * t) / math.sqrt(2 * math.pi), x, math.inf,
                            epsabs=0, epsrel=1e-13, limit=200)
    return val


def bisect_decreasing(f, target, lo, hi, iters=200):
    """Solve f(x) = target for a decreasing f on [lo, hi]."""
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if f(mid) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def bisect_increasing(f, target, lo, hi, iters=200):
    return bisect_decreasing(lambda x: -f(x), -target, lo, hi, iters)


def sigmoid_los(theta_deg, a, b):
    return 1.0 / (1.0 + a * math.exp(-b * (theta_deg - a)))


def nearest_head_bruteforce(positions, heads, d2d_range):
    """Return {device_id: head_id or None} by exhaustive search."""
    out = {}
    for i, (x, y) in enumerate(positions):
        if i in heads:
            continue
        cands = sorted(
            (math.sqrt((x - positions[h][0]) ** 2 + (y - positions[h][1]) ** 2), h) for h in heads
        )
        cands = [(d, h) for d, h in cands if d <= d2d_range]
        out[i] = cands[0][1] if cands else None
    return out

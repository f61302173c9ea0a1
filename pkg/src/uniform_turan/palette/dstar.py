"""The constant d*: the root of (2 - x)^3 = 27x, located by bisection."""

from __future__ import annotations

from dataclasses import dataclass


def cubic(x: float) -> float:
    return (2.0 - x) ** 3 - 27.0 * x


@dataclass(frozen=True)
class DStar:
    value: float
    residual: float
    iterations: int


def d_star(lo: float = 0.2, hi: float = 0.25, tol: float = 1e-12) -> DStar:
    """Bisection on the bracket [lo, hi]; the cubic is decreasing there."""
    g_lo, g_hi = cubic(lo), cubic(hi)
    if not (g_lo > 0 > g_hi):
        raise ValueError(f"[{lo}, {hi}] does not bracket the root")
    it = 0
    mid = 0.5 * (lo + hi)
    while it < 200:
        mid = 0.5 * (lo + hi)
        g = cubic(mid)
        if abs(g) < tol or hi - lo < 1e-17:
            break
        if g > 0:
            lo = mid
        else:
            hi = mid
        it += 1
    return DStar(mid, abs(cubic(mid)), it)

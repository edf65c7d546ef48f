"""Panel quadrature with geometric endpoint refinement.

The Stieltjes-type integrals in this package have one awkward endpoint
(an integrable singularity at 0, or an infinite tail).  Both are handled
the same way: geometric panels marching toward the bad endpoint, fixed
Gauss-Legendre rule per panel, and a geometric-decay extrapolation of the
remaining tail once the panel contributions settle into a stable ratio.
Non-decaying panel sequences trigger the divergence errors.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DivergentIntegral, DivergentTail

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def _panel(fn, a: float, b: float) -> float:
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    x = mid + half * _GL_NODES
    return float(half * np.dot(_GL_WEIGHTS, np.asarray(fn(x), dtype=float)))


def integrate_to_zero(fn, upper: float, rel_tol: float = 1e-10,
                      max_panels: int = 400, ratio_window: int = 6) -> float:
    """integral of fn over (0, upper] with an integrable singularity at 0.

    Geometric panels [upper/2^(j+1), upper/2^j]; once the last few panel
    contributions decay at a stable geometric ratio, the remaining tail is
    extrapolated as a geometric series.  Raises DivergentIntegral when the
    panel sequence fails to decay.
    """
    if upper <= 0.0:
        return 0.0
    total = 0.0
    hi = upper
    panels = []
    for j in range(max_panels):
        lo = hi * 0.5
        p = _panel(fn, lo, hi)
        panels.append(p)
        total += p
        hi = lo
        if len(panels) >= ratio_window:
            recent = np.abs(panels[-ratio_window:])
            if recent[-1] <= rel_tol * max(abs(total), 1e-300):
                return total
            ratios = recent[1:] / np.maximum(recent[:-1], 1e-300)
            if np.all(ratios < 0.999) and ratios.std() < 0.05 * max(ratios.mean(), 1e-9):
                r = float(ratios.mean())
                if r < 0.995:
                    return total + panels[-1] * r / (1.0 - r)
    # no settling: decide between slow convergence and divergence
    recent = np.abs(panels[-ratio_window:])
    if np.all(recent[1:] <= recent[:-1] * 1.001) and recent[-1] <= 1e-6 * max(abs(total), 1e-300):
        return total
    raise DivergentIntegral(
        f"panel contributions near 0 do not decay (last={panels[-1]:.3e}, "
        f"total={total:.3e})")


def integrate_to_inf(fn, lower: float, rel_tol: float = 1e-10,
                     max_panels: int = 400, ratio_window: int = 6,
                     first_span: float = None) -> float:
    """integral of fn over [lower, inf) for an eventually-decaying integrand.

    Geometric panels [lower*2^j, lower*2^(j+1)] (shifted when lower <= 0),
    with the same geometric-tail extrapolation.  Raises DivergentTail when
    the panel sequence fails to decay.
    """
    span = first_span if first_span is not None else max(abs(lower), 1.0)
    total = 0.0
    panels = []
    for j in range(max_panels):
        lo = lower + span * (2.0 ** j - 1.0)
        hi = lower + span * (2.0 ** (j + 1) - 1.0)
        p = _panel(fn, lo, hi)
        panels.append(p)
        total += p
        if len(panels) >= ratio_window:
            recent = np.abs(panels[-ratio_window:])
            if recent[-1] <= rel_tol * max(abs(total), 1e-300):
                return total
            ratios = recent[1:] / np.maximum(recent[:-1], 1e-300)
            if np.all(ratios < 0.999) and ratios.std() < 0.05 * max(ratios.mean(), 1e-9):
                r = float(ratios.mean())
                if r < 0.995:
                    return total + panels[-1] * r / (1.0 - r)
    recent = np.abs(panels[-ratio_window:])
    if np.all(recent[1:] <= recent[:-1] * 1.001) and recent[-1] <= 1e-6 * max(abs(total), 1e-300):
        return total
    raise DivergentTail(
        f"tail panels do not decay (last={panels[-1]:.3e}, total={total:.3e})")


def integrate_finite(fn, a: float, b: float, n_panels: int = 64) -> float:
    """Fixed-panel Gauss-Legendre integral of a smooth fn over [a, b]."""
    if b <= a:
        return 0.0
    edges = np.linspace(a, b, n_panels + 1)
    return sum(_panel(fn, edges[i], edges[i + 1]) for i in range(n_panels))


def reference_quadrature(fn, a: float, b: float, n: int = 10**6,
                         log_spaced: bool = False) -> float:
    """Dense trapezoid reference (the independent high-resolution oracle)."""
    if log_spaced:
        if a <= 0:
            raise ValueError("log_spaced reference needs a > 0")
        x = np.logspace(math.log10(a), math.log10(b), n)
    else:
        x = np.linspace(a, b, n)
    y = np.asarray(fn(x), dtype=float)
    return float(np.trapz(y, x))

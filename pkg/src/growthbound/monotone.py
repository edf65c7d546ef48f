"""Calculus of strictly decreasing positive functions.

This module owns the representation of decreasing profiles (growth
majorants, fundamental-solution profiles, distribution functions and the
derived layer functions) together with the three operations everything
downstream leans on:

* evaluation (closed form, or piecewise-linear for tabulated data),
* the generalized inverse  f^-(s) = inf{t : f(t) <= s}  with the usual
  inf convention at jumps and plateaus,
* derivatives (closed form where available, central differences otherwise).

Infinite values are represented by ``math.inf`` (the explicit sentinel);
arithmetic with it follows IEEE extended-real conventions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .errors import ArgumentError, DomainError

INF = math.inf

# Default tolerances: closed forms are exact up to roundoff, tabulated data
# up to interpolation error.
TOL_CLOSED = 1e-9
TOL_TABULATED = 1e-6
FD_REL_STEP = 1e-5


@dataclass(frozen=True)
class Interval:
    """An interval (lo, hi), endpoints exclusive by default."""

    lo: float
    hi: float
    lo_open: bool = True
    hi_open: bool = True

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ArgumentError(f"interval requires lo < hi, got [{self.lo}, {self.hi}]")

    def contains(self, t: float) -> bool:
        if self.lo_open:
            if not t > self.lo:
                return False
        elif t < self.lo:
            return False
        if self.hi_open:
            if not t < self.hi:
                return False
        elif t > self.hi:
            return False
        return True

    def clamp_inside(self, t, margin_rel: float = 1e-12):
        """Clamp t into the interval, staying strictly inside open endpoints."""
        t = np.asarray(t, dtype=float)
        lo, hi = self.lo, self.hi
        if self.lo_open:
            lo = lo + margin_rel * max(abs(lo), 1.0) if math.isfinite(lo) else lo
        if self.hi_open and math.isfinite(hi):
            hi = hi - margin_rel * max(abs(hi), 1.0)
        out = np.clip(t, lo, hi if math.isfinite(hi) else None)
        return out if out.ndim else float(out)


class DecreasingFn:
    """Base class: a decreasing positive function on an interval.

    Subclasses implement ``_value`` on arrays of in-domain points and may
    provide closed-form ``_derivative`` / ``_inverse_exact``.
    """

    domain: Interval

    # -- evaluation ---------------------------------------------------------

    def __call__(self, t):
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        lo_bad = (t_arr < self.domain.lo) | ((t_arr == self.domain.lo) & self.domain.lo_open)
        hi_bad = (t_arr > self.domain.hi) | ((t_arr == self.domain.hi) & self.domain.hi_open)
        if lo_bad.any() or hi_bad.any():
            bad = t_arr[lo_bad | hi_bad][0]
            raise DomainError(f"{type(self).__name__}: t={bad} outside domain "
                              f"({self.domain.lo}, {self.domain.hi})")
        out = self._value(t_arr)
        return out if np.ndim(t) else float(out[0])

    def eval_clamped(self, t):
        """Evaluate with arguments clamped into the domain.

        Since the function decreases, clamping t upward at the right edge
        never *under*states the value; this is the sound direction when the
        function plays an obstacle role.  t <= lo maps to +inf.
        """
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.empty_like(t_arr)
        at_lo = t_arr <= self.domain.lo
        out[at_lo] = INF
        rest = ~at_lo
        if rest.any():
            clamped = self.domain.clamp_inside(t_arr[rest])
            out[rest] = self._value(np.atleast_1d(clamped))
        return out if np.ndim(t) else float(out[0])

    def _value(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    # -- limits --------------------------------------------------------------

    def limit_at_lo(self) -> float:
        """sup of values (limit at the left endpoint)."""
        lo, hi = self.domain.lo, self.domain.hi
        if not self.domain.lo_open:
            return float(self._value(np.array([lo]))[0])
        span = (hi - lo) if math.isfinite(hi) else 1.0
        probes = lo + span * np.array([1e-14, 1e-12, 1e-10])
        vals = self._value(probes)
        if vals[0] > 1e14 or not math.isfinite(vals[0]):
            return INF
        return float(vals[0])

    def limit_at_hi(self) -> float:
        """inf of values (limit at the right endpoint)."""
        lo, hi = self.domain.lo, self.domain.hi
        if not self.domain.hi_open:
            return float(self._value(np.array([hi]))[0])
        if math.isfinite(hi):
            span = hi - lo
            return float(self._value(np.array([hi - span * 1e-13]))[0])
        # decreasing and positive: probe geometrically growing arguments
        t = max(1.0, lo + 1.0)
        v = float(self._value(np.array([t]))[0])
        for _ in range(80):
            t *= 4.0
            v_new = float(self._value(np.array([t]))[0])
            if abs(v_new - v) <= 1e-15 * max(1.0, abs(v)):
                return max(v_new, 0.0) if v_new > 1e-300 else 0.0
            v = v_new
        return max(v, 0.0) if v > 1e-300 else 0.0

    # -- optional closed forms ------------------------------------------------

    def _derivative(self, t: np.ndarray):
        return None  # subclasses may override

    def _inverse_exact(self, s: float):
        return None  # subclasses may override

    def derivative(self, t):
        """d/dt of the function; closed form if available, else central FD."""
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        for x in t_arr:
            if not self.domain.contains(float(x)):
                raise DomainError(f"derivative: t={x} outside open domain")
        out = self._derivative(t_arr)
        if out is None:
            out = _central_fd(self, t_arr)
        return out if np.ndim(t) else float(out[0])


def _central_fd(f: DecreasingFn, t: np.ndarray) -> np.ndarray:
    h = FD_REL_STEP * np.maximum(np.abs(t), 1e-30)
    lo, hi = f.domain.lo, f.domain.hi
    tp = np.minimum(t + h, hi - 1e-15 * max(abs(hi), 1.0)) if math.isfinite(hi) else t + h
    tm = np.maximum(t - h, lo + 1e-15 * max(abs(lo), 1.0))
    return (f._value(tp) - f._value(tm)) / (tp - tm)


# ---------------------------------------------------------------------------
# Closed-form families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerLaw(DecreasingFn):
    """g(t) = C * t^(-b), C > 0, b > 0, on (0, inf)."""

    C: float
    b: float
    domain: Interval = field(default=None)

    def __post_init__(self):
        if self.C <= 0 or self.b <= 0:
            raise ArgumentError("PowerLaw requires C > 0 and b > 0")
        if self.domain is None:
            object.__setattr__(self, "domain", Interval(0.0, INF))

    def _value(self, t):
        return self.C * t ** (-self.b)

    def _derivative(self, t):
        return -self.C * self.b * t ** (-self.b - 1.0)

    def _inverse_exact(self, s):
        if s <= 0:
            return None
        return (self.C / s) ** (1.0 / self.b)

    def limit_at_lo(self):
        if self.domain.lo == 0.0:
            return INF
        return super().limit_at_lo()

    def limit_at_hi(self):
        if not math.isfinite(self.domain.hi):
            return 0.0
        return float(self._value(np.array([self.domain.hi]))[0])


@dataclass(frozen=True)
class LogPower(DecreasingFn):
    """g(t) = (log(eps_scale / t))^b on (0, eps_scale/e].

    The domain is clipped at eps_scale/e so the values stay >= 1; a custom
    domain may widen or narrow this (values must stay positive, i.e.
    hi < eps_scale).
    """

    b: float
    eps_scale: float = 1.0
    domain: Interval = field(default=None)

    def __post_init__(self):
        if self.b <= 0 or self.eps_scale <= 0:
            raise ArgumentError("LogPower requires b > 0 and eps_scale > 0")
        if self.domain is None:
            object.__setattr__(
                self, "domain",
                Interval(0.0, self.eps_scale * math.exp(-1.0), hi_open=False))
        if self.domain.hi > self.eps_scale:
            raise ArgumentError("LogPower domain must satisfy hi <= eps_scale")

    def _value(self, t):
        return np.log(self.eps_scale / t) ** self.b

    def _derivative(self, t):
        ln = np.log(self.eps_scale / t)
        return -self.b * ln ** (self.b - 1.0) / t

    def _inverse_exact(self, s):
        if s <= 0:
            return None
        return self.eps_scale * math.exp(-(s ** (1.0 / self.b)))

    def limit_at_lo(self):
        if self.domain.lo == 0.0:
            return INF
        return super().limit_at_lo()

    def limit_at_hi(self):
        return float(math.log(self.eps_scale / self.domain.hi) ** self.b)


@dataclass(frozen=True)
class ExpPower(DecreasingFn):
    """g(t) = exp(t^(-alpha)) on (0, inf), alpha > 0."""

    alpha: float
    domain: Interval = field(default=None)

    def __post_init__(self):
        if self.alpha <= 0:
            raise ArgumentError("ExpPower requires alpha > 0")
        if self.domain is None:
            object.__setattr__(self, "domain", Interval(0.0, INF))

    def _value(self, t):
        expo = t ** (-self.alpha)
        return np.where(expo > 700.0, INF, np.exp(np.minimum(expo, 700.0)))

    def _derivative(self, t):
        expo = t ** (-self.alpha)
        return np.where(expo > 700.0, -INF,
                        -self.alpha * t ** (-self.alpha - 1.0) * np.exp(np.minimum(expo, 700.0)))

    def _inverse_exact(self, s):
        if s <= 1.0:
            return None
        return math.log(s) ** (-1.0 / self.alpha)

    def limit_at_lo(self):
        if self.domain.lo == 0.0:
            return INF
        return super().limit_at_lo()

    def limit_at_hi(self):
        if not math.isfinite(self.domain.hi):
            return 1.0
        return float(self._value(np.array([self.domain.hi]))[0])


# -- concave profiles for the composed family --------------------------------


class ConcaveFn:
    """Increasing concave profile psi on (beta, inf) with psi -> inf."""

    beta: float

    def __call__(self, s):
        s_arr = np.atleast_1d(np.asarray(s, dtype=float))
        if (s_arr <= self.beta).any():
            raise DomainError(f"{type(self).__name__}: argument <= beta={self.beta}")
        out = self._value(s_arr)
        return out if np.ndim(s) else float(out[0])

    def _value(self, s):
        raise NotImplementedError

    def derivative(self, s):
        s_arr = np.atleast_1d(np.asarray(s, dtype=float))
        out = self._derivative(s_arr)
        return out if np.ndim(s) else float(out[0])

    def inverse(self, y: float) -> float:
        raise NotImplementedError

    def concavity_probe(self, n: int = 64, tol: float = TOL_CLOSED) -> bool:
        """Second differences <= tol on a log-spaced triple grid."""
        lo = self.beta + max(1e-6, abs(self.beta) * 1e-6)
        ss = lo + np.logspace(-3, 3, n)
        vals = self._value(ss)
        mid_interp = (vals[:-2] * (ss[2:] - ss[1:-1]) + vals[2:] * (ss[1:-1] - ss[:-2])) / (
            ss[2:] - ss[:-2])
        return bool(np.all(vals[1:-1] >= mid_interp - tol * np.maximum(1.0, np.abs(vals[1:-1]))))


@dataclass(frozen=True)
class PowerConcave(ConcaveFn):
    """psi(s) = (s + shift)^theta, 0 < theta <= 1, on (beta, inf)."""

    theta: float
    shift: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if not 0 < self.theta <= 1:
            raise ArgumentError("PowerConcave requires 0 < theta <= 1")
        if self.beta + self.shift < 0:
            raise ArgumentError("PowerConcave requires beta + shift >= 0")

    def _value(self, s):
        return (s + self.shift) ** self.theta

    def _derivative(self, s):
        return self.theta * (s + self.shift) ** (self.theta - 1.0)

    def inverse(self, y):
        return y ** (1.0 / self.theta) - self.shift


@dataclass(frozen=True)
class Log1pConcave(ConcaveFn):
    """psi(s) = log(1 + s) on (beta, inf), beta >= 0."""

    beta: float = 0.0

    def _value(self, s):
        return np.log1p(s)

    def _derivative(self, s):
        return 1.0 / (1.0 + s)

    def inverse(self, y):
        return math.expm1(y) if y < 700.0 else INF


@dataclass(frozen=True)
class AffineConcave(ConcaveFn):
    """psi(s) = a + b*s, b > 0 (affine = borderline concave)."""

    a: float = 0.0
    b: float = 1.0
    beta: float = 0.0

    def __post_init__(self):
        if self.b <= 0:
            raise ArgumentError("AffineConcave requires slope b > 0")

    def _value(self, s):
        return self.a + self.b * s

    def _derivative(self, s):
        return np.full_like(s, self.b)

    def inverse(self, y):
        return (y - self.a) / self.b


def fundamental_eta(k: int) -> DecreasingFn:
    """Radial profile of the Laplace fundamental solution.

    t^(2-k) on (0, inf) for k > 2; log(1/t) on (0, 1) for k = 2 (restricted
    so the values stay positive).
    """
    if not isinstance(k, (int, np.integer)) or k < 2:
        raise ArgumentError(f"fundamental_eta requires integer k >= 2, got {k!r}")
    if k == 2:
        return LogPower(b=1.0, eps_scale=1.0, domain=Interval(0.0, 1.0))
    return PowerLaw(C=1.0, b=float(k - 2))


@dataclass(frozen=True)
class PsiEta(DecreasingFn):
    """g(t) = psi(eta(t)) for a concave increasing profile psi."""

    psi: ConcaveFn
    k: int
    domain: Interval = field(default=None)

    def __post_init__(self):
        eta = fundamental_eta(self.k)
        object.__setattr__(self, "_eta", eta)
        if self.domain is None:
            # largest t with eta(t) > beta
            if self.psi.beta <= eta.limit_at_hi():
                hi = eta.domain.hi
            else:
                hi = eta._inverse_exact(self.psi.beta)
            object.__setattr__(self, "domain", Interval(0.0, hi))

    @property
    def eta(self) -> DecreasingFn:
        return self._eta

    def _value(self, t):
        return self.psi._value(self._eta._value(t))

    def _derivative(self, t):
        e = self._eta._value(t)
        return self.psi._derivative(e) * self._eta._derivative(t)

    def _inverse_exact(self, s):
        e = self.psi.inverse(s)
        if e <= self.psi.beta:
            return None
        return self._eta._inverse_exact(e)

    def limit_at_lo(self):
        return INF  # eta -> inf at 0+, psi -> inf

    def limit_at_hi(self):
        if math.isfinite(self.domain.hi):
            e_hi = float(self._eta._value(np.array([self.domain.hi * (1 - 1e-13)]))[0])
        else:
            e_hi = self._eta.limit_at_hi()
        e_hi = max(e_hi, self.psi.beta)
        arg = e_hi + max(abs(e_hi), 1.0) * 1e-12
        return float(self.psi._value(np.array([arg]))[0])


# ---------------------------------------------------------------------------
# Tabulated data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tabulated(DecreasingFn):
    """Piecewise-linear interpolation through knots (t, value).

    Knot abscissae are non-decreasing; a jump is encoded as two knots at
    equal t with distinct values (upper first).  ``strict`` requires the
    values to strictly decrease (majorant role); distribution functions use
    strict=False.  ``right_continuous`` selects the right value at jump
    abscissae (produced by :func:`right_regularize`).
    """

    knots_t: np.ndarray
    knots_v: np.ndarray
    strict: bool = True
    right_continuous: bool = False
    domain: Interval = field(default=None)

    def __post_init__(self):
        t = np.asarray(self.knots_t, dtype=float)
        v = np.asarray(self.knots_v, dtype=float)
        if t.ndim != 1 or t.shape != v.shape or len(t) < 2:
            raise ArgumentError("Tabulated requires matching 1-d knot arrays, >= 2 knots")
        if np.any(np.diff(t) < 0):
            raise ArgumentError("Tabulated knot abscissae must be non-decreasing")
        dv = np.diff(v)
        if self.strict:
            dup = np.diff(t) == 0
            if np.any(dv[~dup] >= 0) or np.any(dv[dup] >= 0):
                raise ArgumentError("Tabulated knot values must strictly decrease")
        elif np.any(dv > 1e-12 * max(1.0, float(np.max(np.abs(v))))):
            raise ArgumentError("Tabulated knot values must be non-increasing")
        object.__setattr__(self, "knots_t", t)
        object.__setattr__(self, "knots_v", v)
        if self.domain is None:
            object.__setattr__(
                self, "domain",
                Interval(float(t[0]), float(t[-1]), lo_open=False, hi_open=False))

    def _value(self, t):
        side = "right" if self.right_continuous else "left"
        tt, vv = self.knots_t, self.knots_v
        idx = np.searchsorted(tt, t, side=side)
        out = np.empty_like(t)
        # exact hits (and jump abscissae) pick the side-determined knot
        if side == "left":
            hit = (idx < len(tt)) & (tt[np.minimum(idx, len(tt) - 1)] == t)
        else:
            hit = (idx > 0) & (tt[np.maximum(idx - 1, 0)] == t)
            idx = np.where(hit, idx - 1, idx)
        out[hit] = vv[np.minimum(idx[hit], len(vv) - 1)]
        rest = ~hit
        if rest.any():
            i = np.clip(np.searchsorted(tt, t[rest]) - 1, 0, len(tt) - 2)
            t0, t1 = tt[i], tt[i + 1]
            w = np.where(t1 > t0, (t[rest] - t0) / np.where(t1 > t0, t1 - t0, 1.0), 0.0)
            out[rest] = vv[i] * (1 - w) + vv[i + 1] * w
        return out

    def limit_at_lo(self):
        return float(self.knots_v[0])

    def limit_at_hi(self):
        return float(self.knots_v[-1])

    def _derivative(self, t):
        # secant spanning a few knots; a step inside one linear segment would
        # just return that segment's slope
        spacing = float(np.median(np.diff(self.knots_t))) or 1e-12
        h = np.maximum(FD_REL_STEP * np.abs(t), 2.0 * spacing)
        lo, hi = self.domain.lo, self.domain.hi
        tp = np.minimum(t + h, hi)
        tm = np.maximum(t - h, lo)
        return (self._value(tp) - self._value(tm)) / (tp - tm)

    def fd_step(self, t):
        spacing = float(np.median(np.diff(self.knots_t))) or 1e-12
        return np.maximum(FD_REL_STEP * np.abs(np.asarray(t, float)), 2.0 * spacing)

    def _inverse_exact(self, s):
        """inf{t : f(t) <= s} by binary search over the knot values."""
        vv, tt = self.knots_v, self.knots_t
        if s >= vv[0]:
            return float(tt[0])
        if s < vv[-1]:
            return float(tt[-1])
        # values are non-increasing; first index with value <= s gives the
        # segment [j-1, j] with v[j-1] > s >= v[j] (inf convention at jumps
        # and plateau starts falls out of interpolating in this segment)
        j = int(np.searchsorted(-vv, -s, side="left"))
        t0, t1, v0, v1 = tt[j - 1], tt[j], vv[j - 1], vv[j]
        if v0 == v1 or t0 == t1:
            return float(t0 if v0 <= s else t1)
        w = (v0 - s) / (v0 - v1)
        return float(t0 + w * (t1 - t0))

    @classmethod
    def from_samples(cls, f: Callable, ts: np.ndarray, **kw) -> "Tabulated":
        ts = np.asarray(ts, dtype=float)
        return cls(ts, np.asarray(f(ts), dtype=float), **kw)


# ---------------------------------------------------------------------------
# Constructed functions (products, compositions, quadrature-backed)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CallableDecreasing(DecreasingFn):
    """A decreasing function given by an arbitrary vectorized callable.

    Optional closed-form derivative and inverse callables; the generic
    machinery (bisection inverse, finite differences) fills the gaps.
    Explicit endpoint limits should be supplied whenever they are known,
    since asymptotic probing of slowly decaying callables is unreliable.
    """

    fn: Callable
    domain: Interval
    deriv: Callable = None
    inverse: Callable = None
    limit_lo: float = None
    limit_hi: float = None
    label: str = ""

    def _value(self, t):
        return np.asarray(self.fn(t), dtype=float)

    def _derivative(self, t):
        if self.deriv is None:
            return None
        return np.asarray(self.deriv(t), dtype=float)

    def _inverse_exact(self, s):
        if self.inverse is None:
            return None
        return float(self.inverse(s))

    def limit_at_lo(self):
        if self.limit_lo is not None:
            return self.limit_lo
        return super().limit_at_lo()

    def limit_at_hi(self):
        if self.limit_hi is not None:
            return self.limit_hi
        return super().limit_at_hi()


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def evaluate(f: DecreasingFn, t):
    """Evaluate f at t (exact for closed forms, interpolated for Tabulated)."""
    return f(t)


def right_regularize(f: DecreasingFn) -> DecreasingFn:
    """Right-continuous version of f; differs only at jump points."""
    if isinstance(f, Tabulated) and not f.right_continuous:
        return replace(f, right_continuous=True)
    return f


def _bisect_inf_leq(f: DecreasingFn, s: float, tol_rel: float = 1e-13) -> float:
    """inf{t in domain : f(t) <= s} for non-increasing right-continuous f."""
    lo, hi = f.domain.lo, f.domain.hi
    # value near the left end
    if f.limit_at_lo() <= s:
        return lo
    # bracket: find some t with f(t) <= s
    if math.isfinite(hi):
        t_hi = hi if not f.domain.hi_open else hi - (hi - lo) * 1e-15
        if float(f._value(np.array([t_hi]))[0]) > s:
            return hi  # no solution: clamp to the right endpoint
    else:
        t_hi = max(2.0 * abs(lo), 1.0) + lo
        for _ in range(200):
            if float(f._value(np.array([t_hi]))[0]) <= s:
                break
            t_hi = lo + (t_hi - lo) * 2.0
        else:
            return INF
    # left bracket end with f > s
    if math.isfinite(lo):
        span = (t_hi - lo)
        t_lo = lo + span * 1e-15
        v = float(f._value(np.array([t_lo]))[0])
        shrink = 0
        while v <= s and shrink < 60:
            # left limit not actually > s at this resolution: tighten
            span *= 1e-2
            t_lo = lo + span * 1e-15
            v = float(f._value(np.array([t_lo]))[0])
            shrink += 1
        if v <= s:
            return lo
    else:
        t_lo = min(-1.0, t_hi - 1.0)
        for _ in range(200):
            if float(f._value(np.array([t_lo]))[0]) > s:
                break
            t_lo -= 2.0 * abs(t_lo)
        else:
            return -INF
    # invariant: f(t_lo) > s >= f(t_hi); bisect on t
    for _ in range(200):
        mid = 0.5 * (t_lo + t_hi)
        if mid == t_lo or mid == t_hi:
            break
        if float(f._value(np.array([mid]))[0]) <= s:
            t_hi = mid
        else:
            t_lo = mid
        if (t_hi - t_lo) <= tol_rel * max(1.0, abs(t_hi)):
            break
    return t_hi


@dataclass(frozen=True)
class GenInverse(DecreasingFn):
    """The generalized inverse f^-(s) = inf{t : f(t) <= s}.

    Coincides with the classical inverse for continuous strictly decreasing
    sources; uses the inf convention at jumps and plateaus.  Defined on
    (lim_hi f, inf); for s >= lim_lo f it returns the left endpoint of the
    source domain.
    """

    source: DecreasingFn
    domain: Interval = field(default=None)

    def __post_init__(self):
        if self.domain is None:
            lo = self.source.limit_at_hi()
            object.__setattr__(self, "domain", Interval(lo, INF))

    def _value(self, s):
        src = right_regularize(self.source)
        out = np.empty_like(s)
        for i, si in enumerate(s):
            exact = src._inverse_exact(float(si))
            out[i] = exact if exact is not None else _bisect_inf_leq(src, float(si))
        return out

    def _derivative(self, s):
        # inverse-function rule where the source has a closed-form derivative
        t = self._value(s)
        dv = self.source._derivative(np.asarray(t))
        if dv is None:
            return None
        with np.errstate(divide="ignore"):
            return 1.0 / dv


def gen_inverse(f: DecreasingFn) -> DecreasingFn:
    """Right-continuous generalized inverse of a decreasing function."""
    return GenInverse(source=f)


def derivative(f: DecreasingFn, t):
    """d/dt f at t (closed form where available, else central differences)."""
    return f.derivative(t)


def product(f: DecreasingFn, g: DecreasingFn, label: str = "",
            limit_lo: float = None, limit_hi: float = None) -> DecreasingFn:
    """Pointwise product of two functions on the intersection of domains."""
    dom = Interval(max(f.domain.lo, g.domain.lo), min(f.domain.hi, g.domain.hi))
    return CallableDecreasing(
        fn=lambda t: np.asarray(f._value(np.atleast_1d(np.asarray(t, float))))
        * np.asarray(g._value(np.atleast_1d(np.asarray(t, float)))),
        domain=dom, limit_lo=limit_lo, limit_hi=limit_hi, label=label or "product")

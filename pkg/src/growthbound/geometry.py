"""Regions, singular-set descriptors, distance oracles and size estimates.

Regions (the working domain Omega) are axis boxes, balls and unions of
those.  Singular sets (A, B) are finite geometric descriptors: point
clouds, polylines, rotated Lipschitz graphs sampled on a chart grid,
iterated-function-system dust, and unions.  On top of the distance
oracles sit the Monte Carlo tube measure, the tube-mass admissibility
constant, greedy covering numbers and the Assouad slope estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from .errors import (ArgumentError, ChartError, ChartViolation,
                     InsufficientScales, OutsideRegion)
from .sampling import MCEstimate, ball_volume, rng_for, sample_ball

# ---------------------------------------------------------------------------
# Regions
# ---------------------------------------------------------------------------


class Region:
    k: int

    def contains(self, pts) -> np.ndarray:
        raise NotImplementedError

    def boundary_dist(self, x) -> float:
        raise NotImplementedError

    def sample(self, rng, n: int) -> np.ndarray:
        raise NotImplementedError

    def volume(self) -> float:
        raise NotImplementedError

    def bbox(self) -> tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError


def _as_points(pts) -> np.ndarray:
    a = np.asarray(pts, dtype=float)
    return a[None, :] if a.ndim == 1 else a


@dataclass(frozen=True)
class AxisBox(Region):
    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lo, dtype=float)
        hi = np.asarray(self.hi, dtype=float)
        if lo.shape != hi.shape or lo.ndim != 1:
            raise ArgumentError("AxisBox lo/hi must be matching vectors")
        if not np.all(lo < hi):
            raise ArgumentError("AxisBox requires lo < hi componentwise")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def k(self):
        return len(self.lo)

    def contains(self, pts):
        p = _as_points(pts)
        return np.all((p > self.lo) & (p < self.hi), axis=1)

    def boundary_dist(self, x):
        x = np.asarray(x, dtype=float)
        if not self.contains(x)[0]:
            raise OutsideRegion(f"point {x} outside box")
        return float(min(np.min(x - self.lo), np.min(self.hi - x)))

    def sample(self, rng, n):
        return self.lo + rng.random((n, self.k)) * (self.hi - self.lo)

    def volume(self):
        return float(np.prod(self.hi - self.lo))

    def bbox(self):
        return self.lo.copy(), self.hi.copy()

    def boundary_points(self, m_per_face: int, rng) -> np.ndarray:
        pts = []
        for axis in range(self.k):
            for side in (self.lo, self.hi):
                p = self.lo + rng.random((m_per_face, self.k)) * (self.hi - self.lo)
                p[:, axis] = side[axis]
                pts.append(p)
        return np.vstack(pts)


@dataclass(frozen=True)
class Ball(Region):
    center: np.ndarray
    radius: float

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float)
        if self.radius <= 0:
            raise ArgumentError("Ball requires radius > 0")
        object.__setattr__(self, "center", c)

    @property
    def k(self):
        return len(self.center)

    def contains(self, pts):
        p = _as_points(pts)
        return np.linalg.norm(p - self.center, axis=1) < self.radius

    def boundary_dist(self, x):
        x = np.asarray(x, dtype=float)
        d = self.radius - float(np.linalg.norm(x - self.center))
        if d <= 0:
            raise OutsideRegion(f"point {x} outside ball")
        return d

    def sample(self, rng, n):
        return sample_ball(rng, self.center, self.radius, n)

    def volume(self):
        return ball_volume(self.k, self.radius)

    def bbox(self):
        return self.center - self.radius, self.center + self.radius

    def boundary_points(self, m: int, rng) -> np.ndarray:
        z = rng.standard_normal((m, self.k))
        z /= np.linalg.norm(z, axis=1, keepdims=True)
        return self.center + self.radius * z


@dataclass(frozen=True)
class RegionUnion(Region):
    members: tuple
    boundary_resolution: int = 4096

    def __post_init__(self):
        if not self.members:
            raise ArgumentError("RegionUnion requires at least one member")
        if not all(isinstance(m, (Ball, AxisBox)) for m in self.members):
            raise ArgumentError("RegionUnion members must be Ball or AxisBox")
        object.__setattr__(self, "members", tuple(self.members))

    @property
    def k(self):
        return self.members[0].k

    def contains(self, pts):
        p = _as_points(pts)
        inside = np.zeros(len(p), dtype=bool)
        for m in self.members:
            inside |= m.contains(p)
        return inside

    def _boundary_samples(self):
        # member boundaries restricted to actual boundary points of the union
        rng = rng_for(160451, 0)
        pts = np.vstack([m.boundary_points(self.boundary_resolution, rng)
                         for m in self.members])
        keep = np.ones(len(pts), dtype=bool)
        for m in self.members:
            # strictly interior to some member -> not a boundary point;
            # back off slightly to dodge roundoff at the generating boundary
            if isinstance(m, Ball):
                d = np.linalg.norm(pts - m.center, axis=1)
                keep &= d >= m.radius * (1 - 1e-12)
            else:
                inner = np.all((pts > m.lo + 1e-12) & (pts < m.hi - 1e-12), axis=1)
                keep &= ~inner
        return pts[keep]

    def boundary_dist(self, x):
        x = np.asarray(x, dtype=float)
        if not self.contains(x)[0]:
            raise OutsideRegion(f"point {x} outside union")
        bpts = self._boundary_samples()
        return float(np.min(np.linalg.norm(bpts - x, axis=1)))

    def sample(self, rng, n):
        lo, hi = self.bbox()
        out = np.empty((0, self.k))
        while len(out) < n:
            cand = lo + rng.random((2 * n, self.k)) * (hi - lo)
            out = np.vstack([out, cand[self.contains(cand)]])
        return out[:n]

    def volume(self):
        # MC hit fraction of the bounding box (exact for disjoint members
        # is not needed; callers treat this as an estimate)
        lo, hi = self.bbox()
        rng = rng_for(982451, 1)
        n = 200_000
        cand = lo + rng.random((n, self.k)) * (hi - lo)
        return float(np.prod(hi - lo)) * float(np.mean(self.contains(cand)))

    def bbox(self):
        los, his = zip(*[m.bbox() for m in self.members])
        return np.min(np.vstack(los), axis=0), np.max(np.vstack(his), axis=0)


# ---------------------------------------------------------------------------
# Set descriptors
# ---------------------------------------------------------------------------


class SetDescr:
    k: int

    def distance(self, pts) -> np.ndarray:
        """Distance from each point to the set."""
        raise NotImplementedError

    def sample_points(self, resolution: float = None) -> np.ndarray:
        """A finite point sample representing the set."""
        raise NotImplementedError

    def bbox(self):
        p = self.sample_points()
        return p.min(axis=0), p.max(axis=0)

    def dist(self, x) -> float:
        return float(self.distance(_as_points(x))[0])


@dataclass(frozen=True)
class PointCloud(SetDescr):
    points: np.ndarray

    def __post_init__(self):
        p = _as_points(self.points)
        object.__setattr__(self, "points", p)
        object.__setattr__(self, "_tree", cKDTree(p))

    @property
    def k(self):
        return self.points.shape[1]

    def distance(self, pts):
        d, _ = self._tree.query(_as_points(pts))
        return np.asarray(d, dtype=float)

    def sample_points(self, resolution=None):
        return self.points.copy()


def _segment_distance(pts: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ab = b - a
    denom = float(np.dot(ab, ab))
    if denom == 0.0:
        return np.linalg.norm(pts - a, axis=1)
    t = np.clip((pts - a) @ ab / denom, 0.0, 1.0)
    proj = a + t[:, None] * ab
    return np.linalg.norm(pts - proj, axis=1)


@dataclass(frozen=True)
class Polyline(SetDescr):
    vertices: np.ndarray

    def __post_init__(self):
        v = _as_points(self.vertices)
        if len(v) < 2:
            raise ArgumentError("Polyline requires >= 2 vertices")
        object.__setattr__(self, "vertices", v)

    @property
    def k(self):
        return self.vertices.shape[1]

    def distance(self, pts):
        p = _as_points(pts)
        d = np.full(len(p), np.inf)
        for i in range(len(self.vertices) - 1):
            d = np.minimum(d, _segment_distance(p, self.vertices[i], self.vertices[i + 1]))
        return d

    def length(self):
        return float(np.sum(np.linalg.norm(np.diff(self.vertices, axis=0), axis=1)))

    def sample_points(self, resolution=None):
        if resolution is None:
            resolution = self.length() / 1024.0
        pts = [self.vertices[0]]
        for i in range(len(self.vertices) - 1):
            a, b = self.vertices[i], self.vertices[i + 1]
            seg = float(np.linalg.norm(b - a))
            m = max(int(math.ceil(seg / max(resolution, 1e-12))), 1)
            ts = np.linspace(0.0, 1.0, m + 1)[1:]
            pts.extend(a + t * (b - a) for t in ts)
        return np.asarray(pts)

    def local_tangent(self, x) -> np.ndarray:
        """Unit tangent of the segment nearest to x."""
        p = _as_points(x)
        best, tan = np.inf, None
        for i in range(len(self.vertices) - 1):
            d = float(_segment_distance(p, self.vertices[i], self.vertices[i + 1])[0])
            if d < best:
                best = d
                seg = self.vertices[i + 1] - self.vertices[i]
                tan = seg / np.linalg.norm(seg)
        return tan


@dataclass(frozen=True)
class LipGraph(SetDescr):
    """A rotated Lipschitz graph over a 1-d chart grid.

    Chart coordinates c = (x', phi(x')); world points are
    anchor + U^T c where U is the stored orthogonal rotation.
    """

    xs: np.ndarray            # (m,) strictly increasing chart abscissae
    phis: np.ndarray          # (m, q) sampled graph values
    L: float
    rotation: np.ndarray      # (k, k) orthogonal
    anchor: np.ndarray        # (k,)

    def __post_init__(self):
        xs = np.asarray(self.xs, dtype=float)
        phis = np.asarray(self.phis, dtype=float)
        if phis.ndim == 1:
            phis = phis[:, None]
        U = np.asarray(self.rotation, dtype=float)
        anchor = np.asarray(self.anchor, dtype=float)
        if np.any(np.diff(xs) <= 0):
            raise ArgumentError("LipGraph chart abscissae must strictly increase")
        if not np.allclose(U.T @ U, np.eye(len(U)), atol=1e-12):
            raise ArgumentError("LipGraph rotation must be orthogonal (U^T U = I)")
        # discrete Lipschitz bound on all sample pairs (xs strictly increase,
        # so dx = 0 only on the diagonal where dphi = 0)
        m = len(xs)
        for i0 in range(0, m, 256):
            blk = slice(i0, min(i0 + 256, m))
            dphi = np.linalg.norm(phis[blk, None, :] - phis[None, :, :], axis=2)
            dx = np.abs(xs[blk, None] - xs[None, :])
            bad = dphi > self.L * dx + 1e-12
            if np.any(bad):
                ii, jj = np.argwhere(bad)[0]
                raise ArgumentError(
                    f"LipGraph samples violate the declared Lipschitz bound "
                    f"L={self.L} at chart pair ({xs[blk][ii]:.4g}, {xs[jj]:.4g})")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "phis", phis)
        object.__setattr__(self, "rotation", U)
        object.__setattr__(self, "anchor", anchor)

    @property
    def k(self):
        return self.rotation.shape[0]

    def chart_points(self) -> np.ndarray:
        return np.hstack([self.xs[:, None], self.phis])

    def world_points(self) -> np.ndarray:
        return self.anchor + self.chart_points() @ self.rotation

    def phi_at(self, xq) -> np.ndarray:
        """Interpolated graph value(s) at chart abscissa(e) xq."""
        xq = np.atleast_1d(np.asarray(xq, dtype=float))
        out = np.empty((len(xq), self.phis.shape[1]))
        for j in range(self.phis.shape[1]):
            out[:, j] = np.interp(xq, self.xs, self.phis[:, j])
        return out

    def to_polyline(self) -> Polyline:
        return Polyline(self.world_points())

    def distance(self, pts):
        # the sampled graph is a polyline in world coordinates; segment
        # projection refines the nearest-sample distance
        return self.to_polyline().distance(pts)

    def sample_points(self, resolution=None):
        return self.to_polyline().sample_points(resolution)

    def chart_radius(self) -> float:
        return float(min(-self.xs[0], self.xs[-1]))


def _bbox_corners(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    k = len(lo)
    corners = []
    for mask in range(2 ** k):
        corners.append([hi[j] if (mask >> j) & 1 else lo[j] for j in range(k)])
    return np.unique(np.asarray(corners, dtype=float), axis=0)


@dataclass(frozen=True)
class CantorDust(SetDescr):
    """Attractor points of the IFS x -> corner + ratio * (x - corner).

    Corners are the distinct corners of the bounding box (a degenerate box
    gives fewer corners: the middle-thirds set on a segment has two).  The
    finite representation is every depth-fold image of the corner set.
    """

    box_lo: np.ndarray
    box_hi: np.ndarray
    ratio: float
    depth: int

    def __post_init__(self):
        lo = np.asarray(self.box_lo, dtype=float)
        hi = np.asarray(self.box_hi, dtype=float)
        if not 0 < self.ratio < 0.5:
            raise ArgumentError("CantorDust requires contraction ratio in (0, 1/2)")
        if self.depth < 1:
            raise ArgumentError("CantorDust requires depth >= 1")
        corners = _bbox_corners(lo, hi)
        if len(corners) < 2:
            raise ArgumentError("CantorDust bounding box is a single point")
        pts = corners
        for _ in range(self.depth):
            pts = np.vstack([c + self.ratio * (pts - c) for c in corners])
            pts = np.unique(pts, axis=0)
        object.__setattr__(self, "box_lo", lo)
        object.__setattr__(self, "box_hi", hi)
        object.__setattr__(self, "_points", pts)
        object.__setattr__(self, "_tree", cKDTree(pts))

    @property
    def k(self):
        return len(self.box_lo)

    @property
    def corner_count(self):
        return len(_bbox_corners(self.box_lo, self.box_hi))

    def distance(self, pts):
        d, _ = self._tree.query(_as_points(pts))
        return np.asarray(d, dtype=float)

    def sample_points(self, resolution=None):
        return self._points.copy()


@dataclass(frozen=True)
class SetUnion(SetDescr):
    members: tuple

    def __post_init__(self):
        if not self.members:
            raise ArgumentError("SetUnion requires at least one member")
        object.__setattr__(self, "members", tuple(self.members))

    @property
    def k(self):
        return self.members[0].k

    def distance(self, pts):
        p = _as_points(pts)
        d = np.full(len(p), np.inf)
        for m in self.members:
            d = np.minimum(d, m.distance(p))
        return d

    def sample_points(self, resolution=None):
        return np.vstack([m.sample_points(resolution) for m in self.members])


# ---------------------------------------------------------------------------
# Chart parameters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChartParams:
    """Lipschitz chart constants: L >= 2 and chart radius R."""

    L: float
    R: float

    def __post_init__(self):
        if self.L < 2.0:
            raise ChartError(f"chart requires L >= 2, got {self.L}")
        if self.R <= 0:
            raise ChartError("chart requires R > 0")

    def validate_against(self, alpha: float):
        if not self.R < 2.0 * alpha:
            raise ChartError(f"chart requires R < 2*alpha (R={self.R}, alpha={alpha})")


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def dist_to_set(x, S: SetDescr) -> float:
    """Euclidean distance from x to the descriptor S."""
    return S.dist(x)


def boundary_dist(x, omega: Region) -> float:
    """Distance from an interior point to the region boundary."""
    return omega.boundary_dist(x)


def tube_measure(G: SetDescr, sigma: float, x, R: float, n: int = 10**5,
                 seed: int = 0) -> MCEstimate:
    """MC estimate of m({y in B(x,R): 0 < dist(y,G) <= sigma})."""
    if sigma <= 0 or R <= 0:
        raise ArgumentError("tube_measure requires sigma > 0 and R > 0")
    if n < 10**3:
        raise ArgumentError("tube_measure requires n >= 1000")
    rng = rng_for(seed, 3)
    pts = sample_ball(rng, np.asarray(x, dtype=float), R, n)
    d = G.distance(pts)
    frac = float(np.mean((d > 0) & (d <= sigma)))
    from .sampling import indicator_mc
    return indicator_mc(frac, n, ball_volume(len(np.atleast_1d(x)), R), seed)


@dataclass(frozen=True)
class AdmissibilityEstimate:
    """Empirical tube-mass constant: sup tube/(sigma^q* R^p*) over a schedule."""

    p_star: float
    q_star: float
    C_hat: float
    k: int
    schedule: tuple = ()          # records (center, R, sigma, ratio, stderr)
    n_per_probe: int = 0
    seed: int = 0

    def __post_init__(self):
        if abs(self.q_star - (self.k - self.p_star)) > 1e-12:
            raise ArgumentError("q_star must equal k - p_star")
        if self.C_hat <= 0:
            raise ArgumentError("C_hat must be positive")

    @property
    def C1(self) -> float:
        return max(self.C_hat, 1.0)


def default_probe_schedule(G: SetDescr, sigmas=None, radii=None,
                           n_centers: int = 4):
    """(center, R, sigma) lattice: 5x5 log-spaced scales, centers on the set."""
    sigmas = np.logspace(-3, -1, 5) if sigmas is None else np.asarray(sigmas)
    radii = np.logspace(-2, 0, 5) if radii is None else np.asarray(radii)
    pts = G.sample_points()
    idx = np.linspace(0, len(pts) - 1, n_centers).astype(int)
    centers = pts[idx]
    return [(c, float(R), float(s)) for c in centers for R in radii for s in sigmas]


def admissibility_constant(G: SetDescr, p_star: float, schedule=None,
                           seed: int = 0, n_per_probe: int = 20_000) -> AdmissibilityEstimate:
    """Estimate of the tube-mass constant of G for exponent p_star."""
    k = G.k
    if not 0 < p_star < k:
        raise ArgumentError(f"p_star must lie in (0, {k})")
    q_star = k - p_star
    if schedule is None:
        schedule = default_probe_schedule(G)
    rows = []
    c_hat = 0.0
    for i, (center, R, sigma) in enumerate(schedule):
        est = tube_measure(G, sigma, center, R, n=n_per_probe, seed=seed + 7919 * i)
        ratio = est.value / (sigma ** q_star * R ** p_star)
        rows.append((tuple(np.asarray(center, float)), R, sigma, ratio, est.stderr))
        c_hat = max(c_hat, ratio)
    return AdmissibilityEstimate(p_star=p_star, q_star=q_star, C_hat=max(c_hat, 1e-12),
                                 k=k, schedule=tuple(rows),
                                 n_per_probe=n_per_probe, seed=seed)


def covering_number(G: SetDescr, r: float, points: np.ndarray = None) -> int:
    """Greedy upper estimate of the minimal number of radius-r balls covering G."""
    if r <= 0:
        raise ArgumentError("covering_number requires r > 0")
    pts = G.sample_points(resolution=r / 4.0) if points is None else points
    if len(pts) == 0:
        return 0
    uncovered = np.ones(len(pts), dtype=bool)
    count = 0
    while uncovered.any():
        i = int(np.argmax(uncovered))
        center = pts[i]
        uncovered &= np.linalg.norm(pts - center, axis=1) > r
        count += 1
    return count


def assouad_estimate(G: SetDescr, scale_pairs=None, n_centers: int = 6) -> float:
    """Localized covering-slope estimate of the Assouad dimension.

    Per center x on G: least-squares slope of log N_r(B(x,R) cap G) against
    log(R/r) over the scale pairs; the estimate is the max over centers.
    """
    pts_all = G.sample_points()
    lo, hi = pts_all.min(axis=0), pts_all.max(axis=0)
    diam = float(np.linalg.norm(hi - lo))
    if scale_pairs is None:
        scale_pairs = [(diam * 2.0 ** (-i), diam * 2.0 ** (-i) / ratio)
                       for i in (1, 2, 3) for ratio in (16.0, 40.0, 100.0)]
    if len(scale_pairs) < 3:
        raise InsufficientScales("assouad_estimate requires >= 3 scale pairs")
    min_r = min(r for _, r in scale_pairs)
    pts_all = G.sample_points(resolution=min_r / 4.0)
    idx = np.linspace(0, len(pts_all) - 1, n_centers).astype(int)
    best = 0.0
    for ci in idx:
        x = pts_all[ci]
        logs_ratio, logs_n = [], []
        for R, r in scale_pairs:
            local = pts_all[np.linalg.norm(pts_all - x, axis=1) < R]
            if len(local) == 0:
                continue
            n_cov = covering_number(G, r, points=local)
            logs_ratio.append(math.log(R / r))
            logs_n.append(math.log(max(n_cov, 1)))
        if len(logs_n) >= 3:
            slope = np.polyfit(logs_ratio, logs_n, 1)[0]
            best = max(best, float(slope))
    return best


@dataclass
class ChartReport:
    anchors: list
    passed: bool
    worst_lipschitz: float
    sandwich_checked: int
    details: list = field(default_factory=list)


def _rotation_for_anchor(A: SetDescr, anchor: np.ndarray) -> np.ndarray:
    """Rotation mapping the local tangent direction to the first axis."""
    if isinstance(A, LipGraph):
        return A.rotation
    if isinstance(A, Polyline):
        tan = A.local_tangent(anchor)
    elif isinstance(A, SetUnion):
        best, tan = np.inf, None
        for m in A.members:
            d = m.dist(anchor)
            if d < best and isinstance(m, (Polyline, LipGraph)):
                best = d
                tan = (m.local_tangent(anchor) if isinstance(m, Polyline)
                       else m.rotation[0])
        if tan is None:
            raise ArgumentError("no chartable member near anchor")
    else:
        raise ArgumentError(f"lipschitz_chart_check does not support {type(A).__name__}")
    k = len(anchor)
    # Householder-style completion: first row = tangent
    U = np.eye(k)
    U[0] = tan
    q, _ = np.linalg.qr(U.T)
    # fix signs so the first row is +tangent
    if np.dot(q[:, 0], tan) < 0:
        q[:, 0] = -q[:, 0]
    U = q.T
    return U


def lipschitz_chart_check(A: SetDescr, params: ChartParams, anchors=None,
                          n_probe: int = 400, tol: float = 1e-9) -> ChartReport:
    """Verify the rotated-graph property with discrete Lipschitz constant <= L.

    At each anchor the set restricted to the chart cylinder must be a graph
    over the first rotated coordinate with slope bounds <= L, and sampled
    off-curve probes must satisfy the two-sided chart-distance sandwich
        |x'' - phi(x')| / (L+1) <= dist(x, A) <= |x'' - phi(x')|.
    """
    L, R = params.L, params.R
    pts = A.sample_points(resolution=R / 256.0)
    if anchors is None:
        # keep default anchors away from the curve ends: the ambient chart
        # must span the full cylinder around each anchor
        idx = np.linspace(0.2 * (len(pts) - 1), 0.8 * (len(pts) - 1), 5).astype(int)
        anchors = [pts[i] for i in idx]
    worst = 0.0
    sandwiched = 0
    details = []
    for a in anchors:
        a = np.asarray(a, dtype=float)
        U = _rotation_for_anchor(A, a)
        local = (pts - a) @ U.T
        in_cyl = (np.abs(local[:, 0]) < R) & (
            np.linalg.norm(local[:, 1:], axis=1) < 3.0 * L * R)
        loc = local[in_cyl]
        if len(loc) < 2:
            continue
        order = np.argsort(loc[:, 0])
        loc = loc[order]
        dx = np.abs(loc[:, None, 0] - loc[None, :, 0])
        dphi = np.linalg.norm(loc[:, None, 1:] - loc[None, :, 1:], axis=2)
        mask = dx > 1e-12
        slopes = np.where(mask, dphi / np.where(mask, dx, 1.0), 0.0)
        # coincident chart abscissae with distinct heights: not a graph
        stacked = (~mask) & (dphi > 10 * tol + 1e-9)
        if stacked.any():
            i, j = np.argwhere(stacked)[0]
            raise ChartViolation(
                "set is not a graph over the chart axis near anchor",
                anchor=a, pair=(loc[i], loc[j]))
        s_max = float(slopes.max()) if slopes.size else 0.0
        worst = max(worst, s_max)
        if s_max > L + tol:
            i, j = np.unravel_index(int(np.argmax(slopes)), slopes.shape)
            raise ChartViolation(
                f"discrete Lipschitz constant {s_max:.4g} exceeds declared L={L}",
                anchor=a, pair=(loc[i], loc[j]))
        # chart-distance sandwich on off-curve probes in the cylinder
        rng = rng_for(57713, int(abs(a[0] * 1e6)) % 10**6)
        r = R / (16.0 * L)
        probes = _cylinder_boundary_points(a, U, r, 2.5 * L * r, n_probe, rng)
        x_local = (probes - a) @ U.T
        phi_v = _interp_graph(loc, x_local[:, 0])
        gap = np.linalg.norm(x_local[:, 1:] - phi_v, axis=1)
        dists = A.distance(probes)
        ok_lo = dists >= gap / (L + 1.0) - max(10 * tol, 1e-6)
        ok_hi = dists <= gap + max(10 * tol, 1e-6)
        if not np.all(ok_lo & ok_hi):
            bad = int(np.argmin(ok_lo & ok_hi))
            raise ChartViolation(
                "chart-distance sandwich violated",
                anchor=a, pair=(probes[bad], float(dists[bad])))
        sandwiched += len(probes)
        details.append({"anchor": a.tolist(), "max_slope": s_max,
                        "n_in_cylinder": int(len(loc))})
    return ChartReport(anchors=[np.asarray(a).tolist() for a in anchors],
                       passed=True, worst_lipschitz=worst,
                       sandwich_checked=sandwiched, details=details)


def _interp_graph(loc_sorted: np.ndarray, xq: np.ndarray) -> np.ndarray:
    """Linear interpolation of transverse coordinates along the chart axis."""
    out = np.empty((len(xq), loc_sorted.shape[1] - 1))
    for j in range(1, loc_sorted.shape[1]):
        out[:, j - 1] = np.interp(xq, loc_sorted[:, 0], loc_sorted[:, j])
    return out


def _cylinder_boundary_points(a: np.ndarray, U: np.ndarray, r: float, s: float,
                              n: int, rng) -> np.ndarray:
    """Sample the boundary of the rotated cylinder C(a, r, s)."""
    k = U.shape[0]
    q = k - 1
    n_side = n // 3
    pts_local = []
    # two side faces: x' = +-r, |x''| <= s
    for sign in (-1.0, 1.0):
        xs = np.full(n_side, sign * r)
        if q == 1:
            xq = (2.0 * rng.random((n_side, 1)) - 1.0) * s
        else:
            z = rng.standard_normal((n_side, q))
            z /= np.linalg.norm(z, axis=1, keepdims=True)
            xq = z * (s * rng.random((n_side, 1)) ** (1.0 / q))
        pts_local.append(np.hstack([xs[:, None], xq]))
    # lateral face: |x'| <= r, |x''| = s
    m = n - 2 * n_side
    xs = (2.0 * rng.random(m) - 1.0) * r
    if q == 1:
        xq = np.where(rng.random((m, 1)) < 0.5, -s, s)
    else:
        z = rng.standard_normal((m, q))
        z /= np.linalg.norm(z, axis=1, keepdims=True)
        xq = z * s
    pts_local.append(np.hstack([xs[:, None], xq]))
    return a + np.vstack(pts_local) @ U

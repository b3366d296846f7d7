"""Rate regions as explicit convex geometry, Pareto frontiers, and the
numerical certificate that the three sum-power schemes share one region.

Regions are stored both ways: as half-spaces (for membership tests) and as
counterclockwise vertex lists (for plotting and cross-checks).  Frontiers
are finite sampled point sets; all distances between frontiers are computed
on the samples themselves, never on interpolated curves, so the sampling
resolution controls the accuracy of any verdict derived from them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from .core import (
    LN2,
    ChannelConfig,
    PerUser,
    PowerBudget,
    RatePair,
    SumPower,
    _fd_term,
    fd_touch_split,
    shannon_rate,
    sic_rate,
    sum_capacity,
)

__all__ = [
    "HalfSpace",
    "Region",
    "Frontier",
    "EquivalenceReport",
    "SubsetConstraint",
    "DEFAULT_RESOLUTION",
    "DEFAULT_TOLERANCE",
    "superposition_region",
    "td_frontier",
    "fd_frontier",
    "superposition_frontier",
    "region_contains",
    "dominates",
    "hausdorff",
    "verify_equivalence",
    "polymatroid_region",
]

DEFAULT_RESOLUTION = 1025
DEFAULT_TOLERANCE = 1e-6

# vertices closer than this (inf-norm) are merged, and a vertex closer than
# this to the chord of its neighbors is dropped as collinear
_VERTEX_MERGE_TOL = 1e-12


@dataclass(frozen=True)
class HalfSpace:
    """Linear constraint a1*r1 + a2*r2 <= b on the rate plane."""

    a1: float
    a2: float
    b: float

    def __post_init__(self):
        if not all(np.isfinite(v) for v in (self.a1, self.a2, self.b)):
            raise ValueError("half-space coefficients must be finite")
        if self.a1 == 0.0 and self.a2 == 0.0:
            raise ValueError("half-space normal must be nonzero")

    def satisfied_by(self, r1, r2, tol: float = 0.0):
        return self.a1 * np.asarray(r1) + self.a2 * np.asarray(r2) <= self.b + tol


@dataclass(frozen=True)
class Region:
    """Convex rate region: half-spaces plus the matching CCW vertex list.

    The half-space list always includes r1 >= 0 and r2 >= 0.  Vertices are
    the extreme points only; degenerate budgets may collapse the polygon to
    a segment or a single point.
    """

    halfspaces: tuple
    vertices: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "halfspaces", tuple(self.halfspaces))
        verts = np.atleast_2d(np.asarray(self.vertices, dtype=float))
        object.__setattr__(self, "vertices", verts)
        if verts.ndim != 2 or verts.shape[1] != 2 or verts.shape[0] < 1:
            raise ValueError("vertices must be an (n, 2) array with n >= 1")
        if not np.all(np.isfinite(verts)):
            raise ValueError("vertices must be finite")
        for h in self.halfspaces:
            if not np.all(h.satisfied_by(verts[:, 0], verts[:, 1], tol=1e-9)):
                raise ValueError("a vertex violates a half-space of its own region")
        if not np.all(
            [h.satisfied_by(0.0, 0.0, tol=1e-9) for h in self.halfspaces]
        ):
            raise ValueError("region must contain the origin")
        n = verts.shape[0]
        if n >= 3:
            nxt = np.roll(verts, -1, axis=0)
            prv = np.roll(verts, 1, axis=0)
            cross = (verts[:, 0] - prv[:, 0]) * (nxt[:, 1] - verts[:, 1]) - (
                verts[:, 1] - prv[:, 1]
            ) * (nxt[:, 0] - verts[:, 0])
            if np.any(cross < -1e-9):
                raise ValueError("vertices must be convex in counterclockwise order")


@dataclass(frozen=True)
class Frontier:
    """Sampled Pareto boundary: points sorted by ascending r1, descending r2.

    r2 never increases along the list and no point repeats.  Equal r1
    values are allowed only on a vertical face (r2 strictly dropping),
    which occurs on the pentagon's right edge and for one-user budgets.
    """

    points: np.ndarray = field(repr=False)

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=float))
        object.__setattr__(self, "points", pts)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError("points must form an (n, 2) array")
        if pts.shape[0] < 2:
            raise ValueError("a frontier needs at least 2 points")
        if not np.all(np.isfinite(pts)) or np.any(pts < 0):
            raise ValueError("frontier points must be finite and nonnegative")
        d = np.diff(pts, axis=0)
        if np.any(d[:, 0] < 0):
            raise ValueError("frontier points must be sorted by ascending r1")
        if np.any(d[:, 1] > 0):
            raise ValueError("r2 must be nonincreasing along the frontier")
        if np.any(np.all(d == 0.0, axis=1)):
            raise ValueError("frontier points must be distinct")

    @property
    def r1(self) -> np.ndarray:
        return self.points[:, 0]

    @property
    def r2(self) -> np.ndarray:
        return self.points[:, 1]

    def __len__(self):
        return self.points.shape[0]


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the sum-power comparison of the three schemes.

    Carries the shared sum capacity, the three pairwise Hausdorff distances
    between the sampled frontiers, and the verdict that all of them fall
    within the tolerance.
    """

    sum_capacity: float
    sc_td: float
    sc_fd: float
    td_fd: float
    tolerance: float
    verdict: bool

    def __post_init__(self):
        if self.verdict != all(d <= self.tolerance for d in self.distances):
            raise ValueError("verdict inconsistent with distances and tolerance")

    @property
    def distances(self) -> tuple[float, float, float]:
        return (self.sc_td, self.sc_fd, self.td_fd)


@dataclass(frozen=True)
class SubsetConstraint:
    """One bound of a K-user region: the rates of `users` sum to at most `bound`."""

    users: tuple[int, ...]
    bound: float

    def coefficients(self, num_users: int) -> np.ndarray:
        c = np.zeros(num_users)
        c[list(self.users)] = 1.0
        return c


# ---------------------------------------------------------------------------
# region construction


def _clean_vertices(raw) -> np.ndarray:
    """Drop duplicate and collinear vertices from a CCW candidate list."""
    verts = [np.asarray(v, dtype=float) for v in raw]
    # merge consecutive duplicates, including the wrap-around pair
    out = []
    for v in verts:
        if not out or np.max(np.abs(v - out[-1])) > _VERTEX_MERGE_TOL:
            out.append(v)
    while len(out) > 1 and np.max(np.abs(out[0] - out[-1])) <= _VERTEX_MERGE_TOL:
        out.pop()
    # drop vertices lying on the chord of their neighbors
    changed = True
    while changed and len(out) >= 3:
        changed = False
        for i in range(len(out)):
            a = out[i - 1]
            b = out[i]
            c = out[(i + 1) % len(out)]
            ab = c - a
            norm = math.hypot(ab[0], ab[1])
            if norm == 0.0:
                continue
            dist = abs(ab[0] * (b[1] - a[1]) - ab[1] * (b[0] - a[0])) / norm
            if dist <= _VERTEX_MERGE_TOL:
                out.pop(i)
                changed = True
                break
    return np.array(out)


def superposition_region(budget: PowerBudget, ch: ChannelConfig) -> Region:
    """Region achievable when both users share the full resource.

    Per-user budget: the pentagon bounded by the two single-user rates and
    the sum-rate face, its off-axis corners reached by the two cancellation
    orders.  Sum-power budget: only the sum-rate face remains, a triangle.
    Zero-power users collapse the polygon gracefully.
    """
    if isinstance(budget, SumPower):
        cs = shannon_rate(budget.p_total, ch)
        halfspaces = (
            HalfSpace(1.0, 1.0, cs),
            HalfSpace(-1.0, 0.0, 0.0),
            HalfSpace(0.0, -1.0, 0.0),
        )
        verts = _clean_vertices([(0.0, 0.0), (cs, 0.0), (0.0, cs)])
        return Region(halfspaces, verts)
    if not isinstance(budget, PerUser):
        raise TypeError(f"expected PerUser or SumPower, got {type(budget).__name__}")
    c1 = shannon_rate(budget.p1, ch)
    c2 = shannon_rate(budget.p2, ch)
    cs = shannon_rate(budget.p1 + budget.p2, ch)
    c2_star = sic_rate(budget.p2, budget.p1, ch)
    c1_star = sic_rate(budget.p1, budget.p2, ch)
    halfspaces = (
        HalfSpace(1.0, 0.0, c1),
        HalfSpace(0.0, 1.0, c2),
        HalfSpace(1.0, 1.0, cs),
        HalfSpace(-1.0, 0.0, 0.0),
        HalfSpace(0.0, -1.0, 0.0),
    )
    verts = _clean_vertices(
        [(0.0, 0.0), (c1, 0.0), (c1, c2_star), (c1_star, c2), (0.0, c2)]
    )
    return Region(halfspaces, verts)


# ---------------------------------------------------------------------------
# frontier sampling


def _alpha_grid(resolution: int) -> np.ndarray:
    resolution = int(resolution)
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    return np.linspace(0.0, 1.0, resolution)


def _drop_repeats(pts: np.ndarray) -> np.ndarray:
    keep = np.ones(pts.shape[0], dtype=bool)
    keep[1:] = np.any(np.diff(pts, axis=0) != 0.0, axis=1)
    return pts[keep]


def _degenerate_segment(budget: PerUser, ch: ChannelConfig) -> Frontier | None:
    """Two-endpoint frontier for one-user budgets; None when both users transmit."""
    if budget.p1 > 0 and budget.p2 > 0:
        return None
    if budget.p1 == 0 and budget.p2 == 0:
        raise ValueError("degenerate frontier: both users have zero power")
    if budget.p1 == 0:
        c2 = shannon_rate(budget.p2, ch)
        return Frontier(np.array([[0.0, c2], [0.0, 0.0]]))
    c1 = shannon_rate(budget.p1, ch)
    return Frontier(np.array([[0.0, 0.0], [c1, 0.0]]))


def _require_positive_total(p_total):
    if p_total == 0:
        raise ValueError("degenerate frontier: zero total power")


def td_frontier(budget: PowerBudget, ch: ChannelConfig,
                resolution: int = DEFAULT_RESOLUTION) -> Frontier:
    """Time-division rate pairs on a uniform time-share grid, sorted by r1."""
    grid = _alpha_grid(resolution)
    if isinstance(budget, PerUser):
        seg = _degenerate_segment(budget, ch)
        if seg is not None:
            return seg
        c1 = shannon_rate(budget.p1, ch)
        c2 = shannon_rate(budget.p2, ch)
        pts = np.column_stack([grid * c1, (1.0 - grid) * c2])
    elif isinstance(budget, SumPower):
        _require_positive_total(budget.p_total)
        r = shannon_rate(budget.p_total, ch)
        pts = np.column_stack([grid * r, (1.0 - grid) * r])
    else:
        raise TypeError(f"expected PerUser or SumPower, got {type(budget).__name__}")
    return Frontier(_drop_repeats(pts))


def fd_frontier(budget: PowerBudget, ch: ChannelConfig,
                resolution: int = DEFAULT_RESOLUTION) -> Frontier:
    """Frequency-division rate pairs on the uniform bandwidth-share grid.

    For per-user budgets the grid is augmented with the touch split
    p1/(p1+p2), so the point where the scheme meets the sum-rate face is
    always among the samples.  Under a sum-power budget the curve collapses
    onto the time-division chord and the output matches td_frontier exactly.
    """
    grid = _alpha_grid(resolution)
    if isinstance(budget, PerUser):
        seg = _degenerate_segment(budget, ch)
        if seg is not None:
            return seg
        touch = fd_touch_split(budget).alpha
        grid = np.unique(np.concatenate([grid, [touch]]))
        pts = np.column_stack(
            [
                _fd_term(grid, budget.p1, ch.noise_power),
                _fd_term(1.0 - grid, budget.p2, ch.noise_power),
            ]
        )
    elif isinstance(budget, SumPower):
        _require_positive_total(budget.p_total)
        r = shannon_rate(budget.p_total, ch)
        pts = np.column_stack([grid * r, (1.0 - grid) * r])
    else:
        raise TypeError(f"expected PerUser or SumPower, got {type(budget).__name__}")
    return Frontier(_drop_repeats(pts))


def _pentagon_boundary(budget: PerUser, ch: ChannelConfig,
                       resolution: int) -> np.ndarray:
    """Sample the three dominant pentagon edges by arc length.

    The four edge endpoints are always emitted exactly, so the two
    cancellation-order corners appear verbatim regardless of resolution
    (the sample count may exceed `resolution` by up to two).
    """
    c1 = shannon_rate(budget.p1, ch)
    c2 = shannon_rate(budget.p2, ch)
    c2_star = sic_rate(budget.p2, budget.p1, ch)
    c1_star = sic_rate(budget.p1, budget.p2, ch)
    breaks = np.array([[0.0, c2], [c1_star, c2], [c1, c2_star], [c1, 0.0]])
    seg = np.linalg.norm(np.diff(breaks, axis=0), axis=1)
    knots = np.concatenate([[0.0], np.cumsum(seg)])
    t = np.union1d(np.linspace(0.0, knots[-1], int(resolution)), knots)
    return np.column_stack(
        [np.interp(t, knots, breaks[:, 0]), np.interp(t, knots, breaks[:, 1])]
    )


def superposition_frontier(budget: PowerBudget, ch: ChannelConfig,
                           resolution: int = DEFAULT_RESOLUTION) -> Frontier:
    """Pareto boundary of the superposition region.

    Per-user budget: the three dominant pentagon edges, with both corner
    points included exactly.  Sum-power budget: the power-split sweep, user
    one taking a fraction alpha of the total power and being decoded last;
    every sample sums to the sum capacity.
    """
    grid = _alpha_grid(resolution)
    if isinstance(budget, PerUser):
        seg = _degenerate_segment(budget, ch)
        if seg is not None:
            return seg
        pts = _pentagon_boundary(budget, ch, resolution)
    elif isinstance(budget, SumPower):
        _require_positive_total(budget.p_total)
        q1 = grid * budget.p_total
        q2 = (1.0 - grid) * budget.p_total
        pts = np.column_stack([shannon_rate(q1, ch), sic_rate(q2, q1, ch)])
    else:
        raise TypeError(f"expected PerUser or SumPower, got {type(budget).__name__}")
    return Frontier(_drop_repeats(pts))


# ---------------------------------------------------------------------------
# predicates and metrics


def region_contains(region: Region, point, tol: float = 0.0):
    """True when the point satisfies every half-space with slack tol.

    `point` may be a RatePair, an (r1, r2) pair, or an (n, 2) array, in
    which case a boolean array comes back.
    """
    if isinstance(point, RatePair):
        r1, r2 = point.r1, point.r2
    else:
        arr = np.asarray(point, dtype=float)
        if arr.ndim == 1:
            r1, r2 = arr[0], arr[1]
        else:
            r1, r2 = arr[:, 0], arr[:, 1]
    ok = np.ones(np.shape(r1), dtype=bool)
    for h in region.halfspaces:
        ok &= h.satisfied_by(r1, r2, tol=tol)
    return bool(ok) if ok.ndim == 0 else ok


def dominates(p, q) -> bool:
    """Componentwise (non-strict) domination of rate pair q by rate pair p."""
    p1, p2 = tuple(p)
    q1, q2 = tuple(q)
    return bool(p1 >= q1 and p2 >= q2)


def _frontier_points(f) -> np.ndarray:
    pts = f.points if isinstance(f, Frontier) else np.atleast_2d(np.asarray(f, float))
    if pts.size == 0:
        raise ValueError("cannot take distances against an empty frontier")
    return pts


def hausdorff(f, g) -> float:
    """Symmetric Hausdorff distance between two sampled frontiers.

    Distances are measured between the sample points themselves (no
    interpolation along the polyline), so two samplings of one curve only
    read as close when their points land close together.
    """
    a = _frontier_points(f)
    b = _frontier_points(g)
    d_ab = cKDTree(b).query(a, k=1)[0].max()
    d_ba = cKDTree(a).query(b, k=1)[0].max()
    return float(max(d_ab, d_ba))


def _sc_frontier_rate_matched(p_total: float, ch: ChannelConfig,
                              resolution: int) -> Frontier:
    """Superposition sum-power frontier sampled at prescribed rate splits.

    The sum-power frontier is one segment however it is swept, but a
    power-fraction sweep spaces its samples logarithmically while the
    orthogonal schemes space theirs uniformly, and a point-set distance
    between the two would then measure the parameterization mismatch
    (about half a sample spacing) instead of the gap between the curves.
    Here each grid fraction t is mapped to the power split whose
    first-user rate is t times the sum capacity, q1 = N*(2^(t*Cs) - 1),
    and both rates are then evaluated through the superposition formulas.
    Any residual distance against the orthogonal samplings is genuine
    disagreement of the achieved rates, not grid skew.
    """
    _require_positive_total(p_total)
    grid = _alpha_grid(resolution)
    cs = shannon_rate(p_total, ch)
    q1 = ch.noise_power * np.expm1(grid * cs * LN2)
    # the endpoint splits are known in closed form; pinning them keeps the
    # extreme points bit-identical to the orthogonal frontiers' endpoints
    q1[0] = 0.0
    q1[-1] = p_total
    # float round-off can push interior q1 a hair past the budget
    q2 = np.clip(p_total - q1, 0.0, None)
    q1 = np.clip(q1, 0.0, None)
    pts = np.column_stack([shannon_rate(q1, ch), sic_rate(q2, q1, ch)])
    return Frontier(_drop_repeats(pts))


def verify_equivalence(p_total, ch: ChannelConfig,
                       resolution: int = DEFAULT_RESOLUTION,
                       tol: float = DEFAULT_TOLERANCE) -> EquivalenceReport:
    """Numerically certify that the three schemes share one sum-power region.

    Builds the superposition, time-division, and frequency-division
    frontiers for the same total power, measures the three pairwise
    Hausdorff distances over matched rate grids, and passes when all of
    them fall within `tol`.
    """
    if not (np.isfinite(p_total) and p_total > 0):
        raise ValueError("p_total must be positive and finite")
    p_total = float(p_total)
    budget = SumPower(p_total)
    sc = _sc_frontier_rate_matched(p_total, ch, resolution)
    td = td_frontier(budget, ch, resolution)
    fd = fd_frontier(budget, ch, resolution)
    sc_td = hausdorff(sc, td)
    sc_fd = hausdorff(sc, fd)
    td_fd = hausdorff(td, fd)
    return EquivalenceReport(
        sum_capacity=float(sum_capacity(budget, ch)),
        sc_td=sc_td,
        sc_fd=sc_fd,
        td_fd=td_fd,
        tolerance=float(tol),
        verdict=bool(max(sc_td, sc_fd, td_fd) <= tol),
    )


# ---------------------------------------------------------------------------
# K-user generalization


def polymatroid_region(powers, ch: ChannelConfig) -> list[SubsetConstraint]:
    """Subset-sum rate bounds for K users sharing the channel.

    Every nonempty user subset S obeys sum_{i in S} R_i <=
    log2(1 + sum_{i in S} P_i / N); the constraints come back ordered by
    subset size, then lexicographically.  For two users they reproduce the
    pentagon's three upper bounds.
    """
    powers = [float(p) for p in powers]
    k = len(powers)
    if k == 0:
        raise ValueError("at least one user is required")
    if k > 16:
        raise ValueError("more than 16 users would need 2^K constraints; refusing")
    for p in powers:
        if not (np.isfinite(p) and p >= 0):
            raise ValueError("powers must be finite and nonnegative")
    constraints = []
    for size in range(1, k + 1):
        for users in itertools.combinations(range(k), size):
            total = sum(powers[i] for i in users)
            constraints.append(SubsetConstraint(users, shannon_rate(total, ch)))
    return constraints

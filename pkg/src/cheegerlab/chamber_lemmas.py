"""Disk-chain geometry backing the empty-chamber area estimates.

A chain is a sequence of consecutively tangent disks, optionally closed into a
loop, resting on a line (half-plane flavor), or wedged into a 60-degree sector.
The bounded region enclosed between the disks (and the container lines) is the
quantity of interest; its area is computed exactly by a polygon-minus-sectors
decomposition through the disk centers (plus tangency feet and the sector
apex), with a stratified Monte Carlo estimator as fallback and cross-check.

Reference areas at radius r:

    delta  = r^2 (2 sqrt(3) - pi) / 2      three mutually tangent disks
    wedge  = r^2 (2 - pi / 2)              two tangent disks on a line
    corner = r^2 (3 sqrt(3) - pi) / 3      one disk in a pi/3 corner

The chain bounds are: closed  >= (m-2) delta,
half-plane >= (m-2) delta + wedge, sector >= (m-2) delta + wedge + corner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import GenerationError, ValidationError

SQRT3 = math.sqrt(3.0)
SECTOR_OPENING = math.pi / 3.0

CLOSED = "closed"
HALF_PLANE = "half_plane"
SECTOR = "sector"
FLAVORS = (CLOSED, HALF_PLANE, SECTOR)

_REL_TOL = 1e-9


def reference_areas(r: float):
    """(delta, wedge, corner) reference areas at radius r."""
    if r <= 0.0:
        raise ValidationError(f"radius must be positive, got {r}")
    delta = 0.5 * r * r * (2.0 * SQRT3 - math.pi)
    wedge = r * r * (2.0 - math.pi / 2.0)
    corner = r * r * (3.0 * SQRT3 - math.pi) / 3.0
    return delta, wedge, corner


@dataclass(frozen=True)
class DiskChain:
    """Consecutively tangent disks; container lines are canonical per flavor.

    ``half_plane`` chains live in y >= 0 with the end disks tangent to the
    x-axis; ``sector`` chains live between the rays at angles 0 and pi/3 from
    the origin, first disk tangent to the x-axis ray, last disk tangent to the
    other ray.  ``warnings`` collects degenerate but admissible features
    (touching non-consecutive disks, straight angles).
    """

    centers: np.ndarray
    radii: np.ndarray
    flavor: str
    warnings: tuple = ()

    def __post_init__(self):
        centers = np.atleast_2d(np.asarray(self.centers, dtype=float))
        radii = np.asarray(self.radii, dtype=float).ravel()
        centers.setflags(write=False)
        radii.setflags(write=False)
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "radii", radii)
        if self.flavor not in FLAVORS:
            raise ValidationError(f"unknown chain flavor {self.flavor!r}")
        object.__setattr__(self, "warnings", tuple(validate_chain(self)))

    @property
    def m(self) -> int:
        return len(self.radii)

    @property
    def scale(self) -> float:
        return max(1.0, float(np.abs(self.centers).max()), float(self.radii.max()))


def _sector_inward_normals():
    # Region of the sector: y >= 0 and x sin60 - y cos60 >= 0.
    return np.array([[0.0, 1.0], [math.sin(SECTOR_OPENING), -math.cos(SECTOR_OPENING)]])


def _line_distances(points: np.ndarray, flavor: str) -> np.ndarray:
    """Distances to the container lines, one column per line (empty for closed)."""
    if flavor == CLOSED:
        return np.zeros((len(points), 0))
    normals = _sector_inward_normals()
    if flavor == HALF_PLANE:
        normals = normals[:1]
    return points @ normals.T


def chain_feet(ch: DiskChain):
    """Tangency feet of the end disks on the container lines (open flavors)."""
    if ch.flavor == CLOSED:
        return None, None
    first = np.array([ch.centers[0, 0], 0.0])
    if ch.flavor == HALF_PLANE:
        last = np.array([ch.centers[-1, 0], 0.0])
    else:
        n = np.array([math.sin(SECTOR_OPENING), -math.cos(SECTOR_OPENING)])
        last = ch.centers[-1] - ch.radii[-1] * n
    return first, last


def _interior_angle(prev, v, nxt) -> float:
    a = prev - v
    b = nxt - v
    return math.atan2(abs(a[0] * b[1] - a[1] * b[0]), float(a @ b))


def _pocket_angle(prev, v, nxt) -> float:
    """Interior angle at v of a CCW polygon, in [0, 2*pi); reflex gives > pi.

    The region polygon winds CCW around the pocket, so this is the angle seen
    from the pocket side; the chain hypotheses require it strictly below pi.
    """
    a = prev - v
    b = nxt - v
    ang = math.atan2(b[0] * a[1] - b[1] * a[0], float(a @ b))
    return ang % (2.0 * math.pi)


def validate_chain(ch: DiskChain):
    """Raise on hypothesis violations; return warnings for degenerate features."""
    m = ch.m
    if len(ch.centers) != m:
        raise ValidationError("centers and radii length mismatch")
    if m < 2 or (ch.flavor == CLOSED and m < 3):
        raise ValidationError(f"chain of flavor {ch.flavor} needs more disks, got {m}")
    if (ch.radii <= 0.0).any():
        raise ValidationError("disk radii must be positive")
    tol = _REL_TOL * ch.scale
    warnings = []

    pairs = [(i, (i + 1) % m) for i in range(m if ch.flavor == CLOSED else m - 1)]
    for i, j in pairs:
        d = float(np.hypot(*(ch.centers[i] - ch.centers[j])))
        want = ch.radii[i] + ch.radii[j]
        if abs(d - want) > 1e3 * tol:
            raise ValidationError(
                f"disks {i},{j} must be tangent: distance {d:.12g}, radii sum {want:.12g}"
            )
    for i in range(m):
        for j in range(i + 2, m):
            if ch.flavor == CLOSED and i == 0 and j == m - 1:
                continue
            d = float(np.hypot(*(ch.centers[i] - ch.centers[j])))
            want = ch.radii[i] + ch.radii[j]
            if d < want - 1e3 * tol:
                raise ValidationError(
                    f"non-consecutive disks {i},{j} overlap: {d:.12g} < {want:.12g}"
                )
            if d < want + 1e3 * tol:
                warnings.append(f"touching_nonconsecutive_{i}_{j}")

    if ch.flavor != CLOSED:
        dists = _line_distances(ch.centers, ch.flavor)
        if (dists < ch.radii[:, None] - 1e3 * tol).any():
            raise ValidationError("a disk leaves the container region")
        if abs(dists[0, 0] - ch.radii[0]) > 1e3 * tol:
            raise ValidationError("first disk must be tangent to the first line")
        last_col = 0 if ch.flavor == HALF_PLANE else 1
        if abs(dists[-1, last_col] - ch.radii[-1]) > 1e3 * tol:
            raise ValidationError("last disk must be tangent to the last line")

    # pocket-side angles at the centers must stay below pi (straight is degenerate)
    if ch.flavor == CLOSED:
        pts = [c for c in ch.centers]
        center_ids = list(range(m))
    else:
        f0, f1 = chain_feet(ch)
        pts = [f0] + [c for c in ch.centers] + [f1]
        center_ids = list(range(1, m + 1))
        if ch.flavor == SECTOR:
            pts = [np.zeros(2)] + pts
            center_ids = [i + 1 for i in center_ids]
    arr = np.vstack(pts)
    x, y = arr[:, 0], arr[:, 1]
    if float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))) < 0.0:
        n_pts = len(pts)
        arr = arr[::-1]
        center_ids = [n_pts - 1 - i for i in center_ids]
    n_pts = len(arr)
    for k, i in enumerate(center_ids):
        ang = _pocket_angle(arr[(i - 1) % n_pts], arr[i], arr[(i + 1) % n_pts])
        if ang > math.pi - 1e-12:
            if ang > math.pi + 1e-9:
                raise ValidationError(f"pocket angle at disk {k} is not below pi")
            warnings.append(f"straight_angle_{k}")
    return warnings


def region_polygon(ch: DiskChain) -> np.ndarray:
    """CCW polygon through centers (plus feet and the sector apex for open flavors)."""
    if ch.flavor == CLOSED:
        poly = ch.centers
    else:
        f0, f1 = chain_feet(ch)
        rows = [f0] + [c for c in ch.centers] + [f1]
        if ch.flavor == SECTOR:
            rows = [np.zeros(2)] + rows
        poly = np.vstack(rows)
    x, y = poly[:, 0], poly[:, 1]
    area2 = float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
    return poly if area2 >= 0.0 else poly[::-1]


class ChainRegion(NamedTuple):
    area: float
    method: str
    sample_error: float


def _decomposition_valid(ch: DiskChain, poly: np.ndarray, centers_idx) -> bool:
    n = len(poly)
    nxt = np.roll(poly, -1, axis=0)
    prv = np.roll(poly, 1, axis=0)
    cross = (poly[:, 0] - prv[:, 0]) * (nxt[:, 1] - poly[:, 1]) - (
        poly[:, 1] - prv[:, 1]
    ) * (nxt[:, 0] - poly[:, 0])
    tol = _REL_TOL * ch.scale
    if (cross < -1e3 * tol * ch.scale).any():
        return False
    for local, i in enumerate(centers_idx):
        p, r = poly[i], ch.radii[local]
        for j in range(n):
            if j != i and float(np.hypot(*(poly[j] - p))) < r - 1e3 * tol:
                return False
        for j in range(n):
            k = (j + 1) % n
            if i in (j, k):
                continue
            a, b = poly[j], poly[k]
            ab = b - a
            t = float((p - a) @ ab) / float(ab @ ab)
            t = min(1.0, max(0.0, t))
            if float(np.hypot(*(a + t * ab - p))) < r - 1e3 * tol:
                return False
    return True


def _decomposition_area(ch: DiskChain, poly: np.ndarray, centers_idx) -> float:
    x, y = poly[:, 0], poly[:, 1]
    area = 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
    n = len(poly)
    for local, i in enumerate(centers_idx):
        ang = _interior_angle(poly[(i - 1) % n], poly[i], poly[(i + 1) % n])
        area -= 0.5 * ang * ch.radii[local] ** 2
    return area


def _point_in_polygon(points: np.ndarray, poly: np.ndarray) -> np.ndarray:
    """Even-odd crossing test, vectorized over points; handles simple polygons."""
    inside = np.zeros(len(points), dtype=bool)
    x, y = points[:, 0], points[:, 1]
    n = len(poly)
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        crosses = (y0 > y) != (y1 > y)
        with np.errstate(divide="ignore", invalid="ignore"):
            xi = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
        hit = crosses & (x < xi)
        inside ^= hit
    return inside


def monte_carlo_area(ch: DiskChain, samples: int = 10_000_000, seed: int = 0) -> ChainRegion:
    """Stratified Monte Carlo estimate of the enclosed region's area.

    The region is the part of the center polygon outside every disk; its
    boundary is covered by the disks and the container lines.  The sample
    error is the binomial standard deviation scaled by the box area.
    """
    poly = region_polygon(ch)
    lo = poly.min(axis=0)
    hi = poly.max(axis=0)
    span = hi - lo
    n = max(2, int(math.sqrt(samples)))
    rng = np.random.default_rng(seed)
    total = n * n
    hits = 0
    # stratify by rows of cells to bound memory
    ys = (np.arange(n) + 0.0) / n
    for row in range(n):
        px = lo[0] + span[0] * (np.arange(n) + rng.random(n)) / n
        py = lo[1] + span[1] * (ys[row] + rng.random(n) / n)
        pts = np.column_stack([px, py])
        ok = _point_in_polygon(pts, poly)
        for c, r in zip(ch.centers, ch.radii):
            if not ok.any():
                break
            d2 = (pts[:, 0] - c[0]) ** 2 + (pts[:, 1] - c[1]) ** 2
            ok &= d2 >= r * r
        hits += int(ok.sum())
    box = float(span[0] * span[1])
    p = hits / total
    return ChainRegion(p * box, "monte_carlo", box * math.sqrt(p * (1.0 - p) / total))


def chain_region_area(ch: DiskChain, mc_samples: int = 10_000_000, mc_seed: int = 0) -> ChainRegion:
    """Area of the region enclosed by the chain (and container lines).

    Uses the exact polygon-minus-sectors decomposition when its convexity
    preconditions hold, otherwise falls back to stratified Monte Carlo.
    """
    poly = region_polygon(ch)
    if ch.flavor == CLOSED:
        centers_idx = list(range(ch.m))
    elif ch.flavor == HALF_PLANE:
        centers_idx = list(range(1, ch.m + 1))
    else:
        centers_idx = list(range(2, ch.m + 2))
    # polygon orientation may have been flipped; recompute indices if so
    if not np.allclose(poly[centers_idx[0]], ch.centers[0]):
        n = len(poly)
        centers_idx = [
            int(np.argmin(np.hypot(poly[:, 0] - c[0], poly[:, 1] - c[1])))
            for c in ch.centers
        ]
    if _decomposition_valid(ch, poly, centers_idx):
        return ChainRegion(_decomposition_area(ch, poly, centers_idx), "decomposition", 0.0)
    return monte_carlo_area(ch, mc_samples, mc_seed)


class ChainBoundReport(NamedTuple):
    area: float
    bound: float
    holds: bool
    method: str
    sample_error: float


def verify_chain_bound(ch: DiskChain, mc_samples: int = 10_000_000, mc_seed: int = 0) -> ChainBoundReport:
    """Compare the enclosed area against the flavor's lower bound at r* = min radius."""
    if ch.m < 3:
        raise ValidationError(f"chain bound needs m >= 3 disks, got {ch.m}")
    region = chain_region_area(ch, mc_samples, mc_seed)
    r_star = float(ch.radii.min())
    delta, wedge, corner = reference_areas(r_star)
    bound = (ch.m - 2) * delta
    if ch.flavor == HALF_PLANE:
        bound += wedge
    elif ch.flavor == SECTOR:
        bound += wedge + corner
    tol = 3.0 * region.sample_error + 1e-9 * max(1.0, r_star * r_star)
    return ChainBoundReport(region.area, bound, bool(region.area >= bound - tol),
                            region.method, region.sample_error)


def pocket_outline(ch: DiskChain):
    """The enclosed region's boundary as an ArcCurve (arcs on the disks plus
    container-line segments), oriented counterclockwise.

    Only defined when the region is connected and bounded by one arc per disk,
    which is the generic case produced by ``random_chain``.
    """
    from .arc_geometry import Arc, ArcCurve, Point, Segment, signed_area

    def tangency(i, j):
        ci, cj = ch.centers[i], ch.centers[j]
        return ci + ch.radii[i] * (cj - ci) / float(np.hypot(*(cj - ci)))

    def arc(i, entry, exit_):
        c = ch.centers[i]
        a0 = math.atan2(entry[1] - c[1], entry[0] - c[0])
        a1 = math.atan2(exit_[1] - c[1], exit_[0] - c[0])
        return Arc(Point(c[0], c[1]), float(ch.radii[i]), a0, a1, -1)

    m = ch.m
    edges = []
    if ch.flavor == CLOSED:
        for i in range(m):
            edges.append(arc(i, tangency(i, (i - 1) % m), tangency(i, (i + 1) % m)))
    elif ch.flavor == HALF_PLANE:
        f0, f1 = chain_feet(ch)
        edges.append(Segment(Point(*f0), Point(*f1)))
        edges.append(arc(m - 1, f1, tangency(m - 1, m - 2)))
        for i in range(m - 2, 0, -1):
            edges.append(arc(i, tangency(i, i + 1), tangency(i, i - 1)))
        edges.append(arc(0, tangency(0, 1), f0))
    else:
        f0, f1 = chain_feet(ch)
        origin = Point(0.0, 0.0)
        edges.append(Segment(origin, Point(*f0)))
        edges.append(arc(0, f0, tangency(0, 1)))
        for i in range(1, m - 1):
            edges.append(arc(i, tangency(i, i - 1), tangency(i, i + 1)))
        edges.append(arc(m - 1, tangency(m - 1, m - 2), f1))
        edges.append(Segment(Point(*f1), origin))
    curve = ArcCurve(tuple(edges), closed=True)
    if signed_area(curve) < 0.0:
        curve = curve.reversed()
    return curve


# ---------------------------------------------------------------------------
# Tangency coordinates and angle derivatives for the three-disk perturbation.

def tangency_geometry(r1: float, r2: float, r3: float, l: Optional[float] = None):
    """Center of the middle disk tangent to two anchored disks, and the angle
    derivatives d(theta_1)/d(r_2), d(theta_3)/d(r_2).

    With ``l is None`` the anchor disks are mutually tangent (centers at
    distance r1 + r3); otherwise their centers sit at distance l > r1 + r3.
    Both derivatives are positive whenever the configuration exists.
    """
    for name, val in (("r1", r1), ("r2", r2), ("r3", r3)):
        if val <= 0.0 or not math.isfinite(val):
            raise ValidationError(f"{name} must be positive, got {val}")
    if l is None:
        span = r1 + r3
        x0 = (r1 * r1 + span * span + 2.0 * r1 * r2 - r3 * r3 - 2.0 * r3 * r2) / (2.0 * span)
        y2 = (r1 + r2) ** 2 - ((r1 - r3) * (r1 + r3 + 2.0 * r2) + span * span) ** 2 / (4.0 * span * span)
        if y2 <= 0.0:
            raise ValidationError("middle disk cannot touch both anchors")
        y0 = math.sqrt(y2)
        inner = -r1 * r3 * (span * span - (r1 + r3 + 2.0 * r2) ** 2) / (span * span)
        root = math.sqrt(inner)
        d1 = 2.0 * r1 * r3 / (span * (r1 + r2) * root)
        d3 = 2.0 * r1 * r3 / (span * (r2 + r3) * root)
        return x0, y0, d1, d3
    if l <= r1 + r3:
        raise ValidationError(f"anchor distance l = {l} must exceed r1 + r3 = {r1 + r3}")
    x0 = (l * l + r1 * r1 + 2.0 * r1 * r2 - r3 * r3 - 2.0 * r3 * r2) / (2.0 * l)
    y2 = (r1 + r2) ** 2 - (l * l + (r1 - r3) * (r1 + r3 + 2.0 * r2)) ** 2 / (4.0 * l * l)
    if y2 <= 0.0:
        raise ValidationError("middle disk cannot touch both anchors at this distance")
    y0 = math.sqrt(y2)
    num = (l + r1 - r3) * (l - r1 + r3)
    inner = -num * (l * l - (r1 + r3 + 2.0 * r2) ** 2) / (l * l)
    if inner <= 0.0:
        raise ValidationError("middle disk cannot touch both anchors at this distance")
    root = math.sqrt(inner)
    d1 = num / (l * (r1 + r2) * root)
    d3 = num / (l * (r2 + r3) * root)
    return x0, y0, d1, d3


# ---------------------------------------------------------------------------
# The three pocket-area functions phi(t).

QUADRILATERAL = "quadrilateral"
PENTAGON = "pentagon"
SECTOR_PHI = "sector"

_PHI_INTERVALS = {PENTAGON: (0.0, math.pi / 3.0), SECTOR_PHI: (0.0, math.pi / 2.0)}


def phi(variant: str, t: float, aux: Optional[float] = None) -> float:
    """Pocket-area functions of the induction steps.

    ``quadrilateral`` takes aux = l (anchor distance, 2 r* = 1 normalization),
    ``pentagon`` takes no aux, ``sector`` takes aux = r*.
    """
    if variant == QUADRILATERAL:
        if aux is None or aux < 1.0:
            raise ValidationError("quadrilateral phi needs aux = l >= 1")
        if not 0.0 <= t <= math.pi:
            raise ValidationError(f"t = {t} outside [0, pi]")
        l = aux
        rad = (l * l - 2.0 * l * math.cos(t) + 1.0) * (-l * l + 2.0 * l * math.cos(t) + 3.0)
        if rad < -1e-12:
            raise ValidationError(f"t = {t} outside the geometric domain for l = {l}")
        return 0.25 * math.sqrt(max(rad, 0.0)) + 0.5 * l * math.sin(t)
    if variant == PENTAGON:
        lo, hi = _PHI_INTERVALS[PENTAGON]
        if not lo - 1e-12 <= t <= hi + 1e-12:
            raise ValidationError(f"t = {t} outside [0, pi/3]")
        return math.cos(t) * (1.0 + math.sin(t))
    if variant == SECTOR_PHI:
        if aux is None or aux <= 0.0:
            raise ValidationError("sector phi needs aux = r* > 0")
        lo, hi = _PHI_INTERVALS[SECTOR_PHI]
        if not lo - 1e-12 <= t <= hi + 1e-12:
            raise ValidationError(f"t = {t} outside [0, pi/2]")
        r2 = aux * aux
        return (r2 / 3.0) * (
            6.0 * math.sin(t)
            + 3.0 * math.sin(2.0 * t)
            + 6.0 * SQRT3 * math.cos(t)
            + SQRT3 * math.cos(2.0 * t)
            + 4.0 * SQRT3
        )
    raise ValidationError(f"unknown phi variant {variant!r}")


# ---------------------------------------------------------------------------
# Random chain generator (rejection sampling within the lemma hypotheses).

_ATTEMPTS = 4000


def _circle_intersections(c0, r0, c1, r1):
    d = float(np.hypot(*(c1 - c0)))
    if d > r0 + r1 or d < abs(r0 - r1) or d == 0.0:
        return []
    a = (r0 * r0 - r1 * r1 + d * d) / (2.0 * d)
    h2 = r0 * r0 - a * a
    if h2 < 0.0:
        return []
    h = math.sqrt(h2)
    mid = c0 + a * (c1 - c0) / d
    off = np.array([-(c1 - c0)[1], (c1 - c0)[0]]) * h / d
    return [mid + off, mid - off]


def _try_chain(rng: np.random.Generator, flavor: str, m: int, r_lo: float, r_hi: float):
    radii = rng.uniform(r_lo, r_hi, m)
    margin = 0.05
    if flavor == CLOSED:
        centers = [np.zeros(2), np.array([radii[0] + radii[1], 0.0])]
        heading = 0.0
        for i in range(2, m - 1):
            heading += rng.uniform(0.25, 1.9 * math.pi / m)
            step = radii[i - 1] + radii[i]
            centers.append(centers[-1] + step * np.array([math.cos(heading), math.sin(heading)]))
        cands = _circle_intersections(
            centers[-1], radii[m - 2] + radii[m - 1], centers[0], radii[0] + radii[m - 1]
        )
        last = [c for c in cands if c[1] > 0.0] if m == 3 else cands
        for cand in last:
            pts = np.vstack(centers + [cand])
            try:
                return DiskChain(pts, radii, CLOSED)
            except ValidationError:
                continue
        return None
    if flavor == HALF_PLANE:
        # arch over the line: headings sweep monotonically from +theta0 downward
        centers = [np.array([0.0, radii[0]])]
        theta0 = rng.uniform(0.45, 1.1)
        heading = theta0
        drop = 2.0 * theta0 / max(m - 2, 1)
        for i in range(1, m - 1):
            if i > 1:
                heading -= drop * rng.uniform(0.6, 1.4)
            step = radii[i - 1] + radii[i]
            cand = centers[-1] + step * np.array([math.cos(heading), math.sin(heading)])
            if cand[1] < radii[i] * (1.0 + margin):
                return None
            centers.append(cand)
        prev = centers[-1]
        reach = (radii[-2] + radii[-1]) ** 2 - (prev[1] - radii[-1]) ** 2
        if reach <= 0.0:
            return None
        x_last = prev[0] + math.sqrt(reach)
        centers.append(np.array([x_last, radii[-1]]))
        try:
            return DiskChain(np.vstack(centers), radii, HALF_PLANE)
        except ValidationError:
            return None
    # sector: wrap nearly circularly around the apex, from the x-axis ray to the
    # pi/3 ray; the polar radius must roughly match chain length * 3 / pi for
    # the last disk to land tangent on the second ray
    chain_arc = 2.0 * float(radii.sum()) - radii[0] - radii[-1]
    start_x = max(chain_arc * rng.uniform(0.9, 1.4), 1.02 * SQRT3 * radii[0])
    centers = [np.array([start_x, radii[0]])]
    normals = _sector_inward_normals()
    for i in range(1, m - 1):
        polar = math.atan2(centers[-1][1], centers[-1][0])
        heading = polar + math.pi / 2.0 + rng.uniform(0.0, 0.1)
        step = radii[i - 1] + radii[i]
        cand = centers[-1] + step * np.array([math.cos(heading), math.sin(heading)])
        if (cand @ normals.T < radii[i] * (1.0 + margin)).any():
            return None
        centers.append(cand)
    n2 = normals[1]
    d2 = np.array([math.cos(SECTOR_OPENING), math.sin(SECTOR_OPENING)])
    prev = centers[-1]
    base = radii[-1] * n2
    # solve |base + t d2 - prev| = radii[-2] + radii[-1]
    b = float(d2 @ (base - prev))
    c0 = float((base - prev) @ (base - prev)) - (radii[-2] + radii[-1]) ** 2
    disc = b * b - c0
    if disc <= 0.0:
        return None
    for t in (-b + math.sqrt(disc), -b - math.sqrt(disc)):
        cand = base + t * d2
        if cand[1] < radii[-1] * (1.0 - 1e-9):
            continue
        try:
            return DiskChain(np.vstack(centers + [cand]), radii, SECTOR)
        except ValidationError:
            continue
    return None


def random_chain(flavor: str, m: int, seed, r_range=(0.6, 1.5)) -> DiskChain:
    """Deterministic random chain satisfying the lemma hypotheses (rejection sampling)."""
    if flavor not in FLAVORS:
        raise ValidationError(f"unknown chain flavor {flavor!r}")
    if m < 3:
        raise ValidationError(f"need at least 3 disks, got {m}")
    rng = np.random.default_rng(seed)
    r_lo, r_hi = r_range
    for _ in range(_ATTEMPTS):
        chain = _try_chain(rng, flavor, m, r_lo, r_hi)
        if chain is not None and not chain.warnings:
            return chain
    raise GenerationError(f"no valid {flavor} chain with m = {m} after {_ATTEMPTS} attempts")


def run_chain_sweep(flavor: str, count: int, seed: int, m_values=(3, 4, 5, 6),
                    mc_samples: int = 200_000):
    """Generate ``count`` chains and check the area bound on each.

    Returns (records, violations): one record per chain with the bound report.
    Budgets are configuration values so CI can scale the sweep down.
    """
    records = []
    violations = []
    for i in range(count):
        m = m_values[i % len(m_values)]
        chain = random_chain(flavor, m, seed=[seed, i])
        rep = verify_chain_bound(chain, mc_samples=mc_samples)
        rec = {
            "index": i,
            "flavor": flavor,
            "m": m,
            "area": rep.area,
            "bound": rep.bound,
            "holds": rep.holds,
            "method": rep.method,
        }
        records.append(rec)
        if not rep.holds:
            violations.append(rec)
    return records, violations


# ---------------------------------------------------------------------------
# JSON encoding.

def chain_to_dict(ch: DiskChain) -> dict:
    if ch.flavor == CLOSED:
        lines = []
    elif ch.flavor == HALF_PLANE:
        lines = [{"origin": [0.0, 0.0], "angle": 0.0}]
    else:
        lines = [
            {"origin": [0.0, 0.0], "angle": 0.0},
            {"origin": [0.0, 0.0], "angle": SECTOR_OPENING},
        ]
    return {
        "flavor": ch.flavor,
        "centers": [[float(x), float(y)] for x, y in ch.centers],
        "radii": [float(r) for r in ch.radii],
        "lines": lines,
    }


def chain_from_dict(d: dict) -> DiskChain:
    try:
        return DiskChain(
            np.asarray(d["centers"], dtype=float),
            np.asarray(d["radii"], dtype=float),
            d["flavor"],
        )
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed chain object: {exc}") from exc

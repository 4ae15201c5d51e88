"""Exact-as-possible kernel for closed oriented curves made of circular arcs and segments.

Curves are stored as ordered edge lists.  Every metric quantity (length, signed
area, winding number, inner offset) is evaluated edge-exactly from closed
forms; nothing here ever approximates an arc by a polyline.  Signed/oriented
area is the Gauss-Green line integral ``integral x dy``, which for curves with
self intersections equals the winding-index-weighted area of the enclosed
components, so no arrangement computation is needed.

Angle convention for arcs: ``(start_angle, end_angle, turning)`` with
``turning = +1`` for counterclockwise traversal and ``-1`` for clockwise.  The
opening angle is reduced to ``(0, 2*pi]``, so a full circle is representable
(equal start and end angles).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    ContractViolation,
    DegenerateOffsetError,
    OnBoundaryError,
    ValidationError,
)

TWO_PI = 2.0 * math.pi

# Role labels for offset_inner / class-A machinery.
FREE = "free"
INNER_JUNCTION = "inner_junction"
BORDER_PIECE = "border_junction_piece"
ROLES = (FREE, INNER_JUNCTION, BORDER_PIECE)

# Endpoint-coincidence tolerance, absolute in the curve's own length scale.
CHAIN_TOL = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValidationError(f"non-finite point ({self.x}, {self.y})")

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    def __post_init__(self):
        if self.start.distance_to(self.end) == 0.0:
            raise ValidationError("zero-length segment")

    @property
    def length(self) -> float:
        return self.start.distance_to(self.end)

    def point_at(self, t: float) -> Point:
        return Point(
            self.start.x + t * (self.end.x - self.start.x),
            self.start.y + t * (self.end.y - self.start.y),
        )

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)


@dataclass(frozen=True)
class Arc:
    center: Point
    radius: float
    start_angle: float
    end_angle: float
    turning: int  # +1 counterclockwise, -1 clockwise

    def __post_init__(self):
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValidationError(f"arc radius must be positive, got {self.radius}")
        if self.turning not in (1, -1):
            raise ValidationError(f"arc turning must be +1 or -1, got {self.turning}")
        if not (math.isfinite(self.start_angle) and math.isfinite(self.end_angle)):
            raise ValidationError("non-finite arc angle")

    @property
    def sweep(self) -> float:
        """Opening angle in (0, 2*pi]; equal endpoint angles mean a full circle."""
        s = (self.turning * (self.end_angle - self.start_angle)) % TWO_PI
        return TWO_PI if s == 0.0 else s

    @property
    def signed_sweep(self) -> float:
        return self.turning * self.sweep

    @property
    def length(self) -> float:
        return self.radius * self.sweep

    def angle_at(self, t: float) -> float:
        return self.start_angle + self.signed_sweep * t

    def point_at(self, t: float) -> Point:
        a = self.angle_at(t)
        return Point(
            self.center.x + self.radius * math.cos(a),
            self.center.y + self.radius * math.sin(a),
        )

    @property
    def start(self) -> Point:
        return self.point_at(0.0)

    @property
    def end(self) -> Point:
        return self.point_at(1.0)

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius, self.end_angle, self.start_angle, -self.turning)


Edge = Union[Arc, Segment]


def edge_start(e: Edge) -> Point:
    return e.start


def edge_end(e: Edge) -> Point:
    return e.end


def edge_length(e: Edge) -> float:
    return e.length


@dataclass(frozen=True)
class ArcCurve:
    """Oriented chain of arcs and segments; consecutive endpoints must coincide."""

    edges: tuple
    closed: bool = True

    def __post_init__(self):
        edges = tuple(self.edges)
        object.__setattr__(self, "edges", edges)
        if not edges:
            raise ValidationError("curve needs at least one edge")
        tol = self.tolerance
        for i in range(len(edges) - 1):
            gap = edge_end(edges[i]).distance_to(edge_start(edges[i + 1]))
            if gap > tol:
                raise ValidationError(
                    f"gap {gap:.3e} between edges {i} and {i + 1} exceeds tolerance {tol:.3e}"
                )
        if self.closed:
            gap = edge_end(edges[-1]).distance_to(edge_start(edges[0]))
            if gap > tol:
                raise ValidationError(
                    f"closed curve does not close: terminal gap {gap:.3e} > {tol:.3e}"
                )

    @property
    def scale(self) -> float:
        m = 0.0
        for e in self.edges:
            if isinstance(e, Arc):
                m = max(m, abs(e.center.x) + e.radius, abs(e.center.y) + e.radius)
            else:
                m = max(m, abs(e.start.x), abs(e.start.y), abs(e.end.x), abs(e.end.y))
        return max(1.0, m)

    @property
    def tolerance(self) -> float:
        return CHAIN_TOL * self.scale

    def vertices(self):
        """Start point of every edge (plus the terminal point if the curve is open)."""
        pts = [edge_start(e) for e in self.edges]
        if not self.closed:
            pts.append(edge_end(self.edges[-1]))
        return pts

    def reversed(self) -> "ArcCurve":
        return ArcCurve(tuple(e.reversed() for e in reversed(self.edges)), self.closed)


def curve_length(c: ArcCurve) -> float:
    """Total length: radius*opening for arcs, Euclidean length for segments."""
    return sum(edge_length(e) for e in c.edges)


def _edge_area_integral(e: Edge) -> float:
    # Closed form of integral x dy along the edge.
    if isinstance(e, Segment):
        return 0.5 * (e.start.x + e.end.x) * (e.end.y - e.start.y)
    t0 = e.start_angle
    t1 = t0 + e.signed_sweep
    first = e.center.x * e.radius * (math.sin(t1) - math.sin(t0))
    second = e.radius * e.radius * (
        0.5 * (t1 - t0) + 0.25 * (math.sin(2.0 * t1) - math.sin(2.0 * t0))
    )
    return first + second


def signed_area(c: ArcCurve) -> float:
    """Gauss-Green area ``integral x dy``; positive for counterclockwise Jordan curves."""
    if not c.closed:
        raise ContractViolation("signed_area requires a closed curve")
    return sum(_edge_area_integral(e) for e in c.edges)


def oriented_area(c: ArcCurve) -> float:
    """Winding-index-weighted area enclosed by a (possibly self-intersecting) closed curve.

    Equals the Gauss-Green integral, so it is computed the same way as
    ``signed_area``; the identity is what makes self intersections harmless.
    """
    return signed_area(c)


def _distance_to_edge(q: Point, e: Edge) -> float:
    if isinstance(e, Segment):
        vx, vy = e.end.x - e.start.x, e.end.y - e.start.y
        wx, wy = q.x - e.start.x, q.y - e.start.y
        t = (vx * wx + vy * wy) / (vx * vx + vy * vy)
        t = min(1.0, max(0.0, t))
        return math.hypot(wx - t * vx, wy - t * vy)
    rho = q.distance_to(e.center)
    if rho == 0.0:
        return e.radius
    ang = math.atan2(q.y - e.center.y, q.x - e.center.x)
    rel = (e.turning * (ang - e.start_angle)) % TWO_PI
    if rel <= e.sweep:
        return abs(rho - e.radius)
    return min(q.distance_to(e.start), q.distance_to(e.end))


def distance_to_curve(q: Point, c: ArcCurve) -> float:
    return min(_distance_to_edge(q, e) for e in c.edges)


def _turn(q: Point, a: Point, b: Point) -> float:
    # Signed angle of (b - q) relative to (a - q), in (-pi, pi].
    v0x, v0y = a.x - q.x, a.y - q.y
    v1x, v1y = b.x - q.x, b.y - q.y
    return math.atan2(v0x * v1y - v0y * v1x, v0x * v1x + v0y * v1y)


def winding_number(c: ArcCurve, q: Point) -> int:
    """Total turning of the closed curve around q, divided by 2*pi (an exact integer).

    Arcs seen from inside their supporting disk can subtend more than pi, so
    they are walked in steps short enough (relative to the distance from q)
    that each step's turn stays below pi and the branch of atan2 is exact.
    """
    if not c.closed:
        raise ContractViolation("winding_number requires a closed curve")
    d = distance_to_curve(q, c)
    if d <= c.tolerance:
        raise OnBoundaryError(f"query point is on the curve (distance {d:.3e})")
    total = 0.0
    for e in c.edges:
        if isinstance(e, Segment):
            total += _turn(q, e.start, e.end)
            continue
        if q.distance_to(e.center) > e.radius:
            # All directions toward the arc fit in an open half-plane.
            total += _turn(q, e.start, e.end)
            continue
        steps = max(1, math.ceil(e.length / _distance_to_edge(q, e)))
        prev = e.start
        for s in range(1, steps + 1):
            cur = e.point_at(s / steps)
            total += _turn(q, prev, cur)
            prev = cur
    m = total / TWO_PI
    n = round(m)
    if abs(m - n) > 0.25:
        raise ValidationError(f"winding number did not converge to an integer: {m}")
    return int(n)


def _segment_inner_normal(s: Segment):
    # Interior of a CCW boundary lies to the left of the travel direction.
    dx, dy = s.end.x - s.start.x, s.end.y - s.start.y
    n = math.hypot(dx, dy)
    return -dy / n, dx / n


@dataclass(frozen=True)
class OffsetResult:
    """Inner-parallel curve plus bookkeeping for edges that degenerated to points.

    ``collapsed_indices`` lists the free arcs that collapsed; ``collapse_points``
    maps every collapsed edge index (free arcs and radius-r border corner arcs)
    to its collapse point, in traversal order.
    """

    curve: ArcCurve
    collapsed_indices: tuple
    collapse_points: tuple  # ((edge_index, Point), ...)


def offset_inner(c: ArcCurve, r: float, roles: Sequence[str]) -> OffsetResult:
    """Inner parallel curve at distance r of a labeled class-A style boundary.

    Radius-r arcs (role ``free`` or border corner pieces) collapse to their
    centers; negatively curved arcs widen to radius rho + r, positively curved
    junction arcs shrink to rho - r, and segments translate along the inner
    normal.  The output closes through the collapse points.
    """
    if not c.closed:
        raise ContractViolation("offset_inner requires a closed curve")
    if r <= 0.0:
        raise ContractViolation(f"offset distance must be positive, got {r}")
    if len(roles) != len(c.edges):
        raise ContractViolation(
            f"{len(roles)} roles supplied for {len(c.edges)} edges"
        )
    for role in roles:
        if role not in ROLES:
            raise ContractViolation(f"unknown edge role {role!r}")

    radius_tol = 1e-6 * r
    new_edges = []
    collapsed = []
    collapse_points = []
    for i, (e, role) in enumerate(zip(c.edges, roles)):
        if isinstance(e, Arc):
            if role == FREE or (role == BORDER_PIECE and abs(e.radius - r) <= radius_tol):
                if abs(e.radius - r) > radius_tol or e.turning != 1:
                    raise ContractViolation(
                        f"edge {i}: role {role!r} requires a CCW arc of radius {r}, "
                        f"got radius {e.radius} turning {e.turning}"
                    )
                collapse_points.append((i, e.center))
                if role == FREE:
                    collapsed.append(i)
                continue
            if role == BORDER_PIECE:
                raise ValidationError(
                    f"edge {i}: border junction arcs must have curvature 1/r, "
                    f"got radius {e.radius}"
                )
            if e.turning == -1:
                new_edges.append(Arc(e.center, e.radius + r, e.start_angle, e.end_angle, -1))
            else:
                if e.radius <= r * (1.0 + 1e-12):
                    raise DegenerateOffsetError(
                        f"edge {i}: positive-curvature arc of radius {e.radius} "
                        f"cannot be offset inward by {r}"
                    )
                new_edges.append(Arc(e.center, e.radius - r, e.start_angle, e.end_angle, 1))
        else:
            nx, ny = _segment_inner_normal(e)
            new_edges.append(
                Segment(
                    Point(e.start.x + r * nx, e.start.y + r * ny),
                    Point(e.end.x + r * nx, e.end.y + r * ny),
                )
            )
    if not new_edges:
        raise DegenerateOffsetError("every edge collapsed; offset curve is empty")
    curve = ArcCurve(tuple(new_edges), closed=True)
    return OffsetResult(curve, tuple(collapsed), tuple(collapse_points))


# ---------------------------------------------------------------------------
# Rigid motions and dilations (used by tests and cluster assembly).

def _map_point(p: Point, cos_a, sin_a, dx, dy, lam):
    return Point(
        lam * (cos_a * p.x - sin_a * p.y) + dx,
        lam * (sin_a * p.x + cos_a * p.y) + dy,
    )


def transform_curve(c: ArcCurve, angle: float = 0.0, dx: float = 0.0,
                    dy: float = 0.0, scale: float = 1.0) -> ArcCurve:
    """Apply rotation by ``angle``, dilation by ``scale`` and then translation."""
    if scale <= 0.0:
        raise ValidationError("scale must be positive")
    ca, sa = math.cos(angle), math.sin(angle)
    out = []
    for e in c.edges:
        if isinstance(e, Arc):
            out.append(
                Arc(
                    _map_point(e.center, ca, sa, dx, dy, scale),
                    e.radius * scale,
                    e.start_angle + angle,
                    e.end_angle + angle,
                    e.turning,
                )
            )
        else:
            out.append(
                Segment(
                    _map_point(e.start, ca, sa, dx, dy, scale),
                    _map_point(e.end, ca, sa, dx, dy, scale),
                )
            )
    return ArcCurve(tuple(out), c.closed)


# ---------------------------------------------------------------------------
# Edge splitting (node placement needs curves cut at arbitrary on-curve points).

def locate_on_edge(q: Point, e: Edge, tol: float):
    """Parameter t in [0, 1] of q on the edge, or None if q is farther than tol."""
    if isinstance(e, Segment):
        vx, vy = e.end.x - e.start.x, e.end.y - e.start.y
        wx, wy = q.x - e.start.x, q.y - e.start.y
        t = (vx * wx + vy * wy) / (vx * vx + vy * vy)
        t = min(1.0, max(0.0, t))
        if q.distance_to(e.point_at(t)) <= tol:
            return t
        return None
    ang = math.atan2(q.y - e.center.y, q.x - e.center.x)
    rel = (e.turning * (ang - e.start_angle)) % TWO_PI
    if rel > e.sweep:
        rel = 0.0 if TWO_PI - rel < rel - e.sweep else e.sweep
    t = rel / e.sweep
    if q.distance_to(e.point_at(t)) <= tol:
        return t
    return None


def split_edge(e: Edge, t: float):
    """Cut an edge at interior parameter t, returning the two halves."""
    if not 0.0 < t < 1.0:
        raise ContractViolation(f"split parameter must be interior, got {t}")
    if isinstance(e, Segment):
        mid = e.point_at(t)
        return Segment(e.start, mid), Segment(mid, e.end)
    cut = e.angle_at(t)
    return (
        Arc(e.center, e.radius, e.start_angle, cut, e.turning),
        Arc(e.center, e.radius, cut, e.end_angle, e.turning),
    )


# ---------------------------------------------------------------------------
# JSON encoding: {"closed": bool, "edges": [{"kind": "arc", ...} | {"kind": "seg", ...}]}

def edge_to_dict(e: Edge) -> dict:
    if isinstance(e, Arc):
        return {
            "kind": "arc",
            "cx": e.center.x,
            "cy": e.center.y,
            "r": e.radius,
            "a0": e.start_angle,
            "a1": e.end_angle,
            "turn": e.turning,
        }
    return {
        "kind": "seg",
        "x0": e.start.x,
        "y0": e.start.y,
        "x1": e.end.x,
        "y1": e.end.y,
    }


def edge_from_dict(d: dict) -> Edge:
    kind = d.get("kind")
    if kind == "arc":
        return Arc(Point(d["cx"], d["cy"]), d["r"], d["a0"], d["a1"], int(d["turn"]))
    if kind == "seg":
        return Segment(Point(d["x0"], d["y0"]), Point(d["x1"], d["y1"]))
    raise ValidationError(f"unknown edge kind {kind!r}")


def curve_to_dict(c: ArcCurve) -> dict:
    return {"closed": c.closed, "edges": [edge_to_dict(e) for e in c.edges]}


def curve_from_dict(d: dict) -> ArcCurve:
    try:
        edges = tuple(edge_from_dict(e) for e in d["edges"])
        return ArcCurve(edges, bool(d["closed"]))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed curve object: {exc}") from exc


# ---------------------------------------------------------------------------
# Convenience constructors.

def full_circle(center: Point, radius: float, ccw: bool = True) -> ArcCurve:
    turning = 1 if ccw else -1
    return ArcCurve((Arc(center, radius, 0.0, TWO_PI * turning, turning),), closed=True)

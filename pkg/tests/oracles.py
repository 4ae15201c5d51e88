"""Independent oracles used only by the tests.

These deliberately avoid the closed forms under test: the rasterized winding
oracle computes index-weighted area by exact scanline/curve intersections and
signed crossing counts; the quadrature oracle integrates x dy over a dense
polyline; the polygon Cheeger oracle solves the corner-quadratic directly.
"""

import math

import numpy as np

from cheegerlab.arc_geometry import Arc, ArcCurve, Segment

TWO_PI = 2.0 * math.pi


def _curve_bbox(curve: ArcCurve):
    xs, ys = [], []
    for e in curve.edges:
        if isinstance(e, Arc):
            xs += [e.center.x - e.radius, e.center.x + e.radius]
            ys += [e.center.y - e.radius, e.center.y + e.radius]
        else:
            xs += [e.start.x, e.end.x]
            ys += [e.start.y, e.end.y]
    return min(xs), min(ys), max(xs), max(ys)


def _row_crossings(curve: ArcCurve, y: float):
    """Signed crossings (x, direction) of the curve with the horizontal line."""
    out = []
    for e in curve.edges:
        if isinstance(e, Segment):
            y0, y1 = e.start.y, e.end.y
            if y0 == y1:
                continue
            lo, hi = min(y0, y1), max(y0, y1)
            if not lo < y < hi:
                continue
            t = (y - y0) / (y1 - y0)
            out.append((e.start.x + t * (e.end.x - e.start.x), 1 if y1 > y0 else -1))
        else:
            u = (y - e.center.y) / e.radius
            if not -1.0 < u < 1.0:
                continue
            base = math.asin(u)
            for theta in (base, math.pi - base):
                c = math.cos(theta)
                if c == 0.0:
                    continue
                x = e.center.x + e.radius * c
                sign = 1 if e.turning * c > 0 else -1
                rel = (e.turning * (theta - e.start_angle)) % TWO_PI
                # wrap through every full turn covered by the sweep
                while rel <= e.sweep:
                    if 0.0 < rel < e.sweep:
                        out.append((x, sign))
                    rel += TWO_PI
    return out


def rasterized_winding_area(curve: ArcCurve, n: int = 2048) -> float:
    """Index-weighted area: sum over grid cells of winding number times cell area.

    Scanlines are offset by an irrational fraction so they avoid vertices and
    horizontal tangencies; winding along a row is the running sum of signed
    crossings, evaluated at the column centers.
    """
    x0, y0, x1, y1 = _curve_bbox(curve)
    pad = 1e-6 * max(x1 - x0, y1 - y0)
    x0, y0, x1, y1 = x0 - pad, y0 - pad, x1 + pad, y1 + pad
    dy = (y1 - y0) / n
    dx = (x1 - x0) / n
    cols = x0 + (np.arange(n) + 0.5) * dx
    total = 0.0
    golden = 0.6180339887498949
    for row in range(n):
        y = y0 + (row + golden) * dy
        crossings = _row_crossings(curve, y)
        if not crossings:
            continue
        crossings.sort()
        xs = np.array([c[0] for c in crossings])
        signs = np.array([c[1] for c in crossings])
        prefix = np.concatenate([[0], np.cumsum(signs)])
        # winding at x = sum of upward crossings to the right = -(left prefix)
        winding = -prefix[np.searchsorted(xs, cols, side="right")]
        total += winding.sum() * dx * dy
    return float(total)


def quadrature_curve_area(curve: ArcCurve, samples_per_edge: int = 4096) -> float:
    """Gauss-Green integral of a dense polyline approximation of the curve."""
    total = 0.0
    for e in curve.edges:
        ts = np.linspace(0.0, 1.0, samples_per_edge + 1)
        pts = np.array([[p.x, p.y] for p in (e.point_at(t) for t in ts)])
        x, y = pts[:, 0], pts[:, 1]
        total += float(np.sum(0.5 * (x[1:] + x[:-1]) * (y[1:] - y[:-1])))
    return total


def polygon_cheeger_closed_form(vertices) -> float:
    """Cheeger constant of a convex polygon whose Cheeger set touches all sides.

    Solves (C - pi) r^2 - P r + A = 0 with C the sum of half-angle cotangents;
    valid for regular and near-regular polygons.
    """
    v = np.asarray(vertices, dtype=float)
    n = len(v)
    x, y = v[:, 0], v[:, 1]
    area = 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
    per = float(np.hypot(*(np.roll(v, -1, axis=0) - v).T).sum())
    cot = 0.0
    for i in range(n):
        a = v[i - 1] - v[i]
        b = v[(i + 1) % n] - v[i]
        ang = math.atan2(abs(a[0] * b[1] - a[1] * b[0]), float(a @ b))
        cot += 1.0 / math.tan(ang / 2.0)
    c = cot - math.pi
    r = (per - math.sqrt(per * per - 4.0 * area * c)) / (2.0 * c)
    return 1.0 / r

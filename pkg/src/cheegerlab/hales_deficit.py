"""Node placement on inner Cheeger boundaries and the hexagonal isoperimetric check.

Nodes split the inner curve into portions that are single circular arcs or
segments.  Each portion, closed by its straight chord, encloses a signed area
x_i; the truncated deficit T is the sum of the clamped x_i.  For a curve whose
normalized enclosed area is at least 1, Hales' hexagonal inequality bounds the
normalized length from below by

    -T / (pi r*^2) * 12**(1/4) - (N - 6) * 0.0505 + 2 * 12**(1/4)

with equality for the regular hexagon with its six vertex nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .arc_geometry import (
    ArcCurve,
    OffsetResult,
    Point,
    Segment,
    curve_length,
    locate_on_edge,
    oriented_area,
    signed_area,
    split_edge,
)
from .cheeger import ArcDomain, inner_cheeger_boundary
from .errors import ContractViolation

HEX_UNIT_PERIMETER = 2.0 * 12.0 ** 0.25  # perimeter of the unit-area regular hexagon
NODE_PENALTY = 0.0505


@dataclass(frozen=True)
class NodeSet:
    """Cyclically ordered points on a curve; exceptional nodes come from border corners."""

    nodes: tuple
    exceptional: tuple

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "exceptional", tuple(bool(b) for b in self.exceptional))
        if len(self.nodes) != len(self.exceptional):
            raise ContractViolation("one exceptional flag per node required")
        if not self.nodes:
            raise ContractViolation("node set must contain at least one node")

    def __len__(self):
        return len(self.nodes)


@dataclass(frozen=True)
class DeficitReport:
    """Per-portion chord areas, their clamped sum T, and the Hales sides when evaluated."""

    per_arc_x: tuple
    truncated_T: float
    N: int
    clamp_bound: float
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    satisfied: Optional[bool] = None


def place_nodes(gamma_r, d: ArcDomain) -> NodeSet:
    """Nodes of the inner Cheeger boundary of d.

    One node per collapsed free arc, plus one exceptional node per radius-r
    corner arc inside a multi-segment border junction arc (those corners are
    the points of the inner curve at distance r from the adjacent segment
    endpoints).  ``gamma_r`` may be the OffsetResult or its curve; it must
    match ``inner_cheeger_boundary(d)``.
    """
    off = inner_cheeger_boundary(d)
    supplied = gamma_r.curve if isinstance(gamma_r, OffsetResult) else gamma_r
    if not isinstance(supplied, ArcCurve):
        raise ContractViolation("gamma_r must be an ArcCurve or OffsetResult")
    mine = off.curve
    if len(supplied.edges) != len(mine.edges) or abs(
        curve_length(supplied) - curve_length(mine)
    ) > 1e-6 * max(1.0, curve_length(mine)):
        raise ContractViolation("gamma_r does not match the inner boundary of the domain")
    free = set(off.collapsed_indices)
    nodes = []
    flags = []
    for idx, point in off.collapse_points:
        nodes.append(point)
        flags.append(idx not in free)
    if not nodes:
        raise ContractViolation("domain has no radius-r arcs, so no nodes exist")
    return NodeSet(tuple(nodes), tuple(flags))


def _node_positions(curve: ArcCurve, nodes: Sequence[Point]):
    """(edge index, parameter) of each node, snapped to shared vertices when close."""
    tol = 1e-9 * max(curve_length(curve), curve.scale)
    n_edges = len(curve.edges)
    positions = []
    for k, node in enumerate(nodes):
        best = None
        for i, e in enumerate(curve.edges):
            t = locate_on_edge(node, e, 10.0 * tol)
            if t is None:
                continue
            dist = node.distance_to(e.point_at(t))
            if best is None or dist < best[0]:
                best = (dist, i, t)
        if best is None or best[0] > tol:
            worst = best[0] if best else math.inf
            raise ContractViolation(f"node {k} is not on the curve (best distance {worst:.3e})")
        _, i, t = best
        if node.distance_to(curve.edges[i].point_at(0.0)) <= tol:
            positions.append((i, 0.0))
        elif node.distance_to(curve.edges[i].point_at(1.0)) <= tol:
            positions.append(((i + 1) % n_edges, 0.0))
        else:
            positions.append((i, t))
    return positions


def _split_at_nodes(curve: ArcCurve, positions):
    """Edge list with every node at an edge-start vertex; returns (edges, node_at_start)."""
    by_edge = {}
    for k, (i, t) in enumerate(positions):
        by_edge.setdefault(i, []).append((t, k))
    edges = []
    starts = []
    for i, e in enumerate(curve.edges):
        events = sorted(by_edge.get(i, []))
        head = None
        interior = []
        for t, k in events:
            if t == 0.0:
                if head is not None:
                    raise ContractViolation("two nodes coincide on the curve")
                head = k
            else:
                interior.append((t, k))
        pieces = [(e, head)]
        done = 0.0
        for t, k in interior:
            cur, label = pieces.pop()
            local = (t - done) / (1.0 - done)
            first, second = split_edge(cur, local)
            pieces.append((first, label))
            pieces.append((second, k))
            done = t
        for piece, label in pieces:
            edges.append(piece)
            starts.append(label)
    return edges, starts


def chord_deficits(gamma_r: ArcCurve, nodes: NodeSet, clamp_bound: Optional[float] = None) -> DeficitReport:
    """Signed chord areas of the portions of gamma_r between consecutive nodes.

    Portion i runs from node i-1 to node i and is closed by the straight chord
    back; its Gauss-Green area is x_i.  T sums the x_i clamped to
    [-clamp_bound, clamp_bound]; the default bound is the curve's oriented
    area (pi r^2 for inner Cheeger boundaries), matching the normalized Hales
    truncation.  A single node yields one portion closed without a chord.
    """
    if not gamma_r.closed:
        raise ContractViolation("chord_deficits requires a closed curve")
    positions = _node_positions(gamma_r, nodes.nodes)
    edges, starts = _split_at_nodes(gamma_r, positions)
    order = [k for k in starts if k is not None]
    n = len(nodes)
    if len(order) != n:
        raise ContractViolation("node splitting lost a node")
    shift = order.index(0)
    if [order[(shift + j) % n] for j in range(n)] != list(range(n)):
        raise ContractViolation("nodes are not in cyclic order along the curve")

    first = next(i for i, k in enumerate(starts) if k is not None)
    ring = edges[first:] + edges[:first]
    labels = starts[first:] + starts[:first]
    portions = []
    current = []
    for e, k in zip(ring, labels):
        if k is not None and current:
            portions.append(current)
            current = []
        current.append(e)
    portions.append(current)

    if clamp_bound is None:
        clamp_bound = abs(oriented_area(gamma_r))
    tol = 1e-9 * max(curve_length(gamma_r), gamma_r.scale)
    xs = []
    for portion in portions:
        a = portion[0].start
        b = portion[-1].end
        pieces = list(portion)
        if b.distance_to(a) > tol:
            pieces.append(Segment(b, a))
        xs.append(signed_area(ArcCurve(tuple(pieces), closed=True)))
    # portion j of the walk ends at walk node j+1; x_i is indexed by the node
    # the portion ends at, so rotate back to the node numbering
    rot = (labels[0] + 1) % n
    if rot:
        xs = xs[-rot:] + xs[:-rot]
    t = sum(min(clamp_bound, max(-clamp_bound, x)) for x in xs)
    return DeficitReport(tuple(xs), t, n, clamp_bound)


def hales_check(
    gamma_r: ArcCurve,
    nodes: NodeSet,
    r_star: float,
    clamp_mode: str = "scaled",
) -> DeficitReport:
    """Evaluate the hexagonal isoperimetric inequality for the curve and node family.

    ``clamp_mode="scaled"`` truncates the chord areas at pi*r_star**2 (unit
    truncation after normalization); ``"literal"`` truncates the raw areas at
    1.  The enclosed area must be at least pi*r_star**2 for the inequality to
    apply.
    """
    if r_star <= 0.0:
        raise ContractViolation(f"r_star must be positive, got {r_star}")
    if clamp_mode not in ("scaled", "literal"):
        raise ContractViolation(f"unknown clamp mode {clamp_mode!r}")
    norm = math.pi * r_star * r_star
    area = oriented_area(gamma_r)
    if area < norm * (1.0 - 1e-9):
        raise ContractViolation(
            f"enclosed area {area:.6g} is below pi*r_star^2 = {norm:.6g}; "
            "the hexagonal inequality does not apply"
        )
    clamp = norm if clamp_mode == "scaled" else 1.0
    report = chord_deficits(gamma_r, nodes, clamp_bound=clamp)
    lhs = curve_length(gamma_r) / math.sqrt(norm)
    rhs = (
        -report.truncated_T / norm * 12.0 ** 0.25
        - (report.N - 6) * NODE_PENALTY
        + HEX_UNIT_PERIMETER
    )
    return replace(report, lhs=lhs, rhs=rhs, satisfied=bool(lhs >= rhs - 1e-12))


def deficit_report_to_dict(rep: DeficitReport) -> dict:
    return {
        "per_arc_x": list(rep.per_arc_x),
        "truncated_T": rep.truncated_T,
        "N": rep.N,
        "clamp_bound": rep.clamp_bound,
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "satisfied": rep.satisfied,
    }

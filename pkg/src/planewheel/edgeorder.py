"""Order machinery on wheel edges: classification, far sides, the closer-than
partial order, spans and apexes, opposite groups, special wedges, and the
forced-edge distance template.

Everything here is computed from the combinatorial model; coordinates are only
used in tests to validate these rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .wheelgeom import EdgeId, WheelModel, edge, is_bumpy

RADIAL = "radial"
BOUNDARY = "boundary"
DIAGONAL = "diagonal"


@dataclass(frozen=True)
class EdgeClass:
    kind: str
    far_arc: tuple[int, ...]  # empty for radial and boundary edges
    dist: Optional[int]  # None for radial edges


@dataclass(frozen=True)
class Span:
    left_edge: EdgeId
    right_edge: EdgeId
    vertices: frozenset[int]
    edges: frozenset[EdgeId]
    apex: Optional[frozenset[int]]


def classify_edge(model: WheelModel, e: EdgeId) -> EdgeClass:
    if e[0] == 0:
        return EdgeClass(kind=RADIAL, far_arc=(), dist=None)
    arc = tuple(model.far_arc(e))
    kind = BOUNDARY if not arc else DIAGONAL
    return EdgeClass(kind=kind, far_arc=arc, dist=len(arc) + 1)


def far_side_vertices(model: WheelModel, e: EdgeId) -> set[int]:
    if e[0] == 0:
        raise ValueError("radial edges have no far side")
    return set(model.far_arc(e))


def dist(model: WheelModel, e: EdgeId) -> int:
    if e[0] == 0:
        raise ValueError("dist undefined for radial edges")
    return len(model.far_arc(e)) + 1


def d_value(k: int, ell: int, i: int) -> int:
    """d_i, the i-th largest diagonal distance of BW_{k,l}."""
    top = (k + 1) // 2 * ell - 1
    if not 1 <= i <= top:
        raise ValueError(f"index i out of range 1..{top}: {i}")
    return (k + 1) // 2 * ell - i


def arc_endpoints(model: WheelModel, e: EdgeId) -> tuple[int, int]:
    """Endpoints of a non-radial edge ordered so the far arc runs clockwise
    from the first to the second."""
    a, b = e
    if a == 0:
        raise ValueError("radial edge")
    ga, gb = model.group_of(a), model.group_of(b)
    if ga == gb or (gb - ga) % model.k <= (model.k - 1) // 2:
        return a, b
    return b, a


def closer_than(model: WheelModel, e: EdgeId, f: EdgeId) -> bool:
    """e <_c f: the segment e lies in the closed far side of f.  Each endpoint
    of e is either strictly inside f's far arc or coincides with an endpoint
    of f (the closed halfplane is convex)."""
    if e[0] == 0 or f[0] == 0:
        raise ValueError("closer-than is defined for non-radial edges only")
    if e == f:
        return False
    closed = far_side_vertices(model, f) | set(f)
    return e[0] in closed and e[1] in closed


def maximal_edges(model: WheelModel, edges: Iterable[EdgeId]) -> set[EdgeId]:
    es = list(edges)
    return {e for e in es if not any(closer_than(model, e, f) for f in es if f != e)}


def span(model: WheelModel, e: EdgeId, f: EdgeId) -> Span:
    """Closed region between two non-crossing non-radial edges.

    Comparable pair (e <_c f or f <_c e): the strip between them, cl(e+ ∩ f-).
    Incomparable: the region containing v_0, cl(e+ ∩ f+).  Vertices follow
    from arc arithmetic; the edge set is every edge inside by convexity.
    """
    from .wheelgeom import combinatorial_cross

    if e[0] == 0 or f[0] == 0:
        raise ValueError("span is defined for non-radial edges only")
    if e == f:
        raise ValueError("span needs two distinct edges")
    if combinatorial_cross(model, e, f):
        raise ValueError("span undefined for crossing edges")

    hull = set(range(1, model.hull_count + 1))
    arc_e = far_side_vertices(model, e)
    arc_f = far_side_vertices(model, f)
    apex: Optional[frozenset[int]] = None
    if closer_than(model, e, f):
        verts = (arc_f | set(f)) - arc_e
    elif closer_than(model, f, e):
        verts = (arc_e | set(e)) - arc_f
    else:
        verts = (hull - arc_e - arc_f) | {0}
        shared = {model.group_of(e[0]), model.group_of(e[1])} & {
            model.group_of(f[0]),
            model.group_of(f[1]),
        }
        if shared:
            apex = frozenset(v for v in verts if v != 0 and model.group_of(v) in shared)
    vs = sorted(verts)
    es = frozenset(edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :])
    return Span(left_edge=e, right_edge=f, vertices=frozenset(verts), edges=es, apex=apex)


def opposite_group_pairs(model: WheelModel) -> list[tuple[int, int]]:
    k = model.k
    half = (k - 1) // 2
    out = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            if (j - i) % k in (half, half + 1):
                out.append((i, j))
    return out


class VertexRoles:
    """Outmost (first/last of each group), inside, and center vertices."""

    def __init__(self, model: WheelModel):
        self.outmost: set[int] = set()
        self.inside: set[int] = set()
        self.centers: dict[int, int] = {}
        for g in range(1, model.k + 1):
            vs = list(model.group_vertices(g))
            self.outmost.add(vs[0])
            self.outmost.add(vs[-1])
            self.inside.update(vs[1:-1])
            if len(vs) % 2 == 1:
                self.centers[g] = vs[len(vs) // 2]


def outmost_vertices(model: WheelModel) -> VertexRoles:
    return VertexRoles(model)


def is_special_wedge(model: WheelModel, e: EdgeId, f: EdgeId) -> Optional[frozenset[int]]:
    """Some(apex) iff e and f are non-crossing diagonals where one endpoint of
    each forms a consecutive outmost pair (last of group j, first of group
    j+1) and the remaining endpoints are inside vertices of the group opposite
    that pair."""
    from .wheelgeom import combinatorial_cross

    ce, cf = classify_edge(model, e), classify_edge(model, f)
    if ce.kind != DIAGONAL or cf.kind != DIAGONAL:
        return None
    if combinatorial_cross(model, e, f) or e == f:
        return None
    roles = outmost_vertices(model)
    k = model.k
    for a in e:
        for b in f:
            if a not in roles.outmost or b not in roles.outmost:
                continue
            # a, b consecutive on the hull, in adjacent groups
            if model.hull_succ(a) == b and model.group_of(a) != model.group_of(b):
                j = model.group_of(a)
            elif model.hull_succ(b) == a and model.group_of(a) != model.group_of(b):
                j = model.group_of(b)
            else:
                continue
            opp = (j + (k + 1) // 2 - 1) % k + 1
            a2 = e[0] if e[1] == a else e[1]
            b2 = f[0] if f[1] == b else f[1]
            if a2 in roles.inside and b2 in roles.inside and model.group_of(a2) == opp and model.group_of(b2) == opp:
                return span(model, e, f).apex
    return None


def edges_of_distance(model: WheelModel, d: int) -> list[EdgeId]:
    """All non-radial edges of distance d, in clockwise circular order keyed
    by the far-arc start vertex (ties by end vertex)."""
    h = model.hull_count
    maxd = max(
        len(model.far_arc(edge(a, b))) + 1 for a in range(1, h + 1) for b in range(a + 1, h + 1)
    )
    if not 1 <= d <= maxd:
        raise ValueError(f"distance out of range 1..{maxd}: {d}")
    out = []
    for a in range(1, h + 1):
        for b in range(a + 1, h + 1):
            e = (a, b)
            if len(model.far_arc(e)) + 1 == d:
                s, t = arc_endpoints(model, e)
                out.append((s, t, e))
    out.sort(key=lambda x: (x[0], x[1]))
    return [e for _, _, e in out]


def distance_children(model: WheelModel, e: EdgeId) -> tuple[EdgeId, EdgeId]:
    """The two distance-(d-1) edges inside e's far region sharing an endpoint
    with e: one keeps the arc start, the other keeps the arc end."""
    d = dist(model, e)
    if d < 2:
        raise ValueError("boundary edges have no children")
    s, t = arc_endpoints(model, e)
    h = model.hull_count
    left = edge(s, (t - 2) % h + 1)  # shrink at the arc end
    right = edge(s % h + 1, t)  # shrink at the arc start
    return left, right


def forced_edge_template(model: WheelModel) -> dict[tuple[int, int], list[int]]:
    """Per opposite pair, the required minimum distances d_1..d_l of the
    forced diagonal slots.  Bumpy wheels only."""
    if not is_bumpy(model):
        raise ValueError("forced-edge template is defined for bumpy wheels only")
    ell = model.sizes[0]
    k = model.k
    slots = [d_value(k, ell, i) for i in range(1, ell + 1)]
    return {pair: list(slots) for pair in opposite_group_pairs(model)}

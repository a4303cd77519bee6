"""Wheel point sets: combinatorial models, exact coordinates, crossing predicates.

Vertex convention: the center vertex is 0, the hull vertices are 1..2n-1 in
clockwise order.  Groups are numbered 1..k in clockwise order; group 1 starts
at vertex 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

Point = tuple[Fraction, Fraction]
EdgeId = tuple[int, int]

CLOCKWISE = -1
COUNTERCLOCKWISE = 1
COLLINEAR = 0


def edge(a: int, b: int) -> EdgeId:
    """Normalized unordered vertex pair."""
    if a == b:
        raise ValueError(f"degenerate edge ({a},{a})")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class WheelModel:
    """Combinatorial description of a generalized wheel: k groups of hull
    vertices in clockwise order around a center vertex."""

    k: int
    sizes: tuple[int, ...]
    # group_start[g] = first hull vertex id of group g (1-indexed groups)
    group_start: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.k < 3 or self.k % 2 == 0:
            raise ValueError(f"group count must be odd and >= 3, got {self.k}")
        if len(self.sizes) != self.k:
            raise ValueError("sizes length must equal k")
        if any(s < 1 for s in self.sizes):
            raise ValueError("every group size must be >= 1")
        if sum(self.sizes) % 2 == 0:
            raise ValueError("total hull count must be odd")
        starts = []
        v = 1
        for s in self.sizes:
            starts.append(v)
            v += s
        object.__setattr__(self, "group_start", tuple(starts))

    @property
    def hull_count(self) -> int:
        return sum(self.sizes)

    @property
    def num_points(self) -> int:
        return self.hull_count + 1

    @property
    def n(self) -> int:
        """Number of color classes in the partition question (2n points)."""
        return (self.hull_count + 1) // 2

    def group_of(self, v: int) -> int:
        if not 1 <= v <= self.hull_count:
            raise ValueError(f"not a hull vertex: {v}")
        # sizes are tiny; linear scan is fine
        for g in range(self.k, 0, -1):
            if v >= self.group_start[g - 1]:
                return g
        raise AssertionError

    def group_vertices(self, g: int) -> range:
        g = (g - 1) % self.k + 1
        s = self.group_start[g - 1]
        return range(s, s + self.sizes[g - 1])

    def hull_succ(self, v: int) -> int:
        """Clockwise successor on the hull."""
        return v % self.hull_count + 1

    def edges(self) -> list[EdgeId]:
        """All edges of the complete graph, in lexicographic order."""
        return [(a, b) for a in range(self.num_points) for b in range(a + 1, self.num_points)]

    def is_radial(self, e: EdgeId) -> bool:
        return e[0] == 0

    def far_arc(self, e: EdgeId) -> list[int]:
        """Hull vertices strictly inside the arc on the far side of a
        non-radial edge (the side away from the center vertex).

        Between two groups the far side is the short way around the k-gon;
        within one group it is the in-group arc between the endpoints.
        """
        a, b = e
        if a == 0:
            raise ValueError("far arc undefined for radial edges")
        ga, gb = self.group_of(a), self.group_of(b)
        h = self.hull_count
        if ga == gb:
            return list(range(a + 1, b))
        if (gb - ga) % self.k <= (self.k - 1) // 2:
            start, stop = a, b  # clockwise from a to b
        else:
            start, stop = b, a
        arc = []
        v = start % h + 1
        while v != stop:
            arc.append(v)
            v = v % h + 1
        return arc

    def to_json(self) -> dict:
        return {"k": self.k, "sizes": list(self.sizes)}

    @classmethod
    def from_json(cls, obj: dict) -> "WheelModel":
        return cls(k=int(obj["k"]), sizes=tuple(int(s) for s in obj["sizes"]))


def build_bumpy_wheel(k: int, ell: int) -> WheelModel:
    """Bumpy wheel BW_{k,l}: k groups of l vertices each, k and l odd."""
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be odd and >= 3, got {k}")
    if ell < 1 or ell % 2 == 0:
        raise ValueError(f"l must be odd and >= 1, got {ell}")
    return WheelModel(k=k, sizes=(ell,) * k)


def build_generalized_wheel(sizes) -> WheelModel:
    return WheelModel(k=len(sizes), sizes=tuple(int(s) for s in sizes))


def is_bumpy(model: WheelModel) -> bool:
    return len(set(model.sizes)) == 1


@dataclass(frozen=True)
class PointSet:
    """Exact rational coordinates; interior_index marks the unique interior
    point when known."""

    points: tuple[Point, ...]
    interior_index: int | None = None

    # homogeneous integer coordinates (X, Y, W), W > 0, for fast exact tests
    _homog: tuple[tuple[int, int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        homog = []
        for x, y in self.points:
            w = x.denominator * y.denominator // math.gcd(x.denominator, y.denominator)
            homog.append((x.numerator * (w // x.denominator), y.numerator * (w // y.denominator), w))
        object.__setattr__(self, "_homog", tuple(homog))

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "points": [[f"{x.numerator}/{x.denominator}", f"{y.numerator}/{y.denominator}"] for x, y in self.points],
            "interior": self.interior_index,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PointSet":
        pts = tuple((Fraction(x), Fraction(y)) for x, y in obj["points"])
        return cls(points=pts, interior_index=obj.get("interior"))


def orientation(p: Point, q: Point, r: Point) -> int:
    """Exact sign of the turn p->q->r: COUNTERCLOCKWISE (+1), CLOCKWISE (-1),
    or COLLINEAR (0)."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def _orient_idx(ps: PointSet, i: int, j: int, l: int) -> int:
    """orientation() over homogeneous integer coordinates (faster)."""
    xi, yi, wi = ps._homog[i]
    xj, yj, wj = ps._homog[j]
    xl, yl, wl = ps._homog[l]
    d = (xj * wi - xi * wj) * (yl * wi - yi * wl) - (yj * wi - yi * wj) * (xl * wi - xi * wl)
    return (d > 0) - (d < 0)


def in_general_position(ps: PointSet) -> bool:
    return all(_orient_idx(ps, i, j, l) != 0 for i, j, l in combinations(range(len(ps)), 3))


def segments_cross(e: EdgeId, f: EdgeId, ps: PointSet) -> bool:
    """True iff the open segments share a point (proper crossing).  Segments
    sharing an endpoint never cross.  Assumes general position."""
    a, b = e
    c, d = f
    if len({a, b, c, d}) < 4:
        return False
    return (
        _orient_idx(ps, a, b, c) != _orient_idx(ps, a, b, d)
        and _orient_idx(ps, c, d, a) != _orient_idx(ps, c, d, b)
    )


def combinatorial_cross(model: WheelModel, e: EdgeId, f: EdgeId) -> bool:
    """Crossing predicate from the group structure alone: two non-radial
    edges cross iff their endpoints interleave on the hull; a radial edge
    crosses a non-radial one iff its hull endpoint lies strictly inside the
    far-side arc; radial edges never cross each other."""
    if len({*e, *f}) < 4:
        return False
    if e[0] == 0 and f[0] == 0:
        return False
    if e[0] == 0:
        return e[1] in model.far_arc(f)
    if f[0] == 0:
        return f[1] in model.far_arc(e)
    a, b = e
    c, d = f
    # interleaving in circular order; hull ids are already circularly sorted
    c_in = a < c < b
    d_in = a < d < b
    return c_in != d_in


class CrossingGraph:
    """Symmetric, irreflexive adjacency: which edges properly cross which."""

    def __init__(self, model: WheelModel):
        self.model = model
        self.edges = model.edges()
        self.index = {e: i for i, e in enumerate(self.edges)}
        n_e = len(self.edges)
        adj: list[set[int]] = [set() for _ in range(n_e)]
        h = model.hull_count
        # radial vs non-radial: radial (0,v) crosses e iff v in far arc of e
        for e in self.edges:
            if e[0] != 0:
                i = self.index[e]
                for v in model.far_arc(e):
                    j = self.index[(0, v)]
                    adj[i].add(j)
                    adj[j].add(i)
        # hull-hull: interleaving 4-tuples
        for a, c, b, d in combinations(range(1, h + 1), 4):
            i = self.index[(a, b)]
            j = self.index[(c, d)]
            adj[i].add(j)
            adj[j].add(i)
        self._adj = adj

    def crosses(self, e: EdgeId, f: EdgeId) -> bool:
        return self.index[f] in self._adj[self.index[e]]

    def neighbors(self, e: EdgeId) -> list[EdgeId]:
        return [self.edges[j] for j in sorted(self._adj[self.index[e]])]

    def neighbor_indices(self, i: int) -> set[int]:
        return self._adj[i]

    def degree(self, e: EdgeId) -> int:
        return len(self._adj[self.index[e]])

    def crossing_pairs(self) -> set[tuple[EdgeId, EdgeId]]:
        out = set()
        for i, nbrs in enumerate(self._adj):
            for j in nbrs:
                if i < j:
                    out.add((self.edges[i], self.edges[j]))
        return out


def crossing_graph(model: WheelModel) -> CrossingGraph:
    return CrossingGraph(model)


def geometric_crossing_pairs(ps: PointSet) -> set[tuple[EdgeId, EdgeId]]:
    """All properly crossing edge pairs of the complete graph on ps (exact)."""
    m = len(ps)
    es = [(a, b) for a in range(m) for b in range(a + 1, m)]
    return {(e, f) for e, f in combinations(es, 2) if segments_cross(e, f, ps)}


def _rational_circle_point(angle: float, scale: int) -> Point:
    """Rational point exactly on the unit circle near the given angle, via the
    tangent half-angle parameterization."""
    # normalize into (-pi, pi); group layout keeps angles away from pi
    a = math.remainder(angle, 2 * math.pi)
    t = Fraction(round(math.tan(a / 2) * scale), scale)
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


REALIZE_MAX_HALVINGS = 64


def realize_coordinates(model: WheelModel) -> PointSet:
    """Exact rational realization: center at the origin, group j near angle
    -2*pi*(j-1)/k (clockwise numbering), in-group spread delta halved until the
    realization is in general position, reproduces the combinatorial crossing
    pairs exactly, and no (k+1)/2 consecutive groups see the center inside
    their hull."""
    k = model.k
    delta = math.pi / (4 * k * (max(model.sizes) + 1))
    for _ in range(REALIZE_MAX_HALVINGS):
        pts: list[Point] = [(Fraction(0), Fraction(0))]
        scale = max(10**6, int(1024 / delta))
        for g in range(1, k + 1):
            center = -2 * math.pi * (g - 1) / k
            s = model.sizes[g - 1]
            for r in range(s):
                ang = center - (r - (s - 1) / 2) * delta
                pts.append(_rational_circle_point(ang, scale))
        ps = PointSet(points=tuple(pts), interior_index=0)
        if _realization_ok(model, ps):
            return ps
        delta /= 2
    raise RuntimeError("realization did not stabilize; predicate bug suspected")


def _realization_ok(model: WheelModel, ps: PointSet) -> bool:
    if len(set(ps.points)) != len(ps.points):
        return False
    if not in_general_position(ps):
        return False
    # center excluded from the hull of every (k+1)/2 consecutive groups
    k = model.k
    for start in range(1, k + 1):
        window = []
        for g in range(start, start + (k + 1) // 2):
            window.extend(model.group_vertices(g))
        if _center_in_convex_polygon(ps, window):
            return False
    # combinatorial and geometric crossings must agree on every edge pair
    es = model.edges()
    for e, f in combinations(es, 2):
        if combinatorial_cross(model, e, f) != segments_cross(e, f, ps):
            return False
    return True


def _center_in_convex_polygon(ps: PointSet, hull_ids: list[int]) -> bool:
    """hull_ids are in convex position and circular order; closed test."""
    m = len(hull_ids)
    signs = set()
    for i in range(m):
        signs.add(_orient_idx(ps, hull_ids[i], hull_ids[(i + 1) % m], 0))
    return 0 not in signs and len(signs) == 1


def _point_in_triangle(ps: PointSet, i: int, a: int, b: int, c: int) -> bool:
    s1 = _orient_idx(ps, a, b, i)
    s2 = _orient_idx(ps, b, c, i)
    s3 = _orient_idx(ps, c, a, i)
    return s1 == s2 == s3 and s1 != 0


def hull_and_interior(ps: PointSet) -> tuple[list[int], list[int]]:
    """Indices on the convex hull (clockwise order) and strictly interior."""
    idx = list(range(len(ps)))
    pts = [(ps.points[i][0], ps.points[i][1], i) for i in idx]
    pts.sort()
    # Andrew monotone chain, exact
    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2][:2], out[-1][:2], p[:2]) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(list(reversed(pts)))
    hull = [p[2] for p in lower[:-1]] + [p[2] for p in upper[:-1]]  # ccw
    hull_cw = list(reversed(hull))
    interior = [i for i in idx if i not in set(hull)]
    return hull_cw, interior


def opposite_boundary_edge(ps: PointSet, v: int) -> EdgeId:
    """The unique boundary edge {u,w} with the interior point strictly inside
    the triangle (v, u, w)."""
    hull, interior = hull_and_interior(ps)
    if len(interior) != 1:
        raise ValueError(f"expected exactly one interior point, found {len(interior)}")
    v0 = interior[0]
    if v == v0:
        raise ValueError("v must be a hull vertex")
    m = len(hull)
    for i in range(m):
        u, w = hull[i], hull[(i + 1) % m]
        if v in (u, w):
            continue
        if _point_in_triangle(ps, v0, v, u, w):
            return edge(u, w)
    raise AssertionError("no opposite boundary edge found; input degenerate?")


def canonicalize(ps: PointSet) -> WheelModel:
    """Collapse a one-interior-point set to the generalized wheel with the same
    crossing structure.  Groups are the classes of hull vertices sharing an
    opposite boundary edge, taken in clockwise order."""
    if len(ps) < 4:
        raise ValueError("need at least 4 points")
    if not in_general_position(ps):
        raise ValueError("points not in general position")
    hull, interior = hull_and_interior(ps)
    if len(interior) != 1:
        raise ValueError(f"expected exactly one interior point, found {len(interior)}")

    opp = {v: opposite_boundary_edge(ps, v) for v in hull}
    m = len(hull)
    # group boundaries: positions where the opposite edge changes
    breaks = [i for i in range(m) if opp[hull[i]] != opp[hull[i - 1]]]
    if not breaks:
        raise ValueError("all hull vertices share one opposite edge; degenerate")
    # deterministic start: group boundary whose first vertex has smallest index
    start = min(breaks, key=lambda i: hull[i])
    order = [hull[(start + t) % m] for t in range(m)]
    sizes = []
    cur = 1
    for t in range(1, m):
        if opp[order[t]] == opp[order[t - 1]]:
            cur += 1
        else:
            sizes.append(cur)
            cur = 1
    sizes.append(cur)

    if len(sizes) % 2 == 0:
        raise ValueError("even group count; opposite-edge predicate bug")
    model = WheelModel(k=len(sizes), sizes=tuple(sizes))

    # split property: each vertex's opposite edge leaves equally many groups
    # on both sides
    group_of_point = {}
    g = 1
    cnt = 0
    for v in order:
        group_of_point[v] = g
        cnt += 1
        if cnt == sizes[g - 1]:
            g += 1
            cnt = 0
    kk = model.k
    pos_in_order = {v: t for t, v in enumerate(order)}
    for v in hull:
        u, w = opp[v]
        gu, gw = group_of_point[u], group_of_point[w]
        # clockwise order: earlier hull position comes first within the pair
        if (pos_in_order[w] - pos_in_order[u]) % m != 1:
            gu, gw = gw, gu
        gv = group_of_point[v]
        if (gu - gv) % kk != (gv - gw) % kk:
            raise ValueError("opposite edge does not split groups evenly; predicate bug")

    # crossing structure must be preserved under the order-preserving map
    relabel = {interior[0]: 0}
    for t, v in enumerate(order):
        relabel[v] = t + 1
    geo = {
        (edge(relabel[e[0]], relabel[e[1]]), edge(relabel[f[0]], relabel[f[1]]))
        for e, f in geometric_crossing_pairs(ps)
    }
    geo = {tuple(sorted(p)) for p in geo}
    comb = {tuple(sorted(p)) for p in crossing_graph(model).crossing_pairs()}
    if geo != comb:
        raise ValueError("crossing structure changed under canonicalization; predicate bug")
    return model

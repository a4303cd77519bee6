"""Partitions of the complete geometric graph on a wheel: validation of plane
subgraph / spanning tree / double star modes, structural audits of concrete
partitions, and isomorphism via canonical forms."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import edgeorder
from .wheelgeom import CrossingGraph, EdgeId, WheelModel, crossing_graph, edge, is_bumpy

MODE_SUBGRAPH = "subgraph"
MODE_TREE = "spanning_tree"
MODE_DOUBLE_STAR = "double_star"


def lexicographic_edges(model: WheelModel) -> list[EdgeId]:
    return model.edges()


@dataclass(frozen=True)
class Partition:
    model: WheelModel
    m: int
    color: dict[EdgeId, int]

    def __post_init__(self):
        es = self.model.edges()
        if set(self.color) != set(es):
            raise ValueError("color map must cover every edge exactly once")
        bad = [c for c in self.color.values() if not 0 <= c < self.m]
        if bad:
            raise ValueError(f"color out of range: {bad[0]}")

    def classes(self) -> list[list[EdgeId]]:
        out: list[list[EdgeId]] = [[] for _ in range(self.m)]
        for e in self.model.edges():
            out[self.color[e]].append(e)
        return out

    def to_json(self) -> dict:
        return {
            "model": self.model.to_json(),
            "m": self.m,
            "colors": [self.color[e] for e in self.model.edges()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Partition":
        model = WheelModel.from_json(obj["model"])
        es = model.edges()
        colors = obj["colors"]
        if len(colors) != len(es):
            raise ValueError(f"expected {len(es)} colors, got {len(colors)}")
        return cls(model=model, m=int(obj["m"]), color={e: int(c) for e, c in zip(es, colors)})


@dataclass
class AuditReport:
    mode: str
    class_flags: list[dict] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def flag(self, msg: str):
        self.violations.append(msg)


def _class_plane(cg: CrossingGraph, es: list[EdgeId]) -> tuple[bool, list]:
    idx = [cg.index[e] for e in es]
    for i in range(len(idx)):
        nbrs = cg.neighbor_indices(idx[i])
        for j in range(i + 1, len(idx)):
            if idx[j] in nbrs:
                return False, [es[i], es[j]]
    return True, []


def _class_components(num_vertices: int, es: list[EdgeId]) -> tuple[int, set[int]]:
    parent = list(range(num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = set()
    for a, b in es:
        touched.add(a)
        touched.add(b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    roots = {find(v) for v in touched}
    return len(roots), touched


def validate_plane_partition(p: Partition, cg: CrossingGraph | None = None) -> AuditReport:
    rep = AuditReport(mode=MODE_SUBGRAPH)
    cg = cg or crossing_graph(p.model)
    for c, es in enumerate(p.classes()):
        plane, bad = _class_plane(cg, es)
        rep.class_flags.append({"plane": plane})
        if not plane:
            rep.flag(f"class {c}: crossing pair {bad[0]} x {bad[1]}")
    if p.m != p.model.n:
        rep.flag(f"m={p.m} differs from n={p.model.n}")
    return rep


def validate_spanning_trees(p: Partition, cg: CrossingGraph | None = None) -> AuditReport:
    rep = AuditReport(mode=MODE_TREE)
    cg = cg or crossing_graph(p.model)
    nv = p.model.num_points
    if p.m != p.model.n:
        rep.flag(f"m={p.m} differs from n={p.model.n}")
    for c, es in enumerate(p.classes()):
        plane, bad = _class_plane(cg, es)
        size_ok = len(es) == nv - 1
        comps, touched = _class_components(nv, es)
        connected = comps == 1
        spanning = len(touched) == nv
        flags = {
            "plane": plane,
            "size_2n_minus_1": size_ok,
            "connected": connected,
            "spanning": spanning,
            "acyclic": size_ok and connected and spanning,
        }
        rep.class_flags.append(flags)
        if not plane:
            rep.flag(f"class {c}: crossing pair {bad[0]} x {bad[1]}")
        if not size_ok:
            rep.flag(f"class {c}: {len(es)} edges, expected {nv - 1}")
        if not (connected and spanning):
            rep.flag(f"class {c}: not a spanning connected subgraph")
    return rep


def validate_double_stars(p: Partition, cg: CrossingGraph | None = None) -> AuditReport:
    rep = validate_spanning_trees(p, cg)
    rep.mode = MODE_DOUBLE_STAR
    for c, es in enumerate(p.classes()):
        deg: dict[int, int] = {}
        for a, b in es:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        internal = sorted(v for v, d in deg.items() if d >= 2)
        ok = len(internal) <= 2
        if len(internal) == 2 and edge(*internal) not in es:
            ok = False
        if c < len(rep.class_flags):
            rep.class_flags[c]["double_star"] = ok
        if not ok:
            rep.flag(f"class {c}: internal vertices {internal} do not form a double star")
    return rep


def _maximal_diagonals(model: WheelModel, es: list[EdgeId]) -> set[EdgeId]:
    diags = [e for e in es if edgeorder.classify_edge(model, e).kind == edgeorder.DIAGONAL]
    return edgeorder.maximal_edges(model, diags)


def _pair_of_edge(model: WheelModel, e: EdgeId) -> tuple[int, int] | None:
    """The opposite group pair an edge connects, if any."""
    ga, gb = model.group_of(e[0]), model.group_of(e[1])
    if ga == gb:
        return None
    pair = (ga, gb) if ga < gb else (gb, ga)
    return pair if pair in set(edgeorder.opposite_group_pairs(model)) else None


def structural_audit(p: Partition, mode: str, cg: CrossingGraph | None = None) -> AuditReport:
    """Mechanical checks of the structural lemmas on a partition that already
    passed its mode validator.  Any violation on a validated partition is a
    hard failure upstream."""
    rep = AuditReport(mode=f"audit:{mode}")
    model = p.model
    classes = p.classes()
    nv = model.num_points

    if mode in (MODE_TREE, MODE_DOUBLE_STAR):
        _audit_boundary_counts(rep, model, classes)
        _audit_span_confinement(rep, model, classes)
        _audit_distance_chain(rep, model, classes)
        _audit_max_edge_uniqueness(rep, model, classes)
        _audit_incomparable_sums(rep, model, classes, nv)
    elif mode == MODE_SUBGRAPH:
        _audit_span_confinement(rep, model, classes)
        _audit_incomparable_sums(rep, model, classes, nv)
        if is_bumpy(model):
            _audit_forced_edges(rep, model, classes, nv)
    return rep


def _audit_boundary_counts(rep, model, classes):
    # one class holds a single boundary edge, the n-1 others two each
    counts = []
    for es in classes:
        counts.append(
            sum(1 for e in es if edgeorder.classify_edge(model, e).kind == edgeorder.BOUNDARY)
        )
    if sorted(counts) != [1] + [2] * (len(classes) - 1):
        rep.flag(f"boundary-edge counts per class {counts} != one 1 and rest 2")
    # the same class must hold a single maximal diagonal, all others two
    mcounts = [len(_maximal_diagonals(model, es)) for es in classes]
    if sorted(mcounts) != [1] + [2] * (len(classes) - 1):
        rep.flag(f"maximal-diagonal counts per class {mcounts} != one 1 and rest 2")


def _audit_span_confinement(rep, model, classes):
    # a radial edge of a class never lies beyond a maximal diagonal of the class
    for c, es in enumerate(classes):
        maxd = _maximal_diagonals(model, es)
        for e in es:
            if e[0] != 0:
                continue
            v = e[1]
            for f in maxd:
                if v in model.far_arc(f):
                    rep.flag(f"class {c}: radial {e} beyond maximal diagonal {f}")


def _audit_distance_chain(rep, model, classes):
    # every non-radial edge of distance d >= 2 continues with exactly one of
    # its two distance-(d-1) children in the same class
    for c, es in enumerate(classes):
        eset = set(es)
        for e in es:
            if e[0] == 0 or edgeorder.dist(model, e) < 2:
                continue
            left, right = edgeorder.distance_children(model, e)
            hits = (left in eset) + (right in eset)
            if hits != 1:
                rep.flag(f"class {c}: edge {e} continues with {hits} children, expected 1")


def _audit_max_edge_uniqueness(rep, model, classes):
    # per opposite pair and distance: at most one maximal diagonal overall;
    # for bumpy wheels exactly one for each of the top l distances
    seen: dict[tuple, list] = {}
    for es in classes:
        for e in _maximal_diagonals(model, es):
            pair = _pair_of_edge(model, e)
            if pair is not None:
                seen.setdefault((pair, edgeorder.dist(model, e)), []).append(e)
    for key, es in seen.items():
        if len(es) > 1:
            rep.flag(f"pair/distance {key}: {len(es)} maximal diagonals {es}")
    if is_bumpy(model):
        ell = model.sizes[0]
        for pair in edgeorder.opposite_group_pairs(model):
            for i in range(1, ell + 1):
                d = edgeorder.d_value(model.k, ell, i)
                if (pair, d) not in seen:
                    rep.flag(f"pair {pair}: no maximal diagonal of distance d_{i}={d}")


def _audit_incomparable_sums(rep, model, classes, nv):
    # pairwise incomparable family: sum of distances <= 2n-1; any two maximal
    # incomparable members: sum <= 2n-2; on bumpy wheels index sums i+j >= l+1
    two_n = nv
    for c, es in enumerate(classes):
        maxd = sorted(_maximal_diagonals(model, es))
        total = sum(edgeorder.dist(model, e) for e in maxd)
        if total > two_n - 1:
            rep.flag(f"class {c}: maximal-diagonal distance sum {total} > {two_n - 1}")
        for i, e in enumerate(maxd):
            for f in maxd[i + 1 :]:
                de, df = edgeorder.dist(model, e), edgeorder.dist(model, f)
                if de + df > two_n - 2:
                    rep.flag(f"class {c}: dist({e})+dist({f}) = {de + df} > {two_n - 2}")
                if is_bumpy(model):
                    ell = model.sizes[0]
                    top = (model.k + 1) // 2 * ell
                    if (top - de) + (top - df) < ell + 1:
                        rep.flag(f"class {c}: index sum of {e},{f} below {ell + 1}")


def _audit_forced_edges(rep, model, classes, nv):
    """Forced-edge accounting on plane subgraph partitions of bumpy wheels:
    per opposite pair a selection of l maximal diagonals with distances at
    least d_1..d_l exists; one class carries one forced edge and the rest two;
    the distance deficits x_i sum to at most (l-1)/2."""
    ell = model.sizes[0]
    k = model.k
    class_of: dict[EdgeId, int] = {}
    for c, es in enumerate(classes):
        for e in _maximal_diagonals(model, es):
            class_of[e] = c

    forced: list[tuple[EdgeId, int]] = []  # (edge, slot index i)
    for pair in edgeorder.opposite_group_pairs(model):
        cands = sorted(
            (e for e in class_of if _pair_of_edge(model, e) == pair),
            key=lambda e: (-edgeorder.dist(model, e), e),
        )
        if len(cands) < ell:
            rep.flag(f"pair {pair}: only {len(cands)} maximal diagonals, need {ell}")
            return rep
        for i in range(1, ell + 1):
            e = cands[i - 1]
            if edgeorder.dist(model, e) < edgeorder.d_value(k, ell, i):
                rep.flag(f"pair {pair}: slot {i} edge {e} shorter than d_{i}")
            forced.append((e, i))

    per_class: dict[int, list[EdgeId]] = {}
    for e, _ in forced:
        per_class.setdefault(class_of[e], []).append(e)
    counts = sorted(len(v) for v in per_class.values())
    if counts != [1] + [2] * (len(classes) - 1):
        rep.flag(f"forced-edge counts per class {counts} != one 1 and rest 2")
        return rep

    x_total = 0
    d1 = edgeorder.d_value(k, ell, 1)
    for c, es in per_class.items():
        if len(es) == 1:
            x_total += d1 - edgeorder.dist(model, es[0])
        else:
            x_total += (nv - 2) - sum(edgeorder.dist(model, e) for e in es)
    if x_total > (ell - 1) // 2:
        rep.flag(f"forced-edge deficit sum {x_total} > {(ell - 1) // 2}")
    return rep


# ---------------------------------------------------------------------------
# isomorphism

SYM_NONE = "none"
SYM_ROTATION = "rotation"
SYM_FULL = "rotation_reflection"


def model_symmetries(model: WheelModel, symmetry: str = SYM_FULL) -> list[tuple[int, ...]]:
    """Vertex permutations (as image tuples over 0..2n-1) induced by circular
    symmetries of the group-size sequence; v_0 is always fixed."""
    h = model.hull_count
    group_sets = [frozenset(v - 1 for v in model.group_vertices(g)) for g in range(1, model.k + 1)]
    gs = set(group_sets)
    signs = (1,) if symmetry == SYM_ROTATION else (1, -1)
    if symmetry == SYM_NONE:
        return [tuple(range(h + 1))]
    perms = []
    for sign in signs:
        for t in range(h):
            images = [(sign * p + t) % h for p in range(h)]
            if all(frozenset(images[p] for p in s) in gs for s in group_sets):
                perms.append((0,) + tuple(images[v - 1] + 1 for v in range(1, h + 1)))
    return perms


def _renumber(colors: list[int]) -> bytes:
    remap: dict[int, int] = {}
    out = bytearray()
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return bytes(out)


def canonical_form(p: Partition, symmetry: str = SYM_FULL) -> bytes:
    es = p.model.edges()
    best = None
    for perm in model_symmetries(p.model, symmetry):
        colors = [p.color[edge(perm[a], perm[b])] for a, b in es]
        cand = _renumber(colors)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def isomorphic(p1: Partition, p2: Partition, symmetry: str = SYM_FULL) -> bool:
    if p1.model != p2.model or p1.m != p2.m:
        raise ValueError("partitions must share model and class count")
    return canonical_form(p1, symmetry) == canonical_form(p2, symmetry)

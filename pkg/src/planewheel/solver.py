"""Exhaustive exact search for partitions into n plane subgraphs, spanning
trees, or double stars, with UNSAT certificates, plus the LP exporter and the
closed-form theorem verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import _core
from .partition import MODE_DOUBLE_STAR, MODE_SUBGRAPH, MODE_TREE, Partition
from .wheelgeom import EdgeId, WheelModel, crossing_graph, is_bumpy

_MODE_IDS = {MODE_SUBGRAPH: 0, MODE_TREE: 1, MODE_DOUBLE_STAR: 2}


@dataclass
class SolveConfig:
    mode: str = MODE_TREE
    enforce_class_size: bool = False
    enforce_triangle: bool = False
    node_limit: int = 0  # 0 = unlimited
    time_limit: float = 0.0  # seconds, 0 = unlimited
    seed: int = 0  # reserved; the search is deterministic
    parallel_width: int = 1  # accepted, currently executed sequentially
    symmetry_breaking: bool = True

    def __post_init__(self):
        if self.mode not in _MODE_IDS:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode in (MODE_TREE, MODE_DOUBLE_STAR):
            self.enforce_class_size = True


@dataclass
class SolveOutcome:
    status: str  # SAT | UNSAT | LIMIT
    witness: Optional[Partition]
    stats: dict = field(default_factory=dict)
    solutions: Optional[list[Partition]] = None

    def to_json(self) -> dict:
        out = {"status": self.status, "stats": dict(self.stats)}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def max_crossing_family(model: WheelModel) -> list[EdgeId]:
    """A large pairwise-crossing edge set, deterministically.

    The n-1 chords {t, t+n} interleave pairwise on any wheel; a greedy pass
    over the remaining edges (by crossing degree) tries to grow the family.
    """
    n = model.n
    family = [(t, t + n) for t in range(1, n)]
    cg = crossing_graph(model)
    fam_idx = {cg.index[e] for e in family}
    by_degree = sorted(cg.edges, key=lambda e: (-cg.degree(e), e))
    for e in by_degree:
        i = cg.index[e]
        if i in fam_idx:
            continue
        if fam_idx <= cg.neighbor_indices(i):
            family.append(e)
            fam_idx.add(i)
    return family


def solve(
    model: WheelModel,
    cfg: SolveConfig,
    all_solutions: bool = False,
    preassigned: Optional[list[tuple[EdgeId, int]]] = None,
) -> SolveOutcome:
    m = model.n
    cg = crossing_graph(model)
    edges = cg.edges
    index = cg.index
    nv = model.num_points

    ea = [e[0] for e in edges]
    eb = [e[1] for e in edges]
    adj_start = [0]
    adj_flat: list[int] = []
    for i in range(len(edges)):
        nbrs = sorted(cg.neighbor_indices(i))
        adj_flat.extend(nbrs)
        adj_start.append(len(adj_flat))

    if preassigned is None and cfg.symmetry_breaking:
        fam = max_crossing_family(model)[:m]
        preassigned = [(e, c) for c, e in enumerate(fam)]
    preassigned = preassigned or []
    pre_idx = [index[e] for e, _ in preassigned]
    pre_colors = [c for _, c in preassigned]

    pre_set = set(pre_idx)
    rest = sorted(
        (i for i in range(len(edges)) if i not in pre_set),
        key=lambda i: (-len(cg.neighbor_indices(i)), edges[i]),
    )
    order = pre_idx + rest

    tri_index = None
    if cfg.enforce_triangle or cfg.mode == MODE_DOUBLE_STAR:
        tri_index = [0] * (nv * nv)
        for i, (a, b) in enumerate(edges):
            tri_index[a * nv + b] = i
            tri_index[b * nv + a] = i

    res = _core.search(
        nv,
        m,
        nv - 1,
        ea,
        eb,
        adj_start,
        adj_flat,
        order,
        len(pre_idx),
        pre_colors,
        _MODE_IDS[cfg.mode],
        cfg.enforce_class_size,
        cfg.enforce_triangle,
        tri_index,
        cfg.node_limit,
        cfg.time_limit,
        cfg.symmetry_breaking,
        all_solutions,
    )

    def to_partition(assignment) -> Partition:
        return Partition(model=model, m=m, color={e: assignment[i] for i, e in enumerate(edges)})

    witness = to_partition(res["assignment"]) if res["assignment"] is not None else None
    solutions = None
    if all_solutions and res["solutions"] is not None:
        solutions = [to_partition(s) for s in res["solutions"]]
        if solutions and witness is None:
            witness = solutions[0]
    stats = {
        "nodes": res["nodes"],
        "max_depth": res["max_depth"],
        "fingerprint": f"{res['fingerprint']:016x}",
        "wall_time": res["elapsed"],
        "backend": _core.BACKEND,
        "preassigned": len(pre_idx),
    }
    return SolveOutcome(status=res["status"], witness=witness, stats=stats, solutions=solutions)


def export_lp(model: WheelModel, m: int, enforce_class_size: bool = True, enforce_triangle: bool = False) -> str:
    """CPLEX-LP encoding of the edge-coloring ILP: every edge gets one color,
    crossing edges differ per color, optional exact class sizes and
    monochromatic-triangle bound.  Output is deterministic byte for byte."""
    cg = crossing_graph(model)
    edges = cg.edges
    nv = model.num_points

    def var(e: EdgeId, c: int) -> str:
        return f"x_e{e[0]}_{e[1]}_c{c}"

    lines = ["Minimize", " obj: 0", "Subject To"]
    for e in edges:
        terms = " + ".join(var(e, c) for c in range(m))
        lines.append(f" c1_{e[0]}_{e[1]}: {terms} = 1")
    for e, f in sorted(cg.crossing_pairs()):
        for c in range(m):
            lines.append(
                f" c2_{e[0]}_{e[1]}_{f[0]}_{f[1]}_c{c}: {var(e, c)} + {var(f, c)} <= 1"
            )
    if enforce_class_size:
        for c in range(m):
            terms = " + ".join(var(e, c) for e in edges)
            lines.append(f" c3_c{c}: {terms} = {nv - 1}")
    if enforce_triangle:
        for a in range(nv):
            for b in range(a + 1, nv):
                for d in range(b + 1, nv):
                    for c in range(m):
                        lines.append(
                            f" c4_{a}_{b}_{d}_c{c}: {var((a, b), c)} + {var((b, d), c)}"
                            f" + {var((a, d), c)} <= 2"
                        )
    lines.append("Binaries")
    for e in edges:
        for c in range(m):
            lines.append(f" {var(e, c)}")
    lines.append("End")
    return "\n".join(lines) + "\n"


def decide_theorem(model: WheelModel) -> dict:
    """Closed-form verdicts: exact for bumpy wheels (trees and subgraphs) and
    for double stars on any wheel; the generalized tree criterion is only
    sufficient, so its negative branch reports 'unknown'."""
    from .doublestar import criterion_small_families, tree_nonpartition_criterion

    verdict = {}
    if is_bumpy(model):
        ell = model.sizes[0]
        k = model.k
        verdict["tree"] = "yes" if ell <= 3 else "no"
        verdict["subgraph"] = "no" if (ell > 5 or (ell == 5 and k > 3)) else "yes"
    else:
        verdict["tree"] = "no" if tree_nonpartition_criterion(model) else "unknown"
        verdict["subgraph"] = "unknown"
    verdict["double_star"] = "no" if criterion_small_families(model) else "yes"
    return verdict

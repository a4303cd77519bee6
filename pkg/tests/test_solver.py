import pytest

from planewheel.partition import (
    MODE_DOUBLE_STAR,
    MODE_SUBGRAPH,
    MODE_TREE,
    structural_audit,
    validate_double_stars,
    validate_plane_partition,
    validate_spanning_trees,
)
from planewheel.solver import SolveConfig, decide_theorem, export_lp, max_crossing_family, solve
from planewheel.wheelgeom import build_bumpy_wheel, build_generalized_wheel, crossing_graph


class TestConfig:
    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError):
            SolveConfig(mode="nope")

    def test_tree_forces_class_size(self):
        cfg = SolveConfig(mode=MODE_TREE, enforce_class_size=False)
        assert cfg.enforce_class_size


class TestMaxCrossingFamily:
    @pytest.mark.parametrize("sizes", [(3, 3, 3), (5, 5, 5), (2, 3, 3, 4, 3)])
    def test_family_is_pairwise_crossing(self, sizes):
        m = build_generalized_wheel(list(sizes))
        fam = max_crossing_family(m)
        assert len(fam) >= m.n - 1
        cg = crossing_graph(m)
        for i, e in enumerate(fam):
            for f in fam[i + 1 :]:
                assert cg.crosses(e, f)


class TestSolve:
    def test_bw33_tree_sat(self, bw33):
        out = solve(bw33, SolveConfig(mode=MODE_TREE))
        assert out.status == "SAT"
        assert validate_spanning_trees(out.witness).ok
        assert structural_audit(out.witness, MODE_TREE).ok

    def test_bw35_tree_unsat(self, bw35):
        out = solve(bw35, SolveConfig(mode=MODE_TREE))
        assert out.status == "UNSAT"
        assert out.witness is None

    def test_bw35_subgraph_sat(self, bw35):
        out = solve(bw35, SolveConfig(mode=MODE_SUBGRAPH))
        assert out.status == "SAT"
        assert validate_plane_partition(out.witness).ok

    def test_double_star_regular_wheel_sat(self):
        w = build_generalized_wheel([1] * 7)
        out = solve(w, SolveConfig(mode=MODE_DOUBLE_STAR))
        assert out.status == "SAT"
        assert validate_double_stars(out.witness).ok

    def test_double_star_bw33_unsat(self, bw33):
        assert solve(bw33, SolveConfig(mode=MODE_DOUBLE_STAR)).status == "UNSAT"

    def test_node_limit_reports_limit(self, bw35):
        out = solve(bw35, SolveConfig(mode=MODE_TREE, node_limit=10))
        assert out.status == "LIMIT"
        assert out.stats["nodes"] <= 11

    def test_symmetry_breaking_preserves_status(self, bw33):
        with_sb = solve(bw33, SolveConfig(mode=MODE_TREE, symmetry_breaking=True))
        without = solve(bw33, SolveConfig(mode=MODE_TREE, symmetry_breaking=False))
        assert with_sb.status == without.status == "SAT"

    def test_symmetry_breaking_preserves_unsat(self, bw33):
        with_sb = solve(bw33, SolveConfig(mode=MODE_DOUBLE_STAR, symmetry_breaking=True))
        without = solve(bw33, SolveConfig(mode=MODE_DOUBLE_STAR, symmetry_breaking=False))
        assert with_sb.status == without.status == "UNSAT"

    def test_stats_present(self, bw33):
        out = solve(bw33, SolveConfig(mode=MODE_TREE))
        assert out.stats["nodes"] > 0
        assert len(out.stats["fingerprint"]) == 16
        assert out.stats["backend"] in ("python", "compiled")

    def test_deterministic(self, bw33):
        a = solve(bw33, SolveConfig(mode=MODE_TREE))
        b = solve(bw33, SolveConfig(mode=MODE_TREE))
        assert a.stats["fingerprint"] == b.stats["fingerprint"]
        assert a.stats["nodes"] == b.stats["nodes"]

    def test_all_solutions_small(self):
        w = build_generalized_wheel([1, 1, 1])
        out = solve(w, SolveConfig(mode=MODE_TREE), all_solutions=True)
        assert out.status == "SAT"
        assert out.solutions
        for p in out.solutions:
            assert validate_spanning_trees(p).ok

    def test_preassignment_respected(self, bw33):
        e = (1, 6)
        out = solve(bw33, SolveConfig(mode=MODE_TREE), preassigned=[(e, 2)])
        assert out.status == "SAT"
        assert out.witness.color[e] == 2

    def test_to_json(self, bw33):
        out = solve(bw33, SolveConfig(mode=MODE_TREE))
        obj = out.to_json()
        assert obj["status"] == "SAT"
        assert "witness" in obj and "stats" in obj


class TestExportLp:
    def test_structure_counts(self, bw35):
        text = export_lp(bw35, 8)
        lines = text.splitlines()
        assert lines[0] == "Minimize"
        assert lines[-1] == "End"
        c1 = [l for l in lines if l.startswith(" c1_")]
        c2 = [l for l in lines if l.startswith(" c2_")]
        c3 = [l for l in lines if l.startswith(" c3_")]
        binaries = lines[lines.index("Binaries") + 1 : lines.index("End")]
        assert len(c1) == 120
        assert len(c3) == 8
        assert len(binaries) == 960
        assert len(c2) == 8 * len(crossing_graph(bw35).crossing_pairs())

    def test_byte_stable(self, bw35):
        assert export_lp(bw35, 8) == export_lp(bw35, 8)

    def test_optional_blocks(self, bw33):
        base = export_lp(bw33, 5, enforce_class_size=False)
        assert " c3_" not in base
        tri = export_lp(bw33, 5, enforce_triangle=True)
        assert " c4_" in tri


class TestDecideTheorem:
    def test_bumpy_tree_boundary(self):
        assert decide_theorem(build_bumpy_wheel(3, 3))["tree"] == "yes"
        assert decide_theorem(build_bumpy_wheel(5, 3))["tree"] == "yes"
        assert decide_theorem(build_bumpy_wheel(3, 5))["tree"] == "no"

    def test_bumpy_subgraph_boundary(self):
        assert decide_theorem(build_bumpy_wheel(3, 5))["subgraph"] == "yes"
        assert decide_theorem(build_bumpy_wheel(5, 5))["subgraph"] == "no"
        assert decide_theorem(build_bumpy_wheel(3, 7))["subgraph"] == "no"

    def test_double_star_verdicts(self):
        assert decide_theorem(build_bumpy_wheel(3, 3))["double_star"] == "no"
        assert decide_theorem(build_generalized_wheel([1] * 5))["double_star"] == "yes"

    def test_generalized_tree_verdict(self):
        # every 2-consecutive-group family of [5,7,5,7,5] has <= 12 < n-2 = 13
        v = decide_theorem(build_generalized_wheel([5, 7, 5, 7, 5]))
        assert v["tree"] == "no"
        # [2,3,3,4,5] misses the sufficient criterion (one family has exactly
        # n-2 vertices) even though exhaustive search shows UNSAT
        v = decide_theorem(build_generalized_wheel([2, 3, 3, 4, 5]))
        assert v["tree"] == "unknown"
        assert v["subgraph"] == "unknown"

    def test_verdicts_match_solver_on_small_bumpy(self):
        for k, ell in [(3, 1), (3, 3), (5, 1)]:
            m = build_bumpy_wheel(k, ell)
            v = decide_theorem(m)["tree"]
            got = solve(m, SolveConfig(mode=MODE_TREE)).status
            assert (v == "yes") == (got == "SAT")

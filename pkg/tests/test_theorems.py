import itertools

import pytest

from fallcolor.colorings import Coloring, classify
from fallcolor.graph import complete, complete_bipartite, cycle, empty_graph, join, path
from fallcolor.solvers import Status, achromatic_edge_bound, find_fall_coloring
from fallcolor.theorems import (
    NotAFallColoring,
    all_fall_colorings,
    bipartition_fall_coloring,
    caterpillar_partial_grundy_coloring,
    compose_join_fall,
    minkowski_sum,
    path_complete_coloring,
    pendant_path_b_coloring,
    proper_colorings_canonical,
    restrict_fall,
    t_tree_grundy_coloring,
    theorem3_family,
    theorem3_verify,
    verify_join_additivity,
)

C4_FALL = Coloring(2, (1, 2, 1, 2))
C6_FALL3 = Coloring(3, (1, 2, 3, 1, 2, 3))


class TestCompose:
    def test_two_singletons(self):
        c = compose_join_fall([(complete(1), Coloring(1, (1,))), (complete(1), Coloring(1, (1,)))])
        assert c == Coloring(2, (1, 2))

    def test_c4_c6(self):
        c = compose_join_fall([(cycle(4), C4_FALL), (cycle(6), C6_FALL3)])
        assert c.k == 5 and classify(join([cycle(4), cycle(6)]), c).fall
        assert c.colors[4:] == (3, 4, 5, 3, 4, 5)

    def test_three_c4(self):
        c = compose_join_fall([(cycle(4), C4_FALL)] * 3)
        assert c.k == 6 and classify(join([cycle(4)] * 3), c).fall

    def test_rejects_non_fall_part(self):
        with pytest.raises(NotAFallColoring):
            compose_join_fall([(cycle(4), Coloring(2, (1, 1, 2, 2)))])


class TestRestrict:
    def test_k2(self):
        assert restrict_fall([complete(1), complete(1)], Coloring(2, (1, 2))) == [
            Coloring(1, (1,)),
            Coloring(1, (1,)),
        ]

    def test_round_trip_keeps_partitions(self):
        parts = [(cycle(4), C4_FALL), (cycle(6), C6_FALL3)]
        pieces = restrict_fall([g for g, _ in parts], compose_join_fall(parts))
        for (_, original), piece in zip(parts, pieces):
            assert sorted(map(sorted, original.classes())) == sorted(map(sorted, piece.classes()))

    def test_brute_force_c4_join_c4(self):
        g = join([cycle(4), cycle(4)])
        fours = [c for c in all_fall_colorings(g) if c.k == 4]
        assert fours
        for c in fours:
            for piece in restrict_fall([cycle(4), cycle(4)], c):
                assert piece.k == 2 and classify(cycle(4), piece).fall

    def test_rejects_non_fall(self):
        with pytest.raises(NotAFallColoring):
            restrict_fall([cycle(4), cycle(4)], Coloring(2, (1, 2) * 4))


class TestBruteForce:
    def test_canonical_count_matches_stirling_for_edgeless(self):
        # partitions of 4 labeled points into 2 blocks
        assert len(list(proper_colorings_canonical(empty_graph(4), 2))) == 7

    def test_all_fall_colorings_c6(self):
        assert sorted({c.k for c in all_fall_colorings(cycle(6))}) == [2, 3]


class TestAdditivity:
    def test_c4_c6_spectrum(self):
        r = verify_join_additivity([cycle(4), cycle(6)], "fall_spectrum")
        assert r.lhs == r.rhs == (4, 5) and r.holds and r.status is Status.EXACT

    def test_p3_p3_chi(self):
        r = verify_join_additivity([path(3), path(3)], "chi")
        assert r.lhs == r.rhs == 4

    def test_k2_k3_psi(self):
        r = verify_join_additivity([complete(2), complete(3)], "psi")
        assert r.lhs == r.rhs == 5

    def test_minkowski(self):
        assert minkowski_sum([(2,), (2, 3)]) == (4, 5)
        assert minkowski_sum([(1, 3), (1, 3)]) == (2, 4, 6)

    def test_needs_fall_parts(self):
        with pytest.raises(ValueError):
            verify_join_additivity([cycle(5), cycle(4)], "chi_f")

    def test_unknown_parameter(self):
        with pytest.raises(ValueError):
            verify_join_additivity([cycle(4)], "omega")

    @pytest.mark.parametrize(
        "a,b", list(itertools.combinations_with_replacement(["K1", "K2", "P3", "P4", "C4", "C5", "C6", "K3"], 2))
    )
    def test_grid_with_odd_cycle(self, a, b):
        # the number-valued equalities do not need fall colorings of the parts
        build = {"K": complete, "P": path, "C": cycle}
        parts = [build[x[0]](int(x[1:])) for x in (a, b)]
        for param in ("chi", "phi", "gamma", "partial_gamma", "psi"):
            r = verify_join_additivity(parts, param)
            assert r.holds, (a, b, param, r.lhs, r.rhs)


class TestGapFamily:
    def test_family_shapes(self):
        g = theorem3_family(3)
        assert g[1].n == 12 and {g[1].degree(v) for v in range(12)} == {5}
        assert g[4].n == 32
        assert g[7].n == 21 and g[7].m == 20
        assert g[0].n == 80

    def test_rejects_small_epsilon(self):
        with pytest.raises(ValueError):
            theorem3_family(2)

    @pytest.mark.parametrize("eps", [3, 4, 5])
    def test_constructed_witnesses(self, eps):
        family = theorem3_family(eps)
        assert classify(family[3], pendant_path_b_coloring(eps)).b_coloring
        assert classify(family[4], t_tree_grundy_coloring(eps + 3)).grundy
        assert classify(family[5], caterpillar_partial_grundy_coloring(eps)).partial_grundy
        for g in (family[3], family[4], family[5]):
            assert classify(g, bipartition_fall_coloring(g)).fall

    def test_bipartition_needs_bipartite(self):
        assert bipartition_fall_coloring(cycle(5)) is None
        assert bipartition_fall_coloring(complete(1)) is None

    @pytest.mark.parametrize("k", range(2, 10))
    def test_path_complete_coloring(self, k):
        edges = k * (k - 1) // 2 + (k // 2 - 1 if k % 2 == 0 else 0)
        c = path_complete_coloring(edges + 1, k)
        assert classify(path(edges + 1), c).complete
        assert path_complete_coloring(edges, k) is None
        longer = path_complete_coloring(edges + 5, k)
        assert classify(path(edges + 5), longer).complete

    def test_path22_has_complete_7_coloring(self):
        c = path_complete_coloring(22, 7)
        assert classify(path(22), c).complete and achromatic_edge_bound(path(22)) == 7


@pytest.fixture(scope="module")
def report():
    return theorem3_verify(3)


class TestGapReport:
    @pytest.mark.parametrize("step", range(1, 8))
    def test_steps_one_to_seven(self, report, step):
        e = report.entry(step)
        assert e.gap >= 4 and e.status.startswith("VERIFIED")

    def test_step2_values(self, report):
        e = report.entry(2)
        assert (e.param_low.value, e.param_high.value) == (2, 6)
        assert e.status == "VERIFIED_EXACT"

    def test_step3_values(self, report):
        e = report.entry(3)
        assert (e.param_low.value, e.param_high.value) == (2, 6)

    def test_step5_values(self, report):
        e = report.entry(5)
        assert e.param_high.value == 6 and e.param_low.upper <= 2

    def test_step7_values(self, report):
        e = report.entry(7)
        assert (e.param_low.value, e.param_high.value) == (2, 6)

    def test_step8_both_readings(self, report):
        vertices = report.entry(8, "vertices")
        edges = report.entry(8, "edges")
        assert vertices.status == "REFUTED" and vertices.param_high.upper == 6
        assert edges.status.startswith("VERIFIED") and edges.param_high.lower == 7

    def test_json_fields(self, report):
        data = report.to_json()
        assert data["epsilon"] == 3 and data["threshold"] == 4
        for entry in data["entries"]:
            assert {"step", "graph", "param_low", "param_high", "gap", "status", "notes"} <= set(entry)

    @pytest.mark.parametrize("eps", [4, 5])
    def test_larger_epsilon(self, eps):
        report = theorem3_verify(eps)
        for step in range(1, 8):
            assert report.entry(step).gap >= eps + 1


def test_fall_search_on_small_join():
    g = join([cycle(4), complete_bipartite(2, 3)])
    assert find_fall_coloring(g, 4) is not None

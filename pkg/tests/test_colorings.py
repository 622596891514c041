import pytest

from fallcolor.colorings import (
    KINDS,
    Coloring,
    ColoringError,
    classify,
    colorful_vertices,
    grundy_vertices,
    is_proper,
    realized_pairs,
)
from fallcolor.graph import complete, cycle, disjoint_union, empty_graph, path


def col(*colors, k=None):
    return Coloring.of(k or max(colors), colors)


class TestColoringValue:
    def test_rejects_out_of_range(self):
        with pytest.raises(ColoringError):
            Coloring(2, (1, 3))
        with pytest.raises(ColoringError):
            Coloring(0, ())
        with pytest.raises(ColoringError):
            Coloring(2, (0, 1))

    def test_json_round_trip(self):
        c = col(1, 2, 1, 3)
        assert c.to_json() == {"k": 3, "colors": [1, 2, 1, 3]}
        assert Coloring.from_json(c.to_json()) == c

    def test_classes_and_shift(self):
        c = col(1, 2, 1, k=3)
        assert c.classes() == [{0, 2}, {1}, set()]
        assert c.used_colors() == {1, 2}
        assert c.shifted(2, 5).colors == (3, 4, 3)


class TestProper:
    def test_examples(self):
        assert is_proper(complete(2), col(1, 2))
        assert not is_proper(complete(2), col(1, 1))
        assert is_proper(cycle(5), col(1, 2, 1, 2, 3))

    def test_length_mismatch(self):
        with pytest.raises(ColoringError):
            is_proper(cycle(5), col(1, 2))


class TestColorful:
    def test_examples(self):
        assert colorful_vertices(complete(2), col(1, 2)) == {0, 1}
        assert colorful_vertices(cycle(4), col(1, 2, 1, 2)) == {0, 1, 2, 3}
        assert colorful_vertices(cycle(4), col(1, 2, 1, 3)) == {0, 2}

    def test_defined_for_improper(self):
        assert colorful_vertices(complete(2), col(1, 1)) == {0, 1}


class TestGrundyVertices:
    def test_all_one(self):
        assert grundy_vertices(cycle(5), col(1, 1, 1, 1, 1)) == set(range(5))

    def test_p3(self):
        assert grundy_vertices(path(3), col(1, 2, 1)) == {0, 1, 2}
        assert grundy_vertices(path(3), col(2, 1, 2)) == {0, 1, 2}

    def test_missing_lower_color(self):
        assert grundy_vertices(path(3), col(1, 3, 1)) == {0, 2}


class TestClassify:
    def test_c4_bipartition(self):
        r = classify(cycle(4), col(1, 2, 1, 2))
        assert all(r.has(kind) for kind in KINDS)

    def test_c5_three_colors(self):
        r = classify(cycle(5), col(1, 2, 1, 2, 3))
        assert r.proper and not r.fall and r.complete
        assert 1 not in r.colorful_set

    def test_k3(self):
        r = classify(complete(3), col(1, 2, 3))
        assert all(r.has(kind) for kind in KINDS)

    def test_empty_class_blocks_every_kind(self):
        r = classify(complete(2), Coloring(3, (1, 2)))
        assert r.proper
        assert not any(r.has(kind) for kind in KINDS if kind != "proper")

    def test_improper_blocks_every_kind(self):
        r = classify(cycle(4), col(1, 1, 2, 2))
        assert not any(r.has(kind) for kind in KINDS)

    def test_isolated_vertex_kills_fall(self):
        assert classify(empty_graph(3), col(1, 1, 1)).fall
        g = disjoint_union([complete(2), empty_graph(1)])
        r = classify(g, col(1, 2, 1))
        assert r.proper and r.b_coloring and not r.fall
        assert r.colorful_set == {0, 1}

    def test_realized_pairs(self):
        assert realized_pairs(path(4), col(1, 2, 3, 1)) == {(1, 2), (2, 3), (1, 3)}

    def test_json(self):
        data = classify(cycle(4), col(1, 2, 1, 2)).to_json()
        assert data["fall"] is True
        assert data["colorful_set"] == [0, 1, 2, 3]

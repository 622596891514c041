import pytest

from fallcolor.expressions import ExpressionError, parse_expression
from fallcolor.graph import Family, FamilySpec, cartesian_product, cycle, generate, join, path


def test_atoms():
    assert parse_expression("cycle(5)").adj == cycle(5).adj
    assert parse_expression("kbip(2,3)").m == 6
    assert parse_expression("kbip_mm(3)").adj == generate(FamilySpec.of(Family.BIPARTITE_MINUS_MATCHING, 3)).adj
    assert parse_expression("ttree(4)").n == 8
    assert parse_expression("pendant_path(3)").n == 36
    assert parse_expression("caterpillar(3)").n == 29


def test_nesting():
    g = parse_expression(" join( cycle(4), prod(path(2), cycle(3)) ) ")
    assert g.adj == join([cycle(4), cartesian_product(path(2), cycle(3))]).adj
    assert g.name == "join(cycle(4),prod(path(2),cycle(3)))"


def test_join_many():
    assert parse_expression("join(path(1),path(1),path(1))").m == 3


@pytest.mark.parametrize(
    "text,position",
    [
        ("cycle(5", 7),
        ("cycle(2)", 0),
        ("wheel(5)", 0),
        ("join(cycle(4),)", 14),
        ("prod(path(2))", 12),
        ("path(3) path(2)", 8),
        ("path(#)", 5),
    ],
)
def test_errors_report_position(text, position):
    with pytest.raises(ExpressionError) as info:
        parse_expression(text)
    assert info.value.position == position
    assert f"position {position}" in str(info.value)

from qverify.bijection import FIGURES
from qverify.diagram import CELL, OVERLAY, ZERO_ROW, render_diagram, render_split
from qverify.partitions import EMPTY, Partition, triangular


def test_plain_diagram():
    lines = render_diagram(Partition((3, 1))).splitlines()
    assert lines[1:] == [CELL * 3, CELL]


def test_empty_diagram_has_only_a_caption():
    assert render_diagram(EMPTY).splitlines() == ["∅ (empty partition)"]


def test_zero_parts_are_marked():
    assert render_diagram(Partition((2, 0))).splitlines()[1:] == [CELL * 2, ZERO_ROW]


def test_overlay_rows():
    rows = render_diagram(triangular(3), Partition((2, 2, 0))).splitlines()
    assert rows[0] == "(3,2,1) + (2,2,0) = (5,4,1)"
    assert rows[1:] == [CELL * 3 + OVERLAY * 2, CELL * 2 + OVERLAY * 2, CELL]


def test_figure_two_split():
    text = render_split(FIGURES[2][0])
    lines = text.splitlines()
    assert lines[0] == "(6,5,4,3,2,1) + (8,8,0) = (14,13,4,3,2,1)"
    assert set(lines[4]) == {"-"}
    assert [len(r) for r in lines[1:4] + lines[5:8]] == [14, 13, 4, 3, 2, 1]
    assert lines[-3:] == ["X = (14,13,4)", "Y = (3,2,1)", "tag A2"]


def test_figure_one_split():
    lines = render_split(FIGURES[1][0]).splitlines()
    assert lines[-3:] == ["X = (14,11,10,9,6,5)", "Y = (4,3,3,0,0,0,0,0)", "tag A1"]
    assert lines.count(ZERO_ROW) == 5

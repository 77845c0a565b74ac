from __future__ import annotations

import pytest

from regmat.errors import (
    BadOverlap,
    FieldMismatch,
    LabelOverlap,
    PatternViolation,
    ZeroCol,
    ZeroRow,
)
from regmat.linalg.elimination import IDENTITY_LIKE, TRIANGULAR_LIKE
from regmat.linalg.matrix import embed
from regmat.matroid.graphs import graphic_standard_repr
from regmat.matroid.matroid import StandardRepr
from regmat.matroid.sums import (
    D0_AGREEMENT,
    D0_INVERTIBLE,
    FRAME,
    LEFT_X2_ROW,
    LEFT_Y2_REST,
    RIGHT_X2_REST,
    Sum3Frame,
    coupling_block,
    sum1,
    sum2,
    sum3,
    validate_sum3,
)

from .helpers import (
    entries,
    extended_frame,
    gf2,
    grid,
    k4_frame,
    k4_path,
    k4_star,
    k4_star_left,
    k4_star_right,
    rat,
)

STAR_B = [[1, 0, 1], [0, 1, 1], [1, 1, 0]]
ROWS = ("x0", "x1", "x2")
COLS = ("y0", "y1", "y2")


def graphic(g) -> StandardRepr:
    return graphic_standard_repr(g).representation


def star_repr(rows=STAR_B, cols=COLS) -> StandardRepr:
    return StandardRepr(gf2(rows, ROWS, cols))


# --------------------------------------------------------------------------- #
# 1-sum and 2-sum
# --------------------------------------------------------------------------- #


def test_sum1_is_block_diagonal():
    bl = StandardRepr(gf2([[1]], ["a"], ["b"]))
    br = StandardRepr(gf2([[1, 1]], ["c"], ["d", "e"]))

    s = sum1(bl, br)

    assert s.x == ("a", "c")
    assert s.y == ("b", "d", "e")
    assert grid(s.b) == [[1, 0, 0], [0, 1, 1]]


def test_sum1_errors():
    bl = StandardRepr(gf2([[1]], ["a"], ["b"]))

    with pytest.raises(LabelOverlap):
        sum1(bl, StandardRepr(gf2([[1]], ["c"], ["a"])))
    with pytest.raises(FieldMismatch):
        sum1(bl, StandardRepr(rat([[1]], ["c"], ["d"])))


def test_sum2_triangle_and_k4():
    bl = StandardRepr(gf2([[1], [1]], ["x0", "l1"], ["y2"]))
    br = star_repr()

    s = sum2(bl, br, "x0", "y2")

    assert s.x == ("l1", "x0", "x1", "x2")
    assert s.y == ("y2", "y0", "y1")
    assert grid(s.b) == [[1, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]]


def test_coupling_block_over_q():
    bl = StandardRepr(rat([[1, -1]], ["x"], ["a", "y"]))
    br = StandardRepr(rat([[-1, 1], [1, 0]], ["x", "b"], ["y", "c"]))

    d = coupling_block(bl, br, "x", "y")

    assert d.row_labels == ("x", "b")
    assert d.col_labels == ("a", "y", "c")
    assert grid(d) == [[-1, 1, 1], [1, -1, 0]]


def test_sum2_errors():
    bl = StandardRepr(gf2([[0], [1]], ["x", "l"], ["y"]))
    br = StandardRepr(gf2([[1]], ["x"], ["y"]))

    with pytest.raises(ZeroRow):
        sum2(bl, br, "x", "y")
    with pytest.raises(ZeroCol):
        sum2(br, StandardRepr(gf2([[0]], ["x"], ["y"])), "x", "y")
    with pytest.raises(BadOverlap):
        sum2(br, StandardRepr(gf2([[1]], ["z"], ["y"])), "x", "y")


# --------------------------------------------------------------------------- #
# 3-sum
# --------------------------------------------------------------------------- #


def test_k4_graphs_give_the_expected_summands():
    assert entries(graphic(k4_star()).b, ROWS, COLS) == STAR_B
    assert entries(graphic(k4_path()).b, ROWS, COLS) == [
        [1, 1, 1],
        [0, 1, 1],
        [1, 1, 0],
    ]


def test_frame_layout():
    f = extended_frame()

    assert f.left_rows == ("p", "x2", "x1", "x0")
    assert f.right_cols == ("y0", "y1", "y2", "s")
    assert f.rows == ("p", "x2", "x1", "x0", "r")
    assert f.cols == ("q", "y0", "y1", "y2", "s")


def test_sum3_of_two_star_k4s():
    left = right = graphic(k4_star())

    blocks = validate_sum3(left, right, k4_frame())
    s = sum3(blocks)

    assert blocks.d0_class.kind == IDENTITY_LIKE
    assert s.x == ("x2", "x1", "x0")
    assert s.y == ("y0", "y1", "y2")
    assert grid(s.b) == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]


def test_sum3_of_two_path_k4s():
    left = right = graphic(k4_path())

    blocks = validate_sum3(left, right, k4_frame())

    assert blocks.d0_class.kind == TRIANGULAR_LIKE
    assert not blocks.row_swap and not blocks.col_swap
    assert grid(sum3(blocks).b) == [[1, 1, 0], [0, 1, 1], [1, 1, 1]]


def test_sum3_with_private_rows_and_columns():
    blocks = validate_sum3(
        graphic(k4_star_left()), graphic(k4_star_right()), extended_frame()
    )
    s = sum3(blocks)

    assert s.x == ("p", "x2", "x1", "x0", "r")
    assert s.y == ("q", "y0", "y1", "y2", "s")
    # the r/q entry comes from Dr D0^-1 Dl
    assert grid(s.b) == [
        [1, 0, 0, 0, 0],
        [0, 1, 1, 0, 0],
        [0, 0, 1, 1, 1],
        [1, 1, 0, 1, 1],
        [1, 1, 0, 0, 1],
    ]


def test_validate_normalizes_swapped_frames():
    left = right = star_repr()
    swapped = Sum3Frame("x1", "x0", "x2", "y0", "y1", "y2")

    blocks = validate_sum3(left, right, swapped)

    assert blocks.d0_class.kind == IDENTITY_LIKE
    assert blocks.col_swap
    assert not blocks.row_swap
    assert (blocks.frame.y0, blocks.frame.y1) == ("y1", "y0")


def _condition(bl, br, frame) -> str:
    with pytest.raises(PatternViolation) as excinfo:
        validate_sum3(bl, br, frame)
    return excinfo.value.condition


def test_validate_reports_the_failing_condition():
    star = star_repr()

    assert (
        _condition(star, graphic(k4_path()), k4_frame()) == D0_AGREEMENT
    )
    assert (
        _condition(
            star_repr([[1, 1, 1], [1, 1, 1], [1, 1, 0]]), star, k4_frame()
        )
        == D0_INVERTIBLE
    )
    assert (
        _condition(
            star_repr([[1, 0, 1], [0, 1, 1], [1, 1, 1]]), star, k4_frame()
        )
        == LEFT_X2_ROW
    )

    right = StandardRepr(
        gf2(
            [[1, 0, 1, 0], [0, 1, 1, 0], [1, 1, 0, 1]],
            ROWS,
            COLS + ("s",),
        )
    )
    assert _condition(star, right, k4_frame(yr=("s",))) == RIGHT_X2_REST

    left = StandardRepr(
        gf2(
            [[1, 0, 1], [0, 1, 1], [1, 1, 0], [0, 0, 1]],
            ROWS + ("p",),
            COLS,
        )
    )
    assert _condition(left, star, k4_frame(xl=("p",))) == LEFT_Y2_REST


def test_validate_frame_errors():
    star = star_repr()

    assert _condition(star, star, k4_frame(xl=("p",))) == FRAME
    assert (
        _condition(StandardRepr(embed(star.b)), star, k4_frame()) == FRAME
    )

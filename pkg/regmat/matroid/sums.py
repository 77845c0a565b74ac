# matroid/sums.py
from __future__ import annotations

from dataclasses import dataclass, replace
import logging

from ..errors import (
    BadOverlap,
    FieldMismatch,
    LabelOverlap,
    PatternViolation,
    ZeroCol,
    ZeroRow,
)
from ..linalg.elimination import (
    Invertible2x2Class,
    classify_invertible_2x2_gf2,
    gf2_inverse_2x2,
    multiply,
    rational_inverse_2x2,
)
from ..linalg.matrix import BinMatrix, Label, Matrix, RatMatrix, support
from .matroid import StandardRepr

logger = logging.getLogger("regmat." + __name__)

# validate_sum3 conditions, in the order they are checked
FRAME = "frame"
D0_INVERTIBLE = "D0 invertible"
D0_AGREEMENT = "D0 agreement"
LEFT_X2_ROW = "Bl(x2, y0 y1 y2) = (1, 1, 0)"
RIGHT_X2_ROW = "Br(x2, y0 y1 y2) = (1, 1, 0)"
RIGHT_X2_REST = "Br(x2, Yr') = 0"
LEFT_Y2_COL = "Bl(x1 x0, y2) = (1, 1)"
LEFT_Y2_REST = "Bl(Xl', y2) = 0"
RIGHT_Y2_COL = "Br(x1 x0, y2) = (1, 1)"
SUM3_CONDITIONS = (
    FRAME,
    D0_INVERTIBLE,
    D0_AGREEMENT,
    LEFT_X2_ROW,
    RIGHT_X2_ROW,
    RIGHT_X2_REST,
    LEFT_Y2_COL,
    LEFT_Y2_REST,
    RIGHT_Y2_COL,
)


def _same_field(bl: StandardRepr, br: StandardRepr) -> None:
    if bl.field_tag != br.field_tag:
        logger.error("Sum of %s and %s matrices", bl.field_tag, br.field_tag)
        raise FieldMismatch("both summands must be over the same field")


def from_blocks(
    kind: type,
    row_labels: list[Label],
    col_labels: list[Label],
    blocks: list[Matrix],
) -> Matrix:
    """
    Assemble a matrix whose entries come from the first block holding both
    labels; everything else is zero.
    """

    def entry(x: Label, y: Label):
        for block in blocks:
            if block.has_row(x) and block.has_col(y):
                return block[x, y]
        return 0

    return kind.from_function(row_labels, col_labels, entry)


# --------------------------------------------------------------------------- #
# 1-sum and 2-sum
# --------------------------------------------------------------------------- #


def sum1(bl: StandardRepr, br: StandardRepr) -> StandardRepr:
    """
    Block-diagonal [[Bl, 0], [0, Br]].
    """
    _same_field(bl, br)
    parts = [set(bl.x), set(bl.y), set(br.x), set(br.y)]
    seen: set[Label] = set()
    for part in parts:
        if seen & part:
            logger.error("1-sum label overlap: %r", seen & part)
            raise LabelOverlap(
                f"1-sum labels overlap: {sorted(map(str, seen & part))}"
            )
        seen |= part
    rows = list(bl.x) + list(br.x)
    cols = list(bl.y) + list(br.y)
    logger.debug("sum1 %dx%d + %dx%d", *bl.b.shape, *br.b.shape)
    return StandardRepr(from_blocks(type(bl.b), rows, cols, [bl.b, br.b]))


def _check_sum2_labels(
    bl: StandardRepr, br: StandardRepr, x: Label, y: Label
) -> None:
    xl, yl, xr, yr = set(bl.x), set(bl.y), set(br.x), set(br.y)
    if xl & xr != {x} or yl & yr != {y}:
        logger.error(
            "2-sum overlaps rows=%r cols=%r, expected {%r}/{%r}",
            xl & xr,
            yl & yr,
            x,
            y,
        )
        raise BadOverlap(
            f"row sets must meet in {{{x!r}}} and column sets in {{{y!r}}}"
        )
    if xl & yr or xr & yl:
        raise BadOverlap("row and column label sets of the summands meet")


def _outer_parts(
    bl: StandardRepr, br: StandardRepr, x: Label, y: Label
) -> tuple[dict, dict]:
    r = {j: bl.b[x, j] for j in bl.y}
    c = {i: br.b[i, y] for i in br.x}
    if not any(r.values()):
        logger.error("2-sum row r = Bl(%r, Yl) is zero", x)
        raise ZeroRow(f"row {x!r} of the left summand is zero")
    if not any(c.values()):
        logger.error("2-sum column c = Br(Xr, %r) is zero", y)
        raise ZeroCol(f"column {y!r} of the right summand is zero")
    return r, c


def coupling_block(
    bl: StandardRepr, br: StandardRepr, x: Label, y: Label
) -> Matrix:
    """
    [D | Ar] with D = c (x) r, on rows Xr and columns Yl + (Yr - y).
    """
    _same_field(bl, br)
    _check_sum2_labels(bl, br, x, y)
    r, c = _outer_parts(bl, br, x, y)
    cols = list(bl.y) + [j for j in br.y if j != y]

    def entry(i: Label, j: Label):
        if j in r:
            value = c[i] * r[j]
            return value % 2 if isinstance(br.b, BinMatrix) else value
        return br.b[i, j]

    return type(br.b).from_function(br.x, cols, entry)


def sum2(
    bl: StandardRepr, br: StandardRepr, x: Label, y: Label
) -> StandardRepr:
    """
    [[Al, 0], [c (x) r, Ar]] on rows (Xl - x) + Xr, columns Yl + (Yr - y).
    """
    coupling = coupling_block(bl, br, x, y)
    rows = [i for i in bl.x if i != x] + list(br.x)
    cols = list(coupling.col_labels)
    a_l = bl.b.submatrix([i for i in bl.x if i != x], bl.y)
    logger.debug("sum2 at x=%r y=%r", x, y)
    return StandardRepr(from_blocks(type(bl.b), rows, cols, [a_l, coupling]))


# --------------------------------------------------------------------------- #
# 3-sum
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class Sum3Frame:
    """
    The six shared labels of a 3-sum and the four private label lists.

    Left summand: rows xl + (x2, x1, x0), columns yl + (y0, y1, y2).
    Right summand: rows (x2, x1, x0) + xr, columns (y0, y1, y2) + yr.

    """

    x0: Label
    x1: Label
    x2: Label
    y0: Label
    y1: Label
    y2: Label
    xl: tuple[Label, ...] = ()
    yl: tuple[Label, ...] = ()
    xr: tuple[Label, ...] = ()
    yr: tuple[Label, ...] = ()

    @property
    def shared_rows(self) -> tuple[Label, ...]:
        return (self.x2, self.x1, self.x0)

    @property
    def shared_cols(self) -> tuple[Label, ...]:
        return (self.y0, self.y1, self.y2)

    @property
    def left_rows(self) -> tuple[Label, ...]:
        return self.xl + self.shared_rows

    @property
    def left_cols(self) -> tuple[Label, ...]:
        return self.yl + self.shared_cols

    @property
    def right_rows(self) -> tuple[Label, ...]:
        return self.shared_rows + self.xr

    @property
    def right_cols(self) -> tuple[Label, ...]:
        return self.shared_cols + self.yr

    @property
    def top_rows(self) -> tuple[Label, ...]:
        return self.xl + (self.x2,)

    @property
    def bottom_rows(self) -> tuple[Label, ...]:
        return (self.x1, self.x0) + self.xr

    @property
    def left_part_cols(self) -> tuple[Label, ...]:
        return self.yl + (self.y0, self.y1)

    @property
    def right_part_cols(self) -> tuple[Label, ...]:
        return (self.y2,) + self.yr

    @property
    def rows(self) -> tuple[Label, ...]:
        """
        Row order of the assembled 3-sum.
        """
        return self.top_rows + self.bottom_rows

    @property
    def cols(self) -> tuple[Label, ...]:
        return self.left_part_cols + self.right_part_cols


@dataclass(frozen=True)
class Sum3Blocks:
    """
    Validated 3-sum summands with their blocks cut out by the frame.

    ``frame`` is normalized so that D0 on rows (x0, x1) and columns (y0, y1)
    is one of the two canonical forms; ``row_swap`` / ``col_swap`` record
    whether x0/x1 or y0/y1 were exchanged to get there.

    """

    bl: StandardRepr
    br: StandardRepr
    frame: Sum3Frame
    d0_class: Invertible2x2Class
    row_swap: bool = False
    col_swap: bool = False

    @property
    def a_l(self) -> Matrix:
        f = self.frame
        return self.bl.b.submatrix(f.top_rows, f.left_part_cols)

    @property
    def d_l(self) -> Matrix:
        f = self.frame
        return self.bl.b.submatrix((f.x1, f.x0), f.yl)

    @property
    def d0(self) -> Matrix:
        f = self.frame
        return self.bl.b.submatrix((f.x0, f.x1), (f.y0, f.y1))

    @property
    def d_r(self) -> Matrix:
        f = self.frame
        return self.br.b.submatrix(f.xr, (f.y0, f.y1))

    @property
    def a_r(self) -> Matrix:
        f = self.frame
        return self.br.b.submatrix(f.bottom_rows, f.right_part_cols)


def _violation(condition: str, detail: str = "") -> PatternViolation:
    logger.error("3-sum condition failed: %s %s", condition, detail)
    return PatternViolation(condition, detail)


def _check_frame(bl: Matrix, br: Matrix, frame: Sum3Frame) -> None:
    f = frame
    if len({f.x0, f.x1, f.x2}) != 3 or len({f.y0, f.y1, f.y2}) != 3:
        raise _violation(FRAME, "x0, x1, x2 and y0, y1, y2 must be distinct")
    rows = f.xl + f.shared_rows + f.xr
    cols = f.yl + f.shared_cols + f.yr
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise _violation(FRAME, "private label lists overlap the frame")
    if set(rows) & set(cols):
        raise _violation(FRAME, "row and column labels meet")
    if set(bl.row_labels) != set(f.left_rows) or set(bl.col_labels) != set(
        f.left_cols
    ):
        raise _violation(FRAME, "left summand labels do not match the frame")
    if set(br.row_labels) != set(f.right_rows) or set(br.col_labels) != set(
        f.right_cols
    ):
        raise _violation(FRAME, "right summand labels do not match the frame")


def normalize_frame(
    frame: Sum3Frame, d0: BinMatrix
) -> tuple[Sum3Frame, bool, bool]:
    """
    Reorder x0/x1 and y0/y1 so D0 takes a canonical form.

    ``d0`` is indexed by rows (x0, x1) and columns (y0, y1). The border
    conditions of a 3-sum do not change under either exchange.

    """
    cls = classify_invertible_2x2_gf2(d0)
    if cls.is_singular:
        raise _violation(D0_INVERTIBLE, f"D0 = {d0.to_rows()}")
    x0, x1 = cls.rows
    y0, y1 = cls.cols
    row_swap = cls.row_swapped(d0)
    col_swap = cls.col_swapped(d0)
    if row_swap or col_swap:
        logger.debug(
            "normalized D0 (%s) row_swap=%s col_swap=%s",
            cls.kind,
            row_swap,
            col_swap,
        )
    return replace(frame, x0=x0, x1=x1, y0=y0, y1=y1), row_swap, col_swap


def _expect(
    m: Matrix, rows, cols, values, condition: str, side: str
) -> None:
    got = [m[x, y] for x in rows for y in cols]
    if got != list(values):
        raise _violation(condition, f"{side} has {got}")


def validate_sum3(
    bl: StandardRepr, br: StandardRepr, frame: Sum3Frame
) -> Sum3Blocks:
    """
    Check the 3-sum conditions in the order of SUM3_CONDITIONS.
    """
    if not isinstance(bl.b, BinMatrix) or not isinstance(br.b, BinMatrix):
        raise _violation(FRAME, "3-sums are taken over GF(2)")
    left, right = bl.b, br.b
    _check_frame(left, right, frame)

    f = frame
    d0 = left.submatrix((f.x0, f.x1), (f.y0, f.y1))
    normalized, row_swap, col_swap = normalize_frame(f, d0)
    if d0.rows != right.submatrix((f.x0, f.x1), (f.y0, f.y1)).rows:
        raise _violation(D0_AGREEMENT, "left and right D0 differ")

    shared = (f.y0, f.y1, f.y2)
    _expect(left, [f.x2], shared, (1, 1, 0), LEFT_X2_ROW, "left")
    _expect(right, [f.x2], shared, (1, 1, 0), RIGHT_X2_ROW, "right")
    _expect(right, [f.x2], f.yr, [0] * len(f.yr), RIGHT_X2_REST, "right")
    _expect(left, [f.x1, f.x0], [f.y2], (1, 1), LEFT_Y2_COL, "left")
    _expect(left, f.xl, [f.y2], [0] * len(f.xl), LEFT_Y2_REST, "left")
    _expect(right, [f.x1, f.x0], [f.y2], (1, 1), RIGHT_Y2_COL, "right")

    d0_class = classify_invertible_2x2_gf2(
        left.submatrix(
            (normalized.x0, normalized.x1), (normalized.y0, normalized.y1)
        )
    )
    logger.debug(
        "3-sum validated: |Xl'|=%d |Yl'|=%d |Xr'|=%d |Yr'|=%d D0=%s",
        len(f.xl),
        len(f.yl),
        len(f.xr),
        len(f.yr),
        d0_class.kind,
    )
    return Sum3Blocks(bl, br, normalized, d0_class, row_swap, col_swap)


def assemble_sum3(bl: Matrix, br: Matrix, frame: Sum3Frame) -> Matrix:
    """
    Lay out [[Al, 0], [D, Ar]] with D = [[Dl, D0], [Dlr, Dr]] and
    Dlr = Dr D0^-1 Dl, computed in the field of the summands.
    """
    f = frame
    kind = type(bl)
    d0 = bl.submatrix((f.x0, f.x1), (f.y0, f.y1))
    if kind is BinMatrix:
        inverse = gf2_inverse_2x2(d0)
    else:
        inverse = rational_inverse_2x2(d0)
    d_l = bl.submatrix((f.x1, f.x0), f.yl)
    d_r = br.submatrix(f.xr, (f.y0, f.y1))
    d_lr = multiply(multiply(d_r, inverse), d_l)

    left_block = bl.submatrix(f.top_rows + (f.x1, f.x0), f.left_part_cols)
    right_block = br.submatrix(f.bottom_rows, f.right_part_cols)
    return from_blocks(
        kind,
        list(f.rows),
        list(f.cols),
        [left_block, right_block, d_r, d_lr],
    )


def sum3(blocks: Sum3Blocks) -> StandardRepr:
    result = assemble_sum3(blocks.bl.b, blocks.br.b, blocks.frame)
    logger.debug("sum3 assembled %dx%d", *result.shape)
    return StandardRepr(result)


def d0_support(q: Matrix, frame: Sum3Frame) -> BinMatrix:
    return support(q.submatrix((frame.x0, frame.x1), (frame.y0, frame.y1)))


__all__ = [
    "SUM3_CONDITIONS",
    "Sum3Blocks",
    "Sum3Frame",
    "coupling_block",
    "normalize_frame",
    "sum1",
    "sum2",
    "sum3",
    "validate_sum3",
]

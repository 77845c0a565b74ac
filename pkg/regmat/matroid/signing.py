# matroid/signing.py
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import logging

from ..errors import BadFactor, NotCanonicalForm, PartitionMismatch
from ..linalg.constants import TU_MINOR_LIMIT
from ..linalg.elimination import CANONICAL_2X2, IDENTITY_LIKE, TRIANGULAR_LIKE
from ..linalg.matrix import BinMatrix, Label, RatMatrix, support
from ..linalg.pivoting import PivotSpec
from ..linalg.unimodular import Signing, is_tu
from .matroid import StandardRepr
from .sums import (
    Sum3Frame,
    assemble_sum3,
    d0_support,
    normalize_frame,
    sum1,
    sum2,
    validate_sum3,
)

logger = logging.getLogger("regmat." + __name__)

CANONICAL_SIGNED_2X2 = {
    IDENTITY_LIKE: ((1, 0), (0, -1)),
    TRIANGULAR_LIKE: ((1, 1), (0, 1)),
}


# --------------------------------------------------------------------------- #
# Canonical signings of D0 and of the bordered 3x3 corner
# --------------------------------------------------------------------------- #


def _canonical_kind(d0: BinMatrix) -> str:
    grid = tuple(tuple(r) for r in d0.to_rows())
    for kind, form in CANONICAL_2X2.items():
        if grid == form:
            return kind
    logger.error("D0 %r is not in canonical form", grid)
    raise NotCanonicalForm(
        f"D0 = {grid} is neither [[1,0],[0,1]] nor [[1,1],[0,1]]"
    )


def canonical_signing_3x3(d0: BinMatrix) -> RatMatrix:
    """
    Signed D0: [[1,0],[0,-1]] for the identity form, [[1,1],[0,1]] for the
    triangular one. Labels are kept.
    """
    kind = _canonical_kind(d0)
    return RatMatrix.from_rows(
        CANONICAL_SIGNED_2X2[kind], d0.row_labels, d0.col_labels
    )


def bordered_pattern(d0: BinMatrix, frame: Sum3Frame) -> BinMatrix:
    """
    The GF(2) corner S on rows (x2, x1, x0) and columns (y0, y1, y2).
    """
    f = frame

    def entry(x: Label, y: Label) -> int:
        if x == f.x2:
            return 0 if y == f.y2 else 1
        if y == f.y2:
            return 1
        return d0[x, y]

    return BinMatrix.from_function(f.shared_rows, f.shared_cols, entry)


def canonical_signing_bordered(
    d0: BinMatrix, frame: Sum3Frame
) -> RatMatrix:
    """
    The signed corner S' on rows (x2, x1, x0) and columns (y0, y1, y2).

    ``d0`` is indexed by rows (x0, x1) and columns (y0, y1) of ``frame`` and
    must already be canonical.

    """
    signed = canonical_signing_3x3(d0)
    f = frame

    def entry(x: Label, y: Label) -> int:
        if x == f.x2:
            return 0 if y == f.y2 else 1
        if y == f.y2:
            return 1
        return signed[x, y]

    return RatMatrix.from_function(f.shared_rows, f.shared_cols, entry)


# --------------------------------------------------------------------------- #
# Canonical re-signing
# --------------------------------------------------------------------------- #


def _unit(q: RatMatrix, x: Label, y: Label) -> Fraction:
    value = q[x, y]
    if value not in (1, -1):
        logger.error("Re-signing factor q(%r, %r) = %s", x, y, value)
        raise BadFactor(
            f"entry ({x!r}, {y!r}) = {value} cannot serve as a sign factor"
        )
    return value


def resign_factors(
    q: RatMatrix, frame: Sum3Frame
) -> tuple[dict[Label, Fraction], dict[Label, Fraction]]:
    """
    Row factors u and column factors v of the canonical re-signing; labels
    outside the frame get factor 1 and are left out.
    """
    f = frame
    q20 = _unit(q, f.x2, f.y0)
    q21 = _unit(q, f.x2, f.y1)
    q00 = _unit(q, f.x0, f.y0)
    q02 = _unit(q, f.x0, f.y2)
    q12 = _unit(q, f.x1, f.y2)
    u = {f.x2: Fraction(1), f.x0: q20 * q00, f.x1: q20 * q00 * q02 * q12}
    v = {f.y0: q20, f.y1: q21, f.y2: q20 * q00 * q02}
    return u, v


def canonical_resign(q: RatMatrix, frame: Sum3Frame) -> RatMatrix:
    """
    Q'(i, j) = Q(i, j) u(i) v(j).

    Applied to a TU signing of a matrix carrying the bordered pattern on the
    frame, the 3x3 corner of the result is the canonical S'.

    """
    u, v = resign_factors(q, frame)
    logger.debug("canonical re-signing u=%r v=%r", u, v)
    return RatMatrix.from_function(
        q.row_labels,
        q.col_labels,
        lambda x, y: q[x, y] * u.get(x, 1) * v.get(y, 1),
    )


def canonical_signing_sum3(
    bl_signed: RatMatrix, br_signed: RatMatrix, frame: Sum3Frame
) -> RatMatrix:
    """
    Signed 3-sum B'' from TU signings of both summands.

    Both signings are re-signed canonically on the normalized frame and the
    blocks assembled over Q, with D''lr = D''r (D''0)^-1 D''l.

    """
    blocks = validate_sum3(
        StandardRepr(support(bl_signed)),
        StandardRepr(support(br_signed)),
        frame,
    )
    f = blocks.frame
    left = canonical_resign(bl_signed, f)
    right = canonical_resign(br_signed, f)
    result = assemble_sum3(left, right, f)
    logger.debug(
        "canonical signing of 3-sum: %dx%d D0=%s",
        *result.shape,
        blocks.d0_class.kind,
    )
    return result


def normalized_frame_of(b2: RatMatrix, frame: Sum3Frame) -> Sum3Frame:
    """
    Frame with x0/x1 and y0/y1 ordered so the support of D0 is canonical.
    """
    normalized, _, _ = normalize_frame(frame, d0_support(b2, frame))
    return normalized


# --------------------------------------------------------------------------- #
# Signing recipes for 1- and 2-sums
# --------------------------------------------------------------------------- #


def sum1_signing(ql: Signing, qr: Signing) -> Signing:
    signed = sum1(StandardRepr(ql.signed), StandardRepr(qr.signed))
    of = sum1(StandardRepr(ql.of), StandardRepr(qr.of))
    return Signing(signed.b, of.b, "sum1")


def sum2_signing(ql: Signing, qr: Signing, x: Label, y: Label) -> Signing:
    """
    Signed 2-sum of the signed summands; a signing of the GF(2) 2-sum.
    """
    signed = sum2(StandardRepr(ql.signed), StandardRepr(qr.signed), x, y)
    of = sum2(StandardRepr(ql.of), StandardRepr(qr.of), x, y)
    return Signing(signed.b, of.b, "sum2")


# --------------------------------------------------------------------------- #
# Matrix-like 3-sum class
# --------------------------------------------------------------------------- #

SHAPE = 1
LEFT_TU = 2
PARALLELS = 3
BOTTOM_TU = 4
AUX_TU = 5
COL0 = 6
COL1 = 7
MLS3_PROPERTIES = {
    SHAPE: "blocks [[Al, 0], [D, Ar]] with zero top-right",
    LEFT_TU: "[Al; D] is TU",
    PARALLELS: "D(Xr', j) in {0, +-c0, +-c1, +-(c0 - c1)}",
    BOTTOM_TU: "[c0 c1 c0-c1 Ar] is TU",
    AUX_TU: "[[Al, 0], [D(x0, Yl), 1], [D(x1, Yl), 1]] is TU",
    COL0: "c0(x0) = 1 and c0(x1) = 0",
    COL1: "c1(x0), c1(x1) is (0, -1) or (1, 1)",
}

_C0, _C1, _C2 = ("#c", 0), ("#c", 1), ("#c", 2)
_AUX = ("#aux",)


@dataclass(frozen=True)
class Mls3Class:
    """
    A family of matrices [[Al, 0], [D, Ar]] given by its label partition and
    two column vectors over the bottom rows (x1, x0) + xr.

    ``xl`` and ``yl`` are the rows and columns of Al; ``yr`` the columns of
    Ar.

    """

    xl: tuple[Label, ...]
    yl: tuple[Label, ...]
    xr: tuple[Label, ...]
    yr: tuple[Label, ...]
    x0: Label
    x1: Label
    c0: tuple[Fraction, ...]
    c1: tuple[Fraction, ...]

    @property
    def bottom(self) -> tuple[Label, ...]:
        return (self.x1, self.x0) + self.xr

    def vector(self, values: tuple[Fraction, ...]) -> dict[Label, Fraction]:
        return dict(zip(self.bottom, values))

    def after_pivot(self, p: PivotSpec) -> Mls3Class:
        """
        The same class with labels traded by a short pivot inside Al.
        """
        xl = tuple(p.col if x == p.row else x for x in self.xl)
        yl = tuple(p.row if y == p.col else y for y in self.yl)
        return Mls3Class(
            xl, yl, self.xr, self.yr, self.x0, self.x1, self.c0, self.c1
        )


@dataclass
class Mls3Report:
    """
    Per-property outcome of a class membership check.
    """

    results: dict[int, bool] = field(default_factory=dict)
    details: dict[int, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    @property
    def failed(self) -> list[int]:
        return [k for k, v in self.results.items() if not v]

    def __bool__(self) -> bool:
        return self.ok


def mls3_class_of(b2: RatMatrix, frame: Sum3Frame) -> Mls3Class:
    """
    The class a canonically signed 3-sum belongs to.

    ``frame`` is normalized first, so it may be given as written in the
    input.

    """
    f = normalized_frame_of(b2, frame)
    return Mls3Class(
        xl=f.top_rows,
        yl=f.left_part_cols,
        xr=f.xr,
        yr=f.right_part_cols,
        x0=f.x0,
        x1=f.x1,
        c0=tuple(b2[i, f.y0] for i in f.bottom_rows),
        c1=tuple(b2[i, f.y1] for i in f.bottom_rows),
    )


def _check_partition(c: RatMatrix, cls: Mls3Class) -> None:
    rows = cls.xl + cls.bottom
    cols = cls.yl + cls.yr
    if set(c.row_labels) != set(rows) or set(c.col_labels) != set(cols):
        logger.error(
            "Class partition %r/%r does not cover %r/%r",
            rows,
            cols,
            c.row_labels,
            c.col_labels,
        )
        raise PartitionMismatch("matrix labels do not match the class")
    if len(rows) != len(set(rows)) or len(cols) != len(set(cols)):
        raise PartitionMismatch("class partition repeats a label")
    if len(cls.c0) != len(cls.bottom) or len(cls.c1) != len(cls.bottom):
        raise PartitionMismatch("c0 and c1 must cover the bottom rows")


def _parallel_to_class(
    column: tuple[Fraction, ...], cls: Mls3Class
) -> bool:
    n = len(cls.xr)
    c0 = cls.c0[2:]
    c1 = cls.c1[2:]
    c2 = tuple(a - b for a, b in zip(c0, c1))
    allowed = {(Fraction(0),) * n}
    for vec in (c0, c1, c2):
        allowed.add(tuple(vec))
        allowed.add(tuple(-v for v in vec))
    return tuple(column) in allowed


def in_mls3_class(
    c: RatMatrix, cls: Mls3Class, limit: int = TU_MINOR_LIMIT
) -> Mls3Report:
    """
    Check the seven membership properties of a matrix-like 3-sum class.

    Every property is evaluated, so the report lists all failures rather
    than the first one.

    """
    _check_partition(c, cls)
    report = Mls3Report()
    bottom = cls.bottom

    top_right = c.submatrix(cls.xl, cls.yr)
    report.results[SHAPE] = top_right.is_zero()
    if not report.results[SHAPE]:
        report.details[SHAPE] = f"nonzero at {top_right.nonzero_positions()}"

    left = is_tu(c.submatrix(cls.xl + bottom, cls.yl), limit)
    report.results[LEFT_TU] = left.is_tu
    if left.witness is not None:
        report.details[LEFT_TU] = repr(left.witness)

    bad_cols = [
        y
        for y in cls.yl
        if not _parallel_to_class(tuple(c[i, y] for i in cls.xr), cls)
    ]
    report.results[PARALLELS] = not bad_cols
    if bad_cols:
        report.details[PARALLELS] = f"columns {bad_cols!r}"

    c0 = cls.vector(cls.c0)
    c1 = cls.vector(cls.c1)
    a_r = c.submatrix(bottom, cls.yr)

    def bordered(x: Label, y: Label) -> Fraction:
        if y == _C0:
            return c0[x]
        if y == _C1:
            return c1[x]
        if y == _C2:
            return c0[x] - c1[x]
        return a_r[x, y]

    extended = RatMatrix.from_function(
        bottom, (_C0, _C1, _C2) + cls.yr, bordered
    )
    bottom_tu = is_tu(extended, limit)
    report.results[BOTTOM_TU] = bottom_tu.is_tu
    if bottom_tu.witness is not None:
        report.details[BOTTOM_TU] = repr(bottom_tu.witness)

    aux_rows = cls.xl + (cls.x0, cls.x1)
    aux = RatMatrix.from_function(
        aux_rows,
        cls.yl + (_AUX,),
        lambda x, y: (0 if x in cls.xl else 1) if y == _AUX else c[x, y],
    )
    aux_tu = is_tu(aux, limit)
    report.results[AUX_TU] = aux_tu.is_tu
    if aux_tu.witness is not None:
        report.details[AUX_TU] = repr(aux_tu.witness)

    report.results[COL0] = c0[cls.x0] == 1 and c0[cls.x1] == 0
    report.results[COL1] = (c1[cls.x0], c1[cls.x1]) in ((0, -1), (1, 1))
    for prop in (COL0, COL1):
        if not report.results[prop]:
            report.details[prop] = (
                f"c0={c0[cls.x0]},{c0[cls.x1]} c1={c1[cls.x0]},{c1[cls.x1]}"
            )

    if report.ok:
        logger.debug("matrix is in its matrix-like 3-sum class")
    else:
        logger.warning(
            "class membership failed for properties %r", report.failed
        )
    return report


# --------------------------------------------------------------------------- #
# c and d vectors of a canonically signed 3-sum
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class ParallelVectors:
    """
    c0, c1 over the bottom rows and d0, d1 over the left columns of B''.
    """

    frame: Sum3Frame
    c0: dict[Label, Fraction]
    c1: dict[Label, Fraction]
    d0: dict[Label, Fraction]
    d1: dict[Label, Fraction]

    @property
    def c2(self) -> dict[Label, Fraction]:
        return {i: self.c0[i] - self.c1[i] for i in self.c0}

    @property
    def d2(self) -> dict[Label, Fraction]:
        return {j: self.d0[j] - self.d1[j] for j in self.d0}


def parallel_vectors(b2: RatMatrix, frame: Sum3Frame) -> ParallelVectors:
    f = normalized_frame_of(b2, frame)
    return ParallelVectors(
        f,
        {i: b2[i, f.y0] for i in f.bottom_rows},
        {i: b2[i, f.y1] for i in f.bottom_rows},
        {j: b2[f.x0, j] for j in f.left_part_cols},
        {j: b2[f.x1, j] for j in f.left_part_cols},
    )


def d_product(vectors: ParallelVectors, kind: str) -> RatMatrix:
    """
    D'' rebuilt from the c and d vectors for the given D0 form.
    """
    f = vectors.frame
    c0, c1, d0, d1 = vectors.c0, vectors.c1, vectors.d0, vectors.d1
    if kind == IDENTITY_LIKE:

        def entry(i: Label, j: Label) -> Fraction:
            return c0[i] * d0[j] - c1[i] * d1[j]

    else:

        def entry(i: Label, j: Label) -> Fraction:
            return c0[i] * d0[j] - c0[i] * d1[j] + c1[i] * d1[j]

    return RatMatrix.from_function(f.bottom_rows, f.left_part_cols, entry)


def bordered_c_matrix(
    qr: RatMatrix, frame: Sum3Frame, columns: tuple[int, ...]
) -> RatMatrix:
    """
    [c_a c_b ... A''r] on rows Xr of a canonically re-signed right summand;
    ``columns`` picks among c0, c1, c2 by index.
    """
    f = frame
    rows = f.right_rows
    c = {
        0: {i: qr[i, f.y0] for i in rows},
        1: {i: qr[i, f.y1] for i in rows},
    }
    c[2] = {i: c[0][i] - c[1][i] for i in rows}
    extra = tuple(("#c", k) for k in columns)
    a_r = qr.submatrix(rows, f.right_part_cols)
    return RatMatrix.from_function(
        rows,
        extra + f.right_part_cols,
        lambda x, y: c[y[1]][x] if y in extra else a_r[x, y],
    )


def bordered_d_matrix(
    ql: RatMatrix, frame: Sum3Frame, rows: tuple[int, ...]
) -> RatMatrix:
    """
    [A''l; d_a; d_b; ...] on columns Yl of a canonically re-signed left
    summand.
    """
    f = frame
    cols = f.left_cols
    d = {
        0: {j: ql[f.x0, j] for j in cols},
        1: {j: ql[f.x1, j] for j in cols},
    }
    d[2] = {j: d[0][j] - d[1][j] for j in cols}
    extra = tuple(("#d", k) for k in rows)
    a_l = ql.submatrix(f.top_rows, cols)
    return RatMatrix.from_function(
        f.top_rows + extra,
        cols,
        lambda x, y: d[x[1]][y] if x in extra else a_l[x, y],
    )


__all__ = [
    "MLS3_PROPERTIES",
    "Mls3Class",
    "Mls3Report",
    "ParallelVectors",
    "bordered_pattern",
    "canonical_resign",
    "canonical_signing_3x3",
    "canonical_signing_bordered",
    "canonical_signing_sum3",
    "in_mls3_class",
    "mls3_class_of",
    "parallel_vectors",
    "sum1_signing",
    "sum2_signing",
]

# blueprint/generators.py
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging
import random

from ..errors import NotTU, SizeLimitExceeded
from ..linalg.matrix import BinMatrix, Label, RatMatrix
from ..linalg.unimodular import find_tu_signing, is_tu, scale_cols, scale_rows
from ..matroid.graphs import Digraph, graphic_standard_repr
from ..matroid.matroid import StandardRepr
from ..matroid.sums import Sum3Frame
from .constants import SUM3_ATTEMPTS, SUM3_DENSITY, SUM3_PRIVATE_MAX

logger = logging.getLogger("regmat." + __name__)

INVERTIBLE_2X2 = (
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((1, 1), (0, 1)),
    ((1, 0), (1, 1)),
    ((0, 1), (1, 1)),
    ((1, 1), (1, 0)),
)


# --------------------------------------------------------------------------- #
# Rational matrices
# --------------------------------------------------------------------------- #


def random_fraction(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))


def random_rational_matrix(
    rng: random.Random, rows: int, cols: int
) -> RatMatrix:
    return RatMatrix.from_rows(
        [[random_fraction(rng) for _ in range(cols)] for _ in range(rows)]
    )


def random_pivot_instance(
    rng: random.Random, max_size: int, square: bool = False
) -> tuple[RatMatrix, Label, Label]:
    """
    Random rational matrix with a chosen nonzero entry.
    """
    m = rng.randint(1, max_size)
    n = m if square else rng.randint(1, max_size)
    a = random_rational_matrix(rng, m, n)
    i, j = rng.randrange(m), rng.randrange(n)
    if a.at(i, j) == 0:
        grid = a.to_rows()
        grid[i][j] = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))
        a = RatMatrix.from_rows(grid, a.row_labels, a.col_labels)
    return a, a.row_labels[i], a.col_labels[j]


# --------------------------------------------------------------------------- #
# TU matrices
# --------------------------------------------------------------------------- #


def random_digraph(rng: random.Random, nodes: int, edges: int) -> Digraph:
    names = tuple(f"v{i}" for i in range(nodes))
    arcs = []
    for k in range(edges):
        tail, head = rng.choice(names), rng.choice(names)
        arcs.append((f"e{k}", tail, head))
    return Digraph(names, tuple(arcs))


def random_signs(
    rng: random.Random, labels, allow_zero: bool = False
) -> dict[Label, int]:
    choices = (-1, 0, 1) if allow_zero else (-1, 1)
    return {label: rng.choice(choices) for label in labels}


def random_tu_matrix(
    rng: random.Random,
    max_rows: int,
    max_cols: int | None = None,
    allow_zero: bool = False,
) -> RatMatrix:
    """
    A TU matrix of at most max_rows x max_cols, never empty.

    Network matrices of random digraphs, optionally transposed, cut down to
    size and scaled by random signs. The result is checked with is_tu.

    """
    max_cols = max_rows if max_cols is None else max_cols
    while True:
        graph = random_digraph(
            rng, rng.randint(2, max_rows + 1), rng.randint(1, 2 * max_cols)
        )
        w = graphic_standard_repr(graph).witness.signed
        if rng.random() < 0.5:
            w = w.transpose()
        if not w.row_labels or not w.col_labels:
            continue
        rows = rng.sample(w.row_labels, min(len(w.row_labels), max_rows))
        cols = rng.sample(w.col_labels, min(len(w.col_labels), max_cols))
        a = w.submatrix(rows, cols)
        a = scale_rows(a, random_signs(rng, a.row_labels, allow_zero))
        a = scale_cols(a, random_signs(rng, a.col_labels, allow_zero))
        m, n = a.shape
        a = RatMatrix(
            tuple(f"r{i}" for i in range(m)),
            tuple(f"c{j}" for j in range(n)),
            a.entries,
        )
        report = is_tu(a)
        if not report:
            logger.error("generator produced non-TU matrix %r", a.to_rows())
            raise NotTU(f"generated matrix is not TU: {report.witness}")
        return a


def prefixed(a: RatMatrix | BinMatrix, prefix: str):
    """
    Relabel rows to ``<prefix>x<i>`` and columns to ``<prefix>y<j>``.
    """
    return a.relabel(
        {x: f"{prefix}x{i}" for i, x in enumerate(a.row_labels)},
        {y: f"{prefix}y{j}" for j, y in enumerate(a.col_labels)},
    )


def random_tu_repr(
    rng: random.Random, max_size: int, prefix: str
) -> StandardRepr:
    return StandardRepr(prefixed(random_tu_matrix(rng, max_size), prefix))


# --------------------------------------------------------------------------- #
# 2-sums
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class Sum2Instance:
    """
    TU summands over Q that share exactly row ``x`` and column ``y``.
    """

    bl: StandardRepr
    br: StandardRepr
    x: Label
    y: Label


def random_sum2_instance(rng: random.Random, max_size: int) -> Sum2Instance:
    while True:
        bl = random_tu_repr(rng, max_size, "l")
        br = random_tu_repr(rng, max_size, "r")
        rows_l = [x for x in bl.x if any(bl.b.row(x))]
        cols_r = [y for y in br.y if any(br.b.col(y))]
        if not rows_l or not cols_r:
            continue
        x = rng.choice(rows_l)
        y = rng.choice(bl.y)
        br_b = br.b.relabel(
            {rng.choice(br.x): x}, {rng.choice(cols_r): y}
        )
        return Sum2Instance(bl, StandardRepr(br_b), x, y)


# --------------------------------------------------------------------------- #
# 3-sums
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class Sum3Instance:
    """
    TU signings of two GF(2) summands that satisfy the 3-sum conditions.
    """

    frame: Sum3Frame
    bl_signed: RatMatrix
    br_signed: RatMatrix


def _frame(sizes: tuple[int, int, int, int]) -> Sum3Frame:
    xl, yl, xr, yr = sizes
    return Sum3Frame(
        "x0",
        "x1",
        "x2",
        "y0",
        "y1",
        "y2",
        xl=tuple(f"lx{i}" for i in range(xl)),
        yl=tuple(f"ly{j}" for j in range(yl)),
        xr=tuple(f"rx{i}" for i in range(xr)),
        yr=tuple(f"ry{j}" for j in range(yr)),
    )


def _patterned(
    rng: random.Random,
    frame: Sum3Frame,
    d0: tuple[tuple[int, int], tuple[int, int]],
    left: bool,
    density: float,
) -> BinMatrix:
    f = frame
    d0_at = {
        (f.x0, f.y0): d0[0][0],
        (f.x0, f.y1): d0[0][1],
        (f.x1, f.y0): d0[1][0],
        (f.x1, f.y1): d0[1][1],
    }
    private_cols = set(f.yr)

    def entry(x: Label, y: Label) -> int:
        if (x, y) in d0_at:
            return d0_at[x, y]
        if x == f.x2:
            if y in (f.y0, f.y1):
                return 1
            if y == f.y2 or y in private_cols:
                return 0
        if y == f.y2:
            if x in (f.x0, f.x1):
                return 1
            if left:
                return 0
        return 1 if rng.random() < density else 0

    if left:
        return BinMatrix.from_function(f.left_rows, f.left_cols, entry)
    return BinMatrix.from_function(f.right_rows, f.right_cols, entry)


def _signed_summand(
    rng: random.Random, frame: Sum3Frame, d0, left: bool, density: float
) -> RatMatrix | None:
    b = _patterned(rng, frame, d0, left, density)
    try:
        signing = find_tu_signing(b, nonzero_limit=0)
    except SizeLimitExceeded:
        return None
    return None if signing is None else signing.signed


def random_sum3_instance(
    rng: random.Random,
    max_private: int = SUM3_PRIVATE_MAX,
    attempts: int = SUM3_ATTEMPTS,
    density: float = SUM3_DENSITY,
) -> Sum3Instance:
    """
    Rejection-sample summands until both have TU signings.

    D0 is drawn from all six invertible 2x2 GF(2) matrices. After
    ``attempts`` failures the private blocks are dropped, which always
    succeeds.

    """
    d0 = rng.choice(INVERTIBLE_2X2)
    for attempt in range(attempts):
        sizes = tuple(rng.randint(0, max_private) for _ in range(4))
        frame = _frame(sizes)
        bl = _signed_summand(rng, frame, d0, True, density)
        if bl is None:
            continue
        br = _signed_summand(rng, frame, d0, False, density)
        if br is None:
            continue
        logger.debug(
            "3-sum instance after %d attempts: sizes=%r D0=%r",
            attempt + 1,
            sizes,
            d0,
        )
        return Sum3Instance(frame, bl, br)
    logger.warning("no regular 3-sum summands found; using empty blocks")
    frame = _frame((0, 0, 0, 0))
    return Sum3Instance(
        frame,
        _signed_summand(rng, frame, d0, True, density),
        _signed_summand(rng, frame, d0, False, density),
    )


__all__ = [
    "INVERTIBLE_2X2",
    "Sum2Instance",
    "Sum3Instance",
    "prefixed",
    "random_digraph",
    "random_fraction",
    "random_pivot_instance",
    "random_rational_matrix",
    "random_sum2_instance",
    "random_sum3_instance",
    "random_tu_matrix",
    "random_tu_repr",
]

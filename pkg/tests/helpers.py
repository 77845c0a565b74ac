from __future__ import annotations

from itertools import product
from pathlib import Path

from regmat.linalg.matrix import BinMatrix, RatMatrix
from regmat.matroid.graphs import Digraph
from regmat.matroid.sums import Sum3Frame

FIXTURES = Path(__file__).resolve().parent / "fixtures"

FANO = ((1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 1, 1))


def rat(rows, row_labels=None, col_labels=None) -> RatMatrix:
    return RatMatrix.from_rows(rows, row_labels, col_labels)


def gf2(rows, row_labels=None, col_labels=None) -> BinMatrix:
    return BinMatrix.from_rows(rows, row_labels, col_labels)


def grid(m) -> list[list[int]]:
    """
    Entries as plain ints, for comparing against literal lists.
    """
    return [[int(v) for v in row] for row in m.to_rows()]


def entries(m, rows, cols) -> list[list[int]]:
    """
    Entries read by label, so tests do not depend on axis order.
    """
    return [[int(m[x, y]) for y in cols] for x in rows]


# --------------------------------------------------------------------------- #
# K4 summands for 3-sums
# --------------------------------------------------------------------------- #

# Spanning star at n1. D0 on (x0, x1) x (y0, y1) is the identity.
STAR_EDGES = (
    ("x0", "n1", "n2"),
    ("x1", "n1", "n3"),
    ("x2", "n1", "n4"),
    ("y0", "n2", "n4"),
    ("y1", "n3", "n4"),
    ("y2", "n2", "n3"),
)

# Spanning path a-b-c-d. D0 on (x0, x1) x (y0, y1) is [[1, 1], [0, 1]].
PATH_EDGES = (
    ("x1", "a", "b"),
    ("x0", "b", "c"),
    ("x2", "c", "d"),
    ("y0", "b", "d"),
    ("y1", "a", "d"),
    ("y2", "a", "c"),
)


def k4_star() -> Digraph:
    return Digraph(("n1", "n2", "n3", "n4"), STAR_EDGES)


def k4_path() -> Digraph:
    return Digraph(("a", "b", "c", "d"), PATH_EDGES)


def k4_star_left() -> Digraph:
    """
    Star K4 plus node n5 hung off n1 by base edge p; q closes p and x0.
    """
    return Digraph(
        ("n1", "n2", "n3", "n4", "n5"),
        STAR_EDGES[:3]
        + (("p", "n1", "n5"),)
        + STAR_EDGES[3:]
        + (("q", "n5", "n2"),),
    )


def k4_star_right() -> Digraph:
    """
    Star K4 with y0 rerouted through node n5, reached from n2 by base edge
    r; s closes r, x0 and x1 and so avoids x2.
    """
    return Digraph(
        ("n1", "n2", "n3", "n4", "n5"),
        (
            ("x0", "n1", "n2"),
            ("x1", "n1", "n3"),
            ("x2", "n1", "n4"),
            ("r", "n2", "n5"),
            ("y0", "n5", "n4"),
            ("y1", "n3", "n4"),
            ("y2", "n2", "n3"),
            ("s", "n5", "n3"),
        ),
    )


def k4_frame(**private) -> Sum3Frame:
    return Sum3Frame("x0", "x1", "x2", "y0", "y1", "y2", **private)


def extended_frame() -> Sum3Frame:
    return k4_frame(xl=("p",), yl=("q",), xr=("r",), yr=("s",))


def triangle(x: str, other: str, y: str) -> Digraph:
    """
    Triangle u-v-w with base edges ``x`` and ``other`` and non-tree ``y``.
    """
    return Digraph(
        ("u", "v", "w"), ((x, "u", "v"), (other, "v", "w"), (y, "u", "w"))
    )


def sign_patterns(b: BinMatrix):
    """
    Every {0, +-1} matrix with support ``b``.
    """
    positions = b.nonzero_positions()
    for signs in product((1, -1), repeat=len(positions)):
        chosen = dict(zip(positions, signs))
        yield RatMatrix.from_function(
            b.row_labels, b.col_labels, lambda x, y: chosen.get((x, y), 0)
        )

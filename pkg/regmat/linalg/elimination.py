# linalg/elimination.py
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
import logging
from math import lcm, prod

from ..errors import NonSquare, ShapeMismatch, SingularMatrix
from .matrix import BinMatrix, Label, Matrix, RatMatrix

logger = logging.getLogger("regmat." + __name__)


# --------------------------------------------------------------------------- #
# Determinants
# --------------------------------------------------------------------------- #


def _require_square(m: Matrix) -> None:
    if not m.is_square:
        logger.error("Determinant of non-square %dx%d matrix", *m.shape)
        raise NonSquare(f"matrix is {m.shape[0]}x{m.shape[1]}, not square")


def bareiss(rows: list[list[int]]) -> int:
    """
    Fraction-free determinant of a square integer grid.

    The input grid is copied; 0x0 grids have determinant 1.

    """
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def det(m: RatMatrix) -> Fraction:
    """
    Exact determinant by Bareiss elimination after clearing denominators.
    """
    _require_square(m)
    scales = [lcm(*(v.denominator for v in r)) if r else 1 for r in m.entries]
    grid = [
        [v.numerator * (s // v.denominator) for v in r]
        for r, s in zip(m.entries, scales)
    ]
    value = Fraction(bareiss(grid), prod(scales))
    logger.debug("det %dx%d = %s", m.shape[0], m.shape[1], value)
    return value


def _permutation_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def det_by_permutations(m: RatMatrix) -> Fraction:
    """
    Literal permutation-sum determinant; factorial time, used as an oracle.
    """
    _require_square(m)
    n = m.shape[0]
    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction(_permutation_sign(perm))
        for i, j in enumerate(perm):
            term *= m.at(i, j)
            if not term:
                break
        total += term
    return total


# --------------------------------------------------------------------------- #
# Rank and GF(2) spaces
# --------------------------------------------------------------------------- #


def _rational_rank(rows: list[list[Fraction]]) -> int:
    a = [list(r) for r in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for j in range(ncols):
        pivot = next((i for i in range(rank, len(a)) if a[i][j] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, len(a)):
            if a[i][j]:
                factor = a[i][j] / a[rank][j]
                a[i] = [v - factor * w for v, w in zip(a[i], a[rank])]
        rank += 1
    return rank


def gf2_basis(vectors: list[int]) -> dict[int, int]:
    """
    Reduce bit vectors to an echelon basis keyed by leading bit.
    """
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return basis


def rank(m: Matrix) -> int:
    if isinstance(m, BinMatrix):
        value = len(gf2_basis(list(m.rows)))
    else:
        value = _rational_rank([list(r) for r in m.entries])
    logger.debug("rank field=%s shape=%s -> %d", m.field_tag, m.shape, value)
    return value


def rows_independent(m: Matrix) -> bool:
    return rank(m) == m.shape[0]


def row_space_gf2(b: BinMatrix) -> set[int]:
    """
    Every vector of the GF(2) row space, as bit vectors over column positions.
    """
    space = {0}
    for v in gf2_basis(list(b.rows)).values():
        space |= {w ^ v for w in space}
    return space


def null_space_gf2(b: BinMatrix) -> list[int]:
    """
    Basis of {v : b v = 0}, bit j of each vector indexing column position j.
    """
    n = b.shape[1]
    # reduced row echelon form, pivot columns chosen lowest bit first
    pivots: list[tuple[int, int]] = []
    for row in b.rows:
        for col, prow in pivots:
            if (row >> col) & 1:
                row ^= prow
        if not row:
            continue
        col = (row & -row).bit_length() - 1
        pivots = [(c, p ^ row if (p >> col) & 1 else p) for c, p in pivots]
        pivots.append((col, row))
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        v = 1 << free
        for col, prow in pivots:
            if (prow >> free) & 1:
                v |= 1 << col
        basis.append(v)
    logger.debug(
        "null space of %dx%d GF(2) matrix: dim %d", *b.shape, len(basis)
    )
    return basis


# --------------------------------------------------------------------------- #
# 2x2 blocks over GF(2)
# --------------------------------------------------------------------------- #

IDENTITY_LIKE = "identity"
TRIANGULAR_LIKE = "triangular"
SINGULAR = "singular"

CANONICAL_2X2 = {
    IDENTITY_LIKE: ((1, 0), (0, 1)),
    TRIANGULAR_LIKE: ((1, 1), (0, 1)),
}


@dataclass(frozen=True)
class Invertible2x2Class:
    """
    Result of classifying a 2x2 GF(2) block.

    ``rows`` and ``cols`` give the label order in which the block equals the
    canonical form of ``kind``; they are empty for singular blocks.

    """

    kind: str
    rows: tuple[Label, ...] = ()
    cols: tuple[Label, ...] = ()

    @property
    def is_singular(self) -> bool:
        return self.kind == SINGULAR

    def row_swapped(self, d0: BinMatrix) -> bool:
        return not self.is_singular and self.rows != d0.row_labels

    def col_swapped(self, d0: BinMatrix) -> bool:
        return not self.is_singular and self.cols != d0.col_labels


def _require_2x2(d0: BinMatrix) -> None:
    if d0.shape != (2, 2):
        logger.error("Expected a 2x2 block, got %dx%d", *d0.shape)
        raise ShapeMismatch(f"expected a 2x2 block, got {d0.shape}")


def classify_invertible_2x2_gf2(d0: BinMatrix) -> Invertible2x2Class:
    _require_2x2(d0)
    r0, r1 = d0.row_labels
    c0, c1 = d0.col_labels
    orders = [
        ((r0, r1), (c0, c1)),
        ((r0, r1), (c1, c0)),
        ((r1, r0), (c0, c1)),
        ((r1, r0), (c1, c0)),
    ]
    for kind, form in CANONICAL_2X2.items():
        for rows, cols in orders:
            grid = tuple(tuple(d0[x, y] for y in cols) for x in rows)
            if grid == form:
                logger.debug(
                    "2x2 block classified kind=%s rows=%r cols=%r",
                    kind,
                    rows,
                    cols,
                )
                return Invertible2x2Class(kind, rows, cols)
    return Invertible2x2Class(SINGULAR)


def gf2_inverse_2x2(d0: BinMatrix) -> BinMatrix:
    """
    Inverse of an invertible 2x2 block; rows and columns swap label roles.
    """
    _require_2x2(d0)
    (a, b), (c, d) = d0.to_rows()
    if (a * d + b * c) % 2 == 0:
        logger.error("Singular 2x2 GF(2) block %r", d0.to_rows())
        raise SingularMatrix("2x2 block is singular over GF(2)")
    # over GF(2) the adjugate is the inverse
    return BinMatrix.from_rows(
        [[d, b], [c, a]], row_labels=d0.col_labels, col_labels=d0.row_labels
    )


def rational_inverse_2x2(d0: RatMatrix) -> RatMatrix:
    if d0.shape != (2, 2):
        raise ShapeMismatch(f"expected a 2x2 block, got {d0.shape}")
    (a, b), (c, d) = d0.to_rows()
    value = a * d - b * c
    if value == 0:
        logger.error("Singular 2x2 rational block %r", d0.to_rows())
        raise SingularMatrix("2x2 block is singular")
    return RatMatrix.from_rows(
        [[d / value, -b / value], [-c / value, a / value]],
        row_labels=d0.col_labels,
        col_labels=d0.row_labels,
    )


def multiply(left: Matrix, right: Matrix) -> Matrix:
    """
    Matrix product matching ``left`` columns to ``right`` rows by label.
    """
    if type(left) is not type(right):
        raise ShapeMismatch("cannot multiply matrices over different fields")
    if set(left.col_labels) != set(right.row_labels):
        logger.error(
            "Inner labels differ: %r vs %r", left.col_labels, right.row_labels
        )
        raise ShapeMismatch("inner label sets of the product differ")
    inner = [(left.col_index(k), right.row_index(k)) for k in left.col_labels]
    if isinstance(left, BinMatrix):

        def _bit(i: int, j: int) -> int:
            return sum(left.at(i, a) & right.at(b, j) for a, b in inner) % 2

        return BinMatrix.from_function(
            left.row_labels, right.col_labels, _bit, positional=True
        )
    return RatMatrix.from_function(
        left.row_labels,
        right.col_labels,
        lambda i, j: sum(
            (left.at(i, a) * right.at(b, j) for a, b in inner), Fraction(0)
        ),
        positional=True,
    )

# linalg/pivoting.py
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging

from ..errors import FieldMismatch, ZeroPivot
from .elimination import det
from .matrix import Label, RatMatrix, adjoin_identity

logger = logging.getLogger("regmat." + __name__)


@dataclass(frozen=True)
class PivotSpec:
    """
    Pivot position given by row label ``row`` and column label ``col``.
    """

    row: Label
    col: Label


def _pivot_value(a: RatMatrix, p: PivotSpec) -> tuple[int, int, Fraction]:
    if not isinstance(a, RatMatrix):
        raise FieldMismatch("tableau pivots are defined over Q only")
    i, j = a.row_index(p.row), a.col_index(p.col)
    value = a.at(i, j)
    if value == 0:
        logger.error("Zero pivot at (%r, %r)", p.row, p.col)
        raise ZeroPivot(f"entry at ({p.row!r}, {p.col!r}) is zero")
    return i, j, value


def long_tableau_pivot(a: RatMatrix, p: PivotSpec) -> RatMatrix:
    """
    Row-reduce so the pivot column becomes the unit vector at the pivot row.
    """
    px, py, value = _pivot_value(a, p)
    logger.debug("long pivot at (%r, %r) value=%s", p.row, p.col, value)

    def entry(i: int, j: int) -> Fraction:
        if i == px:
            return a.at(px, j) / value
        return a.at(i, j) - a.at(i, py) * a.at(px, j) / value

    return RatMatrix.from_function(
        a.row_labels, a.col_labels, entry, positional=True
    )


def pivoted_labels(
    a: RatMatrix, p: PivotSpec
) -> tuple[tuple[Label, ...], tuple[Label, ...]]:
    """
    Label lists after a short pivot: row ``x`` and column ``y`` trade places.
    """
    rows = tuple(p.col if x == p.row else x for x in a.row_labels)
    cols = tuple(p.row if y == p.col else y for y in a.col_labels)
    return rows, cols


def short_tableau_pivot(a: RatMatrix, p: PivotSpec) -> RatMatrix:
    px, py, value = _pivot_value(a, p)
    logger.debug("short pivot at (%r, %r) value=%s", p.row, p.col, value)

    def entry(i: int, j: int) -> Fraction:
        if i == px and j == py:
            return 1 / value
        if i == px:
            return a.at(px, j) / value
        if j == py:
            return -a.at(i, py) / value
        return a.at(i, j) - a.at(i, py) * a.at(px, j) / value

    rows, cols = pivoted_labels(a, p)
    return RatMatrix.from_function(rows, cols, entry, positional=True)


def short_tableau_pivot_constructive(
    a: RatMatrix, p: PivotSpec
) -> RatMatrix:
    """
    Short pivot built in four steps.

    Adjoin the identity, long-pivot the result, put the pivoted identity
    column ``x`` where column ``y`` was, and drop the remaining identity
    columns.

    """
    _pivot_value(a, p)
    tableau = long_tableau_pivot(adjoin_identity(a), p)
    source = [p.row if y == p.col else y for y in a.col_labels]
    picked = tableau.submatrix(a.row_labels, source)
    rows, cols = pivoted_labels(a, p)
    return RatMatrix(rows, cols, picked.entries)


@dataclass(frozen=True)
class DetRatio:
    """
    Quantities related by |det_minor| = |det_before| / |pivot|.
    """

    det_before: Fraction
    det_minor: Fraction
    pivot: Fraction

    @property
    def holds(self) -> bool:
        return abs(self.det_minor) == abs(self.det_before) / abs(self.pivot)


def pivot_submatrix_det_ratio(
    a: RatMatrix, p: PivotSpec, pivot=short_tableau_pivot
) -> DetRatio:
    """
    Determinant of ``a`` against that of the pivoted matrix minus the pivot
    row and column.

    ``pivot`` may be swapped for another short-pivot implementation with the
    same label convention.

    """
    _, _, value = _pivot_value(a, p)
    after = pivot(a, p)
    rows = [x for x in after.row_labels if x != p.col]
    cols = [y for y in after.col_labels if y != p.row]
    result = DetRatio(det(a), det(after.submatrix(rows, cols)), value)
    logger.debug(
        "det ratio before=%s minor=%s pivot=%s",
        result.det_before,
        result.det_minor,
        result.pivot,
    )
    return result

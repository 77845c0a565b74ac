from __future__ import annotations

from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st
import pytest

from regmat.errors import FieldMismatch, UnknownLabel, ZeroPivot
from regmat.linalg.matrix import support
from regmat.linalg.pivoting import (
    PivotSpec,
    long_tableau_pivot,
    pivot_submatrix_det_ratio,
    pivoted_labels,
    short_tableau_pivot,
    short_tableau_pivot_constructive,
)

from .helpers import rat

half = Fraction(1, 2)


@pytest.fixture
def a():
    return rat([[2, 1], [1, 1]], ["x1", "x2"], ["y1", "y2"])


@st.composite
def pivot_instances(draw):
    m = draw(st.integers(min_value=1, max_value=4))
    n = draw(st.integers(min_value=1, max_value=4))
    values = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    rows = draw(
        st.lists(
            st.lists(values, min_size=n, max_size=n), min_size=m, max_size=m
        )
    )
    a = rat(rows)
    i = draw(st.integers(min_value=0, max_value=m - 1))
    j = draw(st.integers(min_value=0, max_value=n - 1))
    assume(a.at(i, j) != 0)
    return a, PivotSpec(a.row_labels[i], a.col_labels[j])


def test_long_pivot_keeps_labels(a):
    result = long_tableau_pivot(a, PivotSpec("x1", "y1"))

    assert result.row_labels == a.row_labels
    assert result.col_labels == a.col_labels
    assert result.to_rows() == [[1, half], [0, half]]


def test_short_pivot_exchanges_labels(a):
    result = short_tableau_pivot(a, PivotSpec("x1", "y1"))

    assert result.row_labels == ("y1", "x2")
    assert result.col_labels == ("x1", "y2")
    assert result.to_rows() == [[half, half], [-half, half]]


def test_pivoted_labels(a):
    assert pivoted_labels(a, PivotSpec("x2", "y2")) == (
        ("x1", "y2"),
        ("y1", "x2"),
    )


def test_zero_pivot_raises():
    a = rat([[0, 1]], ["x"], ["y1", "y2"])

    with pytest.raises(ZeroPivot):
        short_tableau_pivot(a, PivotSpec("x", "y1"))
    with pytest.raises(ZeroPivot):
        long_tableau_pivot(a, PivotSpec("x", "y1"))


def test_pivot_rejects_gf2_and_unknown_labels(a):
    with pytest.raises(FieldMismatch):
        short_tableau_pivot(support(a), PivotSpec("x1", "y1"))
    with pytest.raises(UnknownLabel):
        short_tableau_pivot(a, PivotSpec("x9", "y1"))


def test_det_ratio(a):
    ratio = pivot_submatrix_det_ratio(a, PivotSpec("x1", "y1"))

    assert ratio.det_before == 1
    assert ratio.det_minor == half
    assert ratio.pivot == 2
    assert ratio.holds


@settings(max_examples=80, deadline=None)
@given(pivot_instances())
def test_closed_form_matches_constructive_pivot(instance):
    a, p = instance

    assert short_tableau_pivot(a, p) == short_tableau_pivot_constructive(a, p)


@settings(max_examples=80, deadline=None)
@given(pivot_instances())
def test_short_pivot_is_an_involution(instance):
    a, p = instance

    once = short_tableau_pivot(a, p)
    twice = short_tableau_pivot(once, PivotSpec(p.col, p.row))

    assert twice == a


@settings(max_examples=60, deadline=None)
@given(pivot_instances())
def test_det_ratio_on_square_instances(instance):
    a, p = instance
    assume(a.is_square)

    assert pivot_submatrix_det_ratio(a, p).holds

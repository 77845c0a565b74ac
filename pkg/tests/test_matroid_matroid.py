from __future__ import annotations

from itertools import combinations

from hypothesis import given, settings, strategies as st
import pytest

from regmat.errors import (
    GroundMismatch,
    LabelOverlap,
    NotABase,
    NotTU,
    SizeLimitExceeded,
    UnknownLabel,
)
from regmat.linalg.matrix import support
from regmat.matroid.matroid import (
    Matroid,
    StandardRepr,
    bases,
    check_axioms,
    dual_matroid,
    dual_repr,
    find_base,
    first_difference,
    is_base,
    is_regular_via_tu_representation,
    matroids_equal,
    orthogonal_complement_labels,
    orthogonal_complement_standard,
    orthogonal_dual_matroid,
    regularity_certificate,
    row_space_dual_standard,
    row_space_labels,
    row_space_standard,
    same_support_check,
    standard_repr_matroid,
    standardize,
    vector_matroid,
)
from regmat.matroid.special import r10

from .helpers import FANO, gf2, grid, rat


@pytest.fixture
def line():
    """
    [1 | 1 1]: three parallel elements.
    """
    return StandardRepr(gf2([[1, 1]], ["x"], ["y1", "y2"]))


@st.composite
def gf2_reprs(draw, max_rows=3, max_cols=3):
    m = draw(st.integers(min_value=1, max_value=max_rows))
    n = draw(st.integers(min_value=1, max_value=max_cols))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, 1), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        )
    )
    return StandardRepr(
        gf2(
            rows,
            [f"x{i}" for i in range(m)],
            [f"y{j}" for j in range(n)],
        )
    )


def test_vector_matroid_of_rank_two_gf2_matrix():
    a = gf2([[1, 1, 0], [1, 0, 1], [0, 1, 1]])
    m = vector_matroid(a)

    for pair in combinations(a.col_labels, 2):
        assert m.is_independent(pair)
    assert not m.is_independent(a.col_labels)
    assert m.is_independent([])


def test_same_matrix_differs_over_q():
    a = rat([[1, 1, 0], [1, 0, 1], [0, 1, 1]])

    assert vector_matroid(a).is_independent(a.col_labels)


def test_unknown_labels_raise(line):
    m = standard_repr_matroid(line)

    with pytest.raises(UnknownLabel):
        m.is_independent(["nope"])


def test_standard_repr_rejects_overlap():
    with pytest.raises(LabelOverlap):
        StandardRepr(gf2([[1]], ["a"], ["a"]))


def test_standard_repr_matroid(line):
    m = standard_repr_matroid(line)

    assert line.ground == ("x", "y1", "y2")
    assert m.is_independent(["y2"])
    assert not m.is_independent(["y1", "y2"])
    assert find_base(m) == ("x",)
    assert is_base(m, ["y1"])
    assert not is_base(m, [])
    assert sorted(map(sorted, bases(m))) == [["x"], ["y1"], ["y2"]]


def test_dual_repr_negates_rationals():
    s = StandardRepr(rat([[1, -1]], ["x"], ["y1", "y2"]))

    d = dual_repr(s)

    assert d.x == ("y1", "y2")
    assert d.y == ("x",)
    assert grid(d.b) == [[-1], [1]]


def test_dual_matroid_matches_dual_repr(line):
    dual = dual_matroid(standard_repr_matroid(line))

    from_dual_repr = standard_repr_matroid(dual_repr(line))
    assert first_difference(dual, from_dual_repr) is None
    assert dual.is_independent(["y1", "y2"])


@settings(max_examples=40, deadline=None)
@given(gf2_reprs())
def test_dual_matroid_matches_dual_repr_on_random_reprs(s):
    assert matroids_equal(
        dual_matroid(standard_repr_matroid(s)),
        standard_repr_matroid(dual_repr(s)),
    )


def test_first_difference():
    a = vector_matroid(gf2([[1, 0], [0, 1]]))
    b = vector_matroid(gf2([[1, 1], [0, 0]]))

    assert first_difference(a, b) == frozenset({"c0", "c1"})
    assert first_difference(a, a) is None

    with pytest.raises(GroundMismatch):
        first_difference(a, vector_matroid(gf2([[1]])))


def test_limits_are_enforced(line):
    with pytest.raises(SizeLimitExceeded):
        bases(standard_repr_matroid(line), limit=2)


def test_standardize():
    a = rat([[1, 1, 0], [0, 1, 1]], ["r0", "r1"], ["a", "b", "c"])

    s = standardize(a, ["b", "a"])

    assert s.x == ("a", "b")
    assert s.y == ("c",)
    assert grid(s.b) == [[-1], [1]]


def test_standardize_errors():
    a = rat([[1, 1, 0], [0, 1, 1]], ["r0", "r1"], ["a", "b", "c"])

    with pytest.raises(NotABase):
        standardize(a, ["a"])
    with pytest.raises(NotTU):
        standardize(rat([[1, 1], [1, -1]]), ["c0", "c1"])


def test_same_support_of_two_standardizations():
    a = rat([[1, 1, 0], [0, 1, 1]], ["r0", "r1"], ["a", "b", "c"])
    flipped = rat([[0, 1, 1], [1, 1, 0]], ["r0", "r1"], ["a", "b", "c"])

    assert same_support_check(
        standardize(a, ["a", "c"]), standardize(flipped, ["a", "c"])
    )


def test_check_axioms_accepts_matroids(line):
    assert check_axioms(standard_repr_matroid(line)).ok
    assert check_axioms(standard_repr_matroid(r10())).ok


def test_check_axioms_finds_failures():
    not_hereditary = Matroid(("a", "b"), lambda s: len(s) != 1)
    no_augmentation = Matroid(
        ("a", "b", "c"),
        lambda s: s in {frozenset(), *map(frozenset, "abc"), frozenset("bc")},
    )
    empty_dependent = Matroid(("a",), lambda s: False)

    assert check_axioms(not_hereditary).failed == "hereditary"
    assert check_axioms(no_augmentation).failed == "augmentation"
    assert check_axioms(empty_dependent).failed == "empty"


def test_row_space_enumerations_agree(line):
    full = line.full()

    assert row_space_standard(line) == row_space_labels(full)
    assert orthogonal_complement_standard(line) == {
        frozenset(),
        frozenset({"x", "y1"}),
        frozenset({"x", "y2"}),
        frozenset({"y1", "y2"}),
    }
    assert orthogonal_complement_standard(line) == (
        orthogonal_complement_labels(full)
    )
    assert row_space_dual_standard(line) == orthogonal_complement_standard(
        line
    )


@settings(max_examples=30, deadline=None)
@given(gf2_reprs())
def test_orthogonal_dual_is_the_dual(s):
    assert matroids_equal(
        orthogonal_dual_matroid(s.full()),
        dual_matroid(standard_repr_matroid(s)),
    )


def test_regularity_certificates():
    cert = regularity_certificate(r10())

    assert cert is not None
    assert cert.representation.shape == (5, 10)
    assert regularity_certificate(StandardRepr(gf2(FANO))) is None


def test_tu_representation_is_regular():
    a = rat([[1, -1, 0], [0, 1, -1]])

    assert is_regular_via_tu_representation(a)
    assert not is_regular_via_tu_representation(rat([[1, 1], [1, -1]]))
    assert matroids_equal(vector_matroid(a), vector_matroid(support(a)))


def test_find_base_is_greedy_in_label_order():
    m = vector_matroid(rat([[1, 1]], None, ["b", "a"]))

    assert find_base(m) == ("a",)


def test_standardize_ignores_row_order():
    a = rat([[0, 1, 1], [1, 1, 0]], ["r1", "r0"], ["a", "b", "c"])

    s = standardize(a, ["b", "a"])

    assert s.x == ("a", "b")
    assert grid(s.b) == [[-1], [1]]

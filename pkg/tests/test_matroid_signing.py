from __future__ import annotations

from fractions import Fraction

import pytest

from regmat.errors import BadFactor, NotCanonicalForm, PartitionMismatch
from regmat.linalg.elimination import IDENTITY_LIKE, TRIANGULAR_LIKE
from regmat.linalg.matrix import support
from regmat.linalg.pivoting import PivotSpec, short_tableau_pivot
from regmat.linalg.unimodular import Signing, is_signing_of, is_tu
from regmat.matroid.graphs import graphic_standard_repr
from regmat.matroid.signing import (
    COL1,
    SHAPE,
    Mls3Class,
    bordered_c_matrix,
    bordered_d_matrix,
    bordered_pattern,
    canonical_resign,
    canonical_signing_3x3,
    canonical_signing_bordered,
    canonical_signing_sum3,
    d_product,
    in_mls3_class,
    mls3_class_of,
    parallel_vectors,
    resign_factors,
    sum1_signing,
    sum2_signing,
)
from regmat.matroid.sums import sum3, validate_sum3

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

SHARED_ROWS = ("x2", "x1", "x0")
SHARED_COLS = ("y0", "y1", "y2")


def witness(g):
    return graphic_standard_repr(g).witness.signed


def d0_of(q, frame):
    return support(q.submatrix((frame.x0, frame.x1), (frame.y0, frame.y1)))


def test_canonical_signing_3x3():
    identity = gf2([[1, 0], [0, 1]], ["x0", "x1"], ["y0", "y1"])
    triangular = gf2([[1, 1], [0, 1]], ["x0", "x1"], ["y0", "y1"])

    assert grid(canonical_signing_3x3(identity)) == [[1, 0], [0, -1]]
    assert grid(canonical_signing_3x3(triangular)) == [[1, 1], [0, 1]]
    assert canonical_signing_3x3(identity).row_labels == ("x0", "x1")

    with pytest.raises(NotCanonicalForm):
        canonical_signing_3x3(gf2([[0, 1], [1, 0]]))


def test_bordered_corner():
    d0 = gf2([[1, 0], [0, 1]], ["x0", "x1"], ["y0", "y1"])
    frame = k4_frame()

    assert grid(bordered_pattern(d0, frame)) == [
        [1, 1, 0],
        [0, 1, 1],
        [1, 0, 1],
    ]
    assert grid(canonical_signing_bordered(d0, frame)) == [
        [1, 1, 0],
        [0, -1, 1],
        [1, 0, 1],
    ]


@pytest.mark.parametrize("graph", [k4_star, k4_path])
def test_canonical_resign_gives_the_canonical_corner(graph):
    q = witness(graph())
    frame = k4_frame()

    resigned = canonical_resign(q, frame)

    corner = resigned.submatrix(SHARED_ROWS, SHARED_COLS)
    assert corner == canonical_signing_bordered(d0_of(q, frame), frame)
    assert is_tu(resigned)
    assert is_signing_of(resigned, support(q))


def test_resign_factors_need_unit_entries():
    q = rat(
        [[1, 0, 1], [0, 1, 1], [0, 1, 0]],
        ["x0", "x1", "x2"],
        ["y0", "y1", "y2"],
    )

    with pytest.raises(BadFactor):
        resign_factors(q, k4_frame())


def test_resign_factors_leave_x2_alone():
    u, v = resign_factors(witness(k4_star()), k4_frame())

    assert u["x2"] == 1
    assert set(u) == {"x0", "x1", "x2"}
    assert set(v) == {"y0", "y1", "y2"}


def test_canonical_signing_of_star_sum3():
    q = witness(k4_star())

    b2 = canonical_signing_sum3(q, q, k4_frame())

    assert entries(b2, SHARED_ROWS, SHARED_COLS) == [
        [1, 1, 0],
        [0, -1, 1],
        [1, 0, 1],
    ]


def test_canonical_signing_of_path_sum3():
    q = witness(k4_path())

    b2 = canonical_signing_sum3(q, q, k4_frame())

    assert entries(b2, SHARED_ROWS, SHARED_COLS) == [
        [1, 1, 0],
        [0, 1, 1],
        [1, 1, 1],
    ]
    assert is_tu(b2)


@pytest.fixture
def extended():
    left, right = witness(k4_star_left()), witness(k4_star_right())
    frame = extended_frame()
    blocks = validate_sum3(
        graphic_standard_repr(k4_star_left()).representation,
        graphic_standard_repr(k4_star_right()).representation,
        frame,
    )
    b2 = canonical_signing_sum3(left, right, frame)
    return left, right, frame, blocks, b2


def test_canonical_signing_with_private_blocks(extended):
    _, _, frame, blocks, b2 = extended

    assert is_signing_of(b2, sum3(blocks).b)
    assert is_tu(b2)
    report = in_mls3_class(b2, mls3_class_of(b2, frame))
    assert report.ok
    assert report.failed == []


def test_bordered_c_and_d_matrices_are_tu(extended):
    left, right, _, blocks, _ = extended
    f = blocks.frame
    ql, qr = canonical_resign(left, f), canonical_resign(right, f)

    for columns in ((0, 2), (1, 2), (0, 1, 2)):
        assert is_tu(bordered_c_matrix(qr, f, columns))
        assert is_tu(bordered_d_matrix(ql, f, columns))


def test_d_block_is_a_product_of_c_and_d_vectors(extended):
    _, _, frame, blocks, b2 = extended
    vectors = parallel_vectors(b2, frame)
    f = vectors.frame

    d = b2.submatrix(f.bottom_rows, f.left_part_cols)

    assert blocks.d0_class.kind == IDENTITY_LIKE
    assert d == d_product(vectors, IDENTITY_LIKE)
    for i in f.bottom_rows:
        assert vectors.c2[i] in (-1, 0, 1)


def test_d_product_triangular():
    q = witness(k4_path())
    b2 = canonical_signing_sum3(q, q, k4_frame())
    vectors = parallel_vectors(b2, k4_frame())
    f = vectors.frame

    d = b2.submatrix(f.bottom_rows, f.left_part_cols)

    assert d == d_product(vectors, TRIANGULAR_LIKE)


def test_mls3_class_of_star_sum3():
    q = witness(k4_star())
    b2 = canonical_signing_sum3(q, q, k4_frame())

    cls = mls3_class_of(b2, k4_frame())

    assert cls.xl == ("x2",)
    assert cls.yl == ("y0", "y1")
    assert cls.yr == ("y2",)
    assert cls.c0 == (0, 1)
    assert cls.c1 == (-1, 0)


def test_mls3_class_is_closed_under_pivots():
    q = witness(k4_star())
    b2 = canonical_signing_sum3(q, q, k4_frame())
    cls = mls3_class_of(b2, k4_frame())
    p = PivotSpec("x2", "y0")

    pivoted = short_tableau_pivot(b2, p)

    assert in_mls3_class(pivoted, cls.after_pivot(p)).ok


def test_mls3_report_lists_every_failure():
    q = witness(k4_star())
    b2 = canonical_signing_sum3(q, q, k4_frame())
    cls = mls3_class_of(b2, k4_frame())
    broken = rat(
        [[1, 1, 1], [0, -1, 1], [1, 0, 1]], SHARED_ROWS, SHARED_COLS
    )
    wrong_c1 = Mls3Class(
        cls.xl,
        cls.yl,
        cls.xr,
        cls.yr,
        cls.x0,
        cls.x1,
        cls.c0,
        (Fraction(1), Fraction(0)),
    )

    assert in_mls3_class(broken, cls).failed == [SHAPE]
    assert COL1 in in_mls3_class(b2, wrong_c1).failed


def test_mls3_partition_must_match():
    q = witness(k4_star())
    b2 = canonical_signing_sum3(q, q, k4_frame())
    cls = mls3_class_of(b2, k4_frame())

    with pytest.raises(PartitionMismatch):
        in_mls3_class(b2.submatrix(SHARED_ROWS[:2], SHARED_COLS), cls)


def test_sum1_and_sum2_signings():
    rows, cols = ["x0", "l1"], ["y2"]
    ql = Signing(rat([[1], [-1]], rows, cols), gf2([[1], [1]], rows, cols))
    qr = graphic_standard_repr(k4_star()).witness

    one = sum1_signing(
        Signing(rat([[-1]], ["a"], ["b"]), gf2([[1]], ["a"], ["b"])), qr
    )
    two = sum2_signing(ql, qr, "x0", "y2")

    assert one.method == "sum1"
    assert is_tu(one.signed)
    assert two.method == "sum2"
    assert is_signing_of(two.signed, two.of)
    assert is_tu(two.signed)

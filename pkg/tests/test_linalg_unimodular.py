from __future__ import annotations

from hypothesis import given, settings, strategies as st
import pytest

from regmat.errors import (
    BadFactor,
    FieldMismatch,
    LabelMismatch,
    SizeLimitExceeded,
)
from regmat.linalg.codec import read_matrix
from regmat.linalg.matrix import support
from regmat.linalg.unimodular import (
    Signing,
    find_tu_signing,
    is_k_pu,
    is_signing_of,
    is_tu,
    scale_cols,
    scale_rows,
)
from regmat.matroid.special import R10_ENTRIES

from .helpers import FANO, gf2, rat, sign_patterns

INTERVAL = [[1, 1, 0], [0, 1, 1], [0, 0, 1]]


def test_is_tu_reports_first_violating_minor():
    report = is_tu(rat([[1, 1], [1, -1]]))

    assert not report
    assert report.witness.rows == ("r0", "r1")
    assert report.witness.cols == ("c0", "c1")
    assert report.witness.det == -2


def test_is_tu_reports_bad_entries_as_1x1_witnesses():
    report = is_tu(rat([[1, 2]]))

    assert not report.is_tu
    assert report.witness.rows == ("r0",)
    assert report.witness.cols == ("c1",)
    assert report.witness.det == 2
    assert report.minors_checked == 2


def test_is_tu_witness_follows_label_order():
    a = rat([[1, 1], [1, -1], [1, 1]], ["r2", "r1", "r0"])

    report = is_tu(a)

    assert report.witness.rows == ("r0", "r1")
    assert report.witness.cols == ("c0", "c1")
    assert report.witness.det == -2
    # 6 entries, then the first 2x2 minor
    assert report.minors_checked == 7


def test_is_tu_bad_entry_follows_label_order():
    report = is_tu(rat([[2, 1, 3]], None, ["b", "a", "c"]))

    assert report.witness.cols == ("b",)
    assert report.minors_checked == 2


def test_is_tu_counts_every_minor():
    report = is_tu(rat(INTERVAL))

    # 9 entries + 9 minors of size 2 + 1 of size 3
    assert report.is_tu
    assert report.minors_checked == 19


def test_is_tu_respects_limit():
    with pytest.raises(SizeLimitExceeded) as excinfo:
        is_tu(rat(INTERVAL), limit=1)

    assert excinfo.value.limit == 1


def test_is_tu_is_rational_only():
    with pytest.raises(FieldMismatch):
        is_tu(gf2([[1]]))


def test_empty_matrix_is_tu():
    assert is_tu(rat([], [], ["y"]))


def test_is_k_pu():
    a = rat([[1, 1], [1, -1]])

    assert is_k_pu(a, 1)
    assert not is_k_pu(a, 2)
    assert is_k_pu(a, 3)
    assert is_k_pu(a, 0).minors_checked == 1


def test_scaling_keeps_tu_and_rejects_bad_factors():
    a = rat(INTERVAL, ["x1", "x2", "x3"], ["y1", "y2", "y3"])

    assert is_tu(scale_rows(a, {"x1": -1, "x3": 0}))
    assert is_tu(scale_cols(a, {"y2": -1}))

    with pytest.raises(BadFactor):
        scale_rows(a, {"x1": 2})


def test_is_signing_of():
    b = gf2([[1, 0], [1, 1]])

    assert is_signing_of(rat([[-1, 0], [1, -1]]), b)
    assert not is_signing_of(rat([[1, 1], [1, 1]]), b)

    with pytest.raises(LabelMismatch):
        is_signing_of(rat([[1, 0], [1, 1]], ["a", "b"]), b)


def test_signing_checks_its_support():
    with pytest.raises(LabelMismatch):
        Signing(rat([[1, 1]]), gf2([[1, 0]]))


def test_sign_patterns_cover_every_sign_choice():
    signings = list(sign_patterns(gf2([[1, 1], [0, 1]])))

    assert len(signings) == 8
    assert len({s.entries for s in signings}) == 8


def test_r10_has_a_tu_signing():
    b = gf2(R10_ENTRIES)

    signing = find_tu_signing(b)

    assert signing is not None
    assert is_signing_of(signing.signed, b)
    report = is_tu(signing.signed)
    assert report.is_tu
    assert report.minors_checked == 251


def test_fano_has_no_tu_signing():
    b = gf2(FANO)

    assert find_tu_signing(b) is None
    assert not any(is_tu(q) for q in sign_patterns(b))


def test_fano_over_the_exhaustive_limit_raises():
    with pytest.raises(SizeLimitExceeded):
        find_tu_signing(gf2(FANO), nonzero_limit=5)


def test_find_tu_signing_needs_gf2():
    with pytest.raises(FieldMismatch):
        find_tu_signing(rat([[1]]))


def test_signing_of_network_fixture(fixtures_dir):
    a = read_matrix(fixtures_dir / "network.mat")

    signing = find_tu_signing(support(a))

    assert signing.method == "forced"
    assert is_tu(signing.signed)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(0, 1), min_size=3, max_size=3),
        min_size=1,
        max_size=3,
    )
)
def test_found_signings_are_tu(rows):
    b = gf2(rows)

    signing = find_tu_signing(b)

    if signing is not None:
        assert is_signing_of(signing.signed, b)
        assert is_tu(signing.signed)
    else:
        assert not any(is_tu(q) for q in sign_patterns(b))

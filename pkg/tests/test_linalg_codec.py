from __future__ import annotations

from fractions import Fraction

import pytest

from regmat.errors import ParseError
from regmat.linalg.codec import (
    decode_matrix,
    encode_matrix,
    read_matrix,
    write_matrix,
)
from regmat.linalg.matrix import BinMatrix, RatMatrix

from .helpers import gf2, rat


def test_encode_rational_matrix():
    a = rat([["1/2", -3], [0, "4/2"]], ["x1", "x2"], ["y1", "y2"])

    assert encode_matrix(a) == "Q\nx1 x2\ny1 y2\n1/2 -3\n0 2\n"


def test_encode_gf2_matrix():
    b = gf2([[1, 0], [0, 1]], ["x1", "x2"], ["y1", "y2"])

    assert encode_matrix(b) == "GF2\nx1 x2\ny1 y2\n1 0\n0 1\n"


def test_decode_ignores_comments_and_trailing_blank_lines():
    text = "# a comment\nQ\nx1\ny1 y2\n# inline\n3/6 -1\n\n\n"

    a = decode_matrix(text)

    assert isinstance(a, RatMatrix)
    assert a["x1", "y1"] == Fraction(1, 2)
    assert a["x1", "y2"] == -1


def test_decode_is_bit_exact_against_encode(fixtures_dir):
    text = (fixtures_dir / "r10.mat").read_text()
    b = decode_matrix(text)

    assert isinstance(b, BinMatrix)
    assert encode_matrix(b) == text


def test_decode_empty_dimensions():
    a = decode_matrix("Q\n\ny1 y2\n")

    assert a.shape == (0, 2)
    assert decode_matrix("GF2\n").shape == (0, 0)


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty matrix file"),
        ("Z\nx\ny\n1\n", "line 1: unknown field tag"),
        ("Q\nx\ny1 y2\n1\n", "line 4: expected 2 entries, got 1"),
        ("Q\nx\ny\n1\n2\n", "line 5: unexpected extra row"),
        ("GF2\nx\ny\n2\n", "not a GF(2) entry"),
        ("Q\nx\ny\nabc\n", "not a rational number"),
        ("Q\nx x\ny\n1\n1\n", "duplicate row labels"),
    ],
)
def test_decode_errors(text, message):
    with pytest.raises(ParseError) as excinfo:
        decode_matrix(text)

    assert message in str(excinfo.value)


def test_encode_rejects_labels_with_spaces():
    a = rat([[1]], ["two words"], ["y"])

    with pytest.raises(ParseError):
        encode_matrix(a)


def test_write_and_read_matrix(tmp_path):
    a = rat([["-7/3"]], ["x"], ["y"])
    path = tmp_path / "a.mat"

    write_matrix(path, a)

    assert read_matrix(path) == a


def test_read_matrix_rejects_undecodable_bytes(tmp_path):
    path = tmp_path / "bad.mat"
    path.write_bytes(b"Q\nr\xff0\nc0\n1\n")

    with pytest.raises(ParseError, match="not valid UTF-8 at byte 3"):
        read_matrix(path)

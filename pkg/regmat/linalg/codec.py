# linalg/codec.py
from __future__ import annotations

import logging

from ..errors import ParseError, RegmatError
from .constants import FIELD_GF2, FIELD_Q, FIELDS
from .matrix import BinMatrix, Label, Matrix, RatMatrix, to_bit, to_fraction

logger = logging.getLogger("regmat." + __name__)

COMMENT_PREFIX = "#"


# --------------------------------------------------------------------------- #
# Matrix text format
# --------------------------------------------------------------------------- #


def _format_label(label: Label) -> str:
    text = str(label)
    if not text or any(ch.isspace() for ch in text):
        logger.error("Label %r cannot be written as a single token", label)
        raise ParseError(f"label {label!r} is not a single token")
    return text


def encode_matrix(m: Matrix) -> str:
    """
    Serialize a matrix to the shared text format:

        <field>
        <row labels>
        <column labels>
        <one line of entries per row>

    Rationals are written in reduced form ``a/b`` (or ``a`` when integral),
    so encoding is bit-exact.

    """
    lines = [
        m.field_tag,
        " ".join(_format_label(x) for x in m.row_labels),
        " ".join(_format_label(y) for y in m.col_labels),
    ]
    for row in m.to_rows():
        lines.append(" ".join(str(v) for v in row))
    logger.debug("encode_matrix field=%s shape=%s", m.field_tag, m.shape)
    return "\n".join(lines) + "\n"


def decode_matrix(text: str) -> Matrix:
    """
    Parse the shared matrix text format.

    Lines starting with ``#`` are comments. Trailing blank lines are ignored,
    which also means label lines or rows that would be empty may be left off
    at the end of the file.

    """
    numbered = [
        (n, line.strip())
        for n, line in enumerate(text.splitlines(), start=1)
        if not line.strip().startswith(COMMENT_PREFIX)
    ]
    while numbered and not numbered[-1][1]:
        numbered.pop()
    if not numbered:
        raise ParseError("empty matrix file")

    field_line, field = numbered[0]
    if field not in FIELDS:
        logger.error("Unknown field tag %r", field)
        raise ParseError(f"unknown field tag {field!r}", line=field_line)

    def line_at(k: int) -> tuple[int | None, str]:
        if k < len(numbered):
            return numbered[k]
        return None, ""

    row_labels = line_at(1)[1].split()
    col_labels = line_at(2)[1].split()
    expected = 3 + len(row_labels)
    if len(numbered) > expected:
        extra_line = numbered[expected][0]
        raise ParseError("unexpected extra row", line=extra_line)

    grid: list[list[str]] = []
    for k in range(3, expected):
        n, line = line_at(k)
        tokens = line.split()
        if len(tokens) != len(col_labels):
            raise ParseError(
                f"expected {len(col_labels)} entries, got {len(tokens)}",
                line=n,
            )
        grid.append(tokens)

    try:
        if field == FIELD_GF2:
            parsed = BinMatrix.from_rows(
                [[to_bit(v) for v in r] for r in grid], row_labels, col_labels
            )
        else:
            parsed = RatMatrix.from_rows(
                [[to_fraction(v) for v in r] for r in grid],
                row_labels,
                col_labels,
            )
    except RegmatError as exc:
        raise ParseError(str(exc)) from exc

    logger.debug("decode_matrix field=%s shape=%s", field, parsed.shape)
    return parsed


def read_text(path) -> str:
    """
    Read an input file as UTF-8; undecodable bytes are a parse error.
    """
    with open(path, encoding="utf-8") as fh:
        try:
            return fh.read()
        except UnicodeDecodeError as exc:
            logger.error("%s is not valid UTF-8: %s", path, exc)
            raise ParseError(
                f"{path}: not valid UTF-8 at byte {exc.start}"
            ) from exc


def read_matrix(path) -> Matrix:
    return decode_matrix(read_text(path))


def write_matrix(path, m: Matrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(encode_matrix(m))


__all__ = [
    "FIELD_GF2",
    "FIELD_Q",
    "decode_matrix",
    "encode_matrix",
    "read_matrix",
    "read_text",
    "write_matrix",
]

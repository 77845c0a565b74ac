# linalg/matrix.py
from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
import logging
from typing import Any, ClassVar, Union

from ..errors import DuplicateLabel, FieldMismatch, ShapeMismatch, UnknownLabel
from .constants import COL_PREFIX, FIELD_GF2, FIELD_Q, ROW_PREFIX

logger = logging.getLogger("regmat." + __name__)

Label = Hashable
Matrix = Union["RatMatrix", "BinMatrix"]

ZERO = Fraction(0)
ONE = Fraction(1)


def default_labels(prefix: str, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(count))


def label_order(labels: Sequence[Label]) -> list[int]:
    """
    Axis positions sorted by label.

    Labels of different types are ordered by type name first, then by
    ``repr`` when they still cannot be compared.

    """
    try:
        return sorted(range(len(labels)), key=lambda i: labels[i])
    except TypeError:
        return sorted(
            range(len(labels)),
            key=lambda i: (type(labels[i]).__name__, repr(labels[i])),
        )


def _check_distinct(labels: Iterable[Label], axis: str) -> tuple[Label, ...]:
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        seen: set[Label] = set()
        dupes = [x for x in labels if x in seen or seen.add(x)]
        logger.error("Duplicate %s labels: %r", axis, dupes)
        raise DuplicateLabel(f"duplicate {axis} labels: {dupes!r}")
    return labels


def _multiset_labels(labels: Sequence[Label]) -> tuple[Label, ...]:
    """
    Make repeated labels distinct: the k-th repeat of ``a`` becomes (a, k).
    """
    counts: dict[Label, int] = {}
    out: list[Label] = []
    for label in labels:
        k = counts.get(label, 0)
        counts[label] = k + 1
        out.append(label if k == 0 else (label, k))
    return tuple(out)


def to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, float):
        raise FieldMismatch("floating-point entries are not supported")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FieldMismatch(f"not a rational number: {value!r}") from exc


def to_bit(value: Any) -> int:
    if isinstance(value, str):
        value = value.strip()
    try:
        bit = to_fraction(value)
    except FieldMismatch as exc:
        raise FieldMismatch(f"not a GF(2) entry: {value!r}") from exc
    if bit not in (0, 1):
        raise FieldMismatch(f"not a GF(2) entry: {value!r}")
    return int(bit)


class _Labeled:
    """
    Label bookkeeping shared by RatMatrix and BinMatrix.

    Positional indexing is derived from the label lists, never primary.

    """

    row_labels: tuple[Label, ...]
    col_labels: tuple[Label, ...]
    field_tag: ClassVar[str]

    def _init_positions(self) -> None:
        rows = _check_distinct(self.row_labels, "row")
        cols = _check_distinct(self.col_labels, "column")
        object.__setattr__(self, "row_labels", rows)
        object.__setattr__(self, "col_labels", cols)
        object.__setattr__(
            self, "_row_pos", {x: i for i, x in enumerate(rows)}
        )
        object.__setattr__(
            self, "_col_pos", {y: j for j, y in enumerate(cols)}
        )

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    @property
    def is_square(self) -> bool:
        return len(self.row_labels) == len(self.col_labels)

    def has_row(self, label: Label) -> bool:
        return label in self._row_pos

    def has_col(self, label: Label) -> bool:
        return label in self._col_pos

    def row_index(self, label: Label) -> int:
        try:
            return self._row_pos[label]
        except KeyError:
            logger.error("Unknown row label %r", label)
            raise UnknownLabel(f"unknown row label {label!r}") from None

    def col_index(self, label: Label) -> int:
        try:
            return self._col_pos[label]
        except KeyError:
            logger.error("Unknown column label %r", label)
            raise UnknownLabel(f"unknown column label {label!r}") from None

    def __getitem__(self, key: tuple[Label, Label]) -> Any:
        row, col = key
        return self.at(self.row_index(row), self.col_index(col))

    def at(self, i: int, j: int) -> Any:  # pragma: no cover - abstract
        raise NotImplementedError

    def to_rows(self) -> list[list[Any]]:
        m, n = self.shape
        return [[self.at(i, j) for j in range(n)] for i in range(m)]

    def row(self, label: Label) -> tuple[Any, ...]:
        i = self.row_index(label)
        return tuple(self.at(i, j) for j in range(len(self.col_labels)))

    def col(self, label: Label) -> tuple[Any, ...]:
        j = self.col_index(label)
        return tuple(self.at(i, j) for i in range(len(self.row_labels)))

    def nonzero_positions(self) -> list[tuple[Label, Label]]:
        return [
            (x, y)
            for i, x in enumerate(self.row_labels)
            for j, y in enumerate(self.col_labels)
            if self.at(i, j) != 0
        ]

    def is_zero(self) -> bool:
        return not self.nonzero_positions()

    def submatrix(
        self,
        rows: Sequence[Label] | None = None,
        cols: Sequence[Label] | None = None,
        multiset: bool = False,
    ):
        """
        Restrict and reorder to the given labels.

        Repeated labels are only accepted in multiset mode, where the k-th
        repeat of a label ``a`` is relabelled ``(a, k)`` in the result.

        """
        rows = self.row_labels if rows is None else tuple(rows)
        cols = self.col_labels if cols is None else tuple(cols)
        ri = [self.row_index(x) for x in rows]
        ci = [self.col_index(y) for y in cols]
        if multiset:
            out_rows, out_cols = _multiset_labels(rows), _multiset_labels(cols)
        else:
            out_rows, out_cols = rows, cols
        logger.debug(
            "submatrix field=%s rows=%d cols=%d multiset=%s",
            self.field_tag,
            len(rows),
            len(cols),
            multiset,
        )
        return type(self).from_function(
            out_rows,
            out_cols,
            lambda r, c: self.at(ri[r], ci[c]),
            positional=True,
        )

    def transpose(self):
        return type(self).from_function(
            self.col_labels,
            self.row_labels,
            lambda r, c: self.at(c, r),
            positional=True,
        )

    def relabel(
        self,
        row_map: dict[Label, Label] | None = None,
        col_map: dict[Label, Label] | None = None,
    ):
        row_map = row_map or {}
        col_map = col_map or {}
        for label in row_map:
            self.row_index(label)
        for label in col_map:
            self.col_index(label)
        rows = [row_map.get(x, x) for x in self.row_labels]
        cols = [col_map.get(y, y) for y in self.col_labels]
        return type(self).from_function(
            rows, cols, lambda r, c: self.at(r, c), positional=True
        )

    @classmethod
    def from_function(
        cls,
        row_labels: Iterable[Label],
        col_labels: Iterable[Label],
        fn: Callable[[Any, Any], Any],
        positional: bool = False,
    ):  # pragma: no cover - abstract
        raise NotImplementedError


@dataclass(frozen=True)
class RatMatrix(_Labeled):
    """
    Exact rational matrix with ordered row and column labels.
    """

    row_labels: tuple[Label, ...]
    col_labels: tuple[Label, ...]
    entries: tuple[tuple[Fraction, ...], ...]
    _row_pos: dict = field(init=False, repr=False, compare=False)
    _col_pos: dict = field(init=False, repr=False, compare=False)

    field_tag: ClassVar[str] = FIELD_Q

    def __post_init__(self):
        self._init_positions()
        m, n = len(self.row_labels), len(self.col_labels)
        if len(self.entries) != m or any(len(r) != n for r in self.entries):
            logger.error(
                "RatMatrix shape mismatch labels=%dx%d entries=%r",
                m,
                n,
                [len(r) for r in self.entries],
            )
            raise ShapeMismatch(
                f"entries do not match {m}x{n} label lists"
            )
        object.__setattr__(
            self,
            "entries",
            tuple(tuple(to_fraction(v) for v in r) for r in self.entries),
        )

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Any]],
        row_labels: Iterable[Label] | None = None,
        col_labels: Iterable[Label] | None = None,
    ) -> RatMatrix:
        rows = [list(r) for r in rows]
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if col_labels is not None:
            col_labels = tuple(col_labels)
            if not rows:
                n = len(col_labels)
        row_labels = (
            default_labels(ROW_PREFIX, m) if row_labels is None else row_labels
        )
        col_labels = (
            default_labels(COL_PREFIX, n) if col_labels is None else col_labels
        )
        grid = tuple(tuple(r) for r in rows)
        return cls(tuple(row_labels), tuple(col_labels), grid)

    @classmethod
    def from_function(
        cls,
        row_labels: Iterable[Label],
        col_labels: Iterable[Label],
        fn: Callable[[Any, Any], Any],
        positional: bool = False,
    ) -> RatMatrix:
        rows = tuple(row_labels)
        cols = tuple(col_labels)
        if positional:
            grid = tuple(
                tuple(fn(i, j) for j in range(len(cols)))
                for i in range(len(rows))
            )
        else:
            grid = tuple(tuple(fn(x, y) for y in cols) for x in rows)
        return cls(rows, cols, grid)

    @classmethod
    def zeros(
        cls, row_labels: Iterable[Label], col_labels: Iterable[Label]
    ) -> RatMatrix:
        return cls.from_function(row_labels, col_labels, lambda x, y: ZERO)

    @classmethod
    def identity(cls, labels: Iterable[Label]) -> RatMatrix:
        labels = tuple(labels)
        return cls.from_function(
            labels, labels, lambda x, y: ONE if x == y else ZERO
        )

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def __neg__(self) -> RatMatrix:
        return self.map(lambda v: -v)

    def map(self, fn: Callable[[Fraction], Any]) -> RatMatrix:
        return RatMatrix(
            self.row_labels,
            self.col_labels,
            tuple(tuple(fn(v) for v in r) for r in self.entries),
        )

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for r in self.entries for v in r)

    def int_rows(self) -> list[list[int]]:
        """
        Entries as Python ints; only valid for integral matrices.
        """
        return [[v.numerator for v in r] for r in self.entries]


@dataclass(frozen=True)
class BinMatrix(_Labeled):
    """
    GF(2) matrix with ordered labels, stored as bit-packed rows.

    Bit ``j`` of ``rows[i]`` is the entry in column position ``j``.

    """

    row_labels: tuple[Label, ...]
    col_labels: tuple[Label, ...]
    rows: tuple[int, ...]
    _row_pos: dict = field(init=False, repr=False, compare=False)
    _col_pos: dict = field(init=False, repr=False, compare=False)

    field_tag: ClassVar[str] = FIELD_GF2

    def __post_init__(self):
        self._init_positions()
        m, n = len(self.row_labels), len(self.col_labels)
        if len(self.rows) != m or any(r < 0 or r >> n for r in self.rows):
            logger.error("BinMatrix shape mismatch labels=%dx%d", m, n)
            raise ShapeMismatch(f"bit rows do not match {m}x{n} label lists")
        object.__setattr__(self, "rows", tuple(self.rows))

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Any]],
        row_labels: Iterable[Label] | None = None,
        col_labels: Iterable[Label] | None = None,
    ) -> BinMatrix:
        rows = [list(r) for r in rows]
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if col_labels is not None:
            col_labels = tuple(col_labels)
            if not rows:
                n = len(col_labels)
        if any(len(r) != n for r in rows):
            raise ShapeMismatch("ragged rows")
        packed = tuple(
            sum(to_bit(v) << j for j, v in enumerate(r)) for r in rows
        )
        row_labels = (
            default_labels(ROW_PREFIX, m) if row_labels is None else row_labels
        )
        col_labels = (
            default_labels(COL_PREFIX, n) if col_labels is None else col_labels
        )
        return cls(tuple(row_labels), tuple(col_labels), packed)

    @classmethod
    def from_function(
        cls,
        row_labels: Iterable[Label],
        col_labels: Iterable[Label],
        fn: Callable[[Any, Any], Any],
        positional: bool = False,
    ) -> BinMatrix:
        rows = tuple(row_labels)
        cols = tuple(col_labels)
        packed = []
        for i, x in enumerate(rows):
            bits = 0
            for j, y in enumerate(cols):
                if to_bit(fn(i, j) if positional else fn(x, y)):
                    bits |= 1 << j
            packed.append(bits)
        return cls(rows, cols, tuple(packed))

    @classmethod
    def zeros(
        cls, row_labels: Iterable[Label], col_labels: Iterable[Label]
    ) -> BinMatrix:
        rows = tuple(row_labels)
        return cls(rows, tuple(col_labels), (0,) * len(rows))

    @classmethod
    def identity(cls, labels: Iterable[Label]) -> BinMatrix:
        labels = tuple(labels)
        return cls(labels, labels, tuple(1 << i for i in range(len(labels))))

    def at(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column_mask(self, cols: Iterable[Label]) -> int:
        mask = 0
        for y in cols:
            mask |= 1 << self.col_index(y)
        return mask


def support(m: Matrix) -> BinMatrix:
    """
    Entrywise 0 -> 0, nonzero -> 1; a BinMatrix is its own support.
    """
    if isinstance(m, BinMatrix):
        return m
    return BinMatrix.from_function(
        m.row_labels,
        m.col_labels,
        lambda i, j: 1 if m.at(i, j) != 0 else 0,
        positional=True,
    )


def embed(b: BinMatrix) -> RatMatrix:
    """
    Read the 0/1 entries of a GF(2) matrix as rationals.
    """
    return RatMatrix.from_function(
        b.row_labels, b.col_labels, lambda i, j: b.at(i, j), positional=True
    )


def transpose(m: Matrix) -> Matrix:
    return m.transpose()


def submatrix(
    m: Matrix,
    rows: Sequence[Label] | None = None,
    cols: Sequence[Label] | None = None,
    multiset: bool = False,
) -> Matrix:
    return m.submatrix(rows, cols, multiset=multiset)


def stack_columns(*blocks: Matrix) -> Matrix:
    """
    [A | B | ...] for blocks sharing one row label list.
    """
    first = blocks[0]
    kind = type(first)
    cols: list[Label] = []
    owners: list[tuple[Matrix, int]] = []
    for block in blocks:
        if type(block) is not kind:
            raise FieldMismatch("cannot stack matrices over different fields")
        if block.row_labels != first.row_labels:
            raise ShapeMismatch("column blocks must share row labels")
        for j, y in enumerate(block.col_labels):
            cols.append(y)
            owners.append((block, j))
    return kind.from_function(
        first.row_labels,
        cols,
        lambda i, j: owners[j][0].at(i, owners[j][1]),
        positional=True,
    )


def stack_rows(*blocks: Matrix) -> Matrix:
    """
    [A; B; ...] for blocks sharing one column label list.
    """
    transposed = stack_columns(*(b.transpose() for b in blocks))
    return transposed.transpose()


def adjoin_identity(m: Matrix) -> Matrix:
    """
    [1 | A] with identity columns labelled by the row labels.
    """
    overlap = set(m.row_labels) & set(m.col_labels)
    if overlap:
        raise DuplicateLabel(
            f"row and column labels overlap: {sorted(map(repr, overlap))}"
        )
    return stack_columns(type(m).identity(m.row_labels), m)

# linalg/unimodular.py
from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
import logging

import networkx as nx

from ..errors import BadFactor, FieldMismatch, LabelMismatch, SizeLimitExceeded
from .constants import SIGNING_NONZERO_LIMIT, TU_MINOR_LIMIT
from .elimination import bareiss, det
from .matrix import BinMatrix, Label, RatMatrix, label_order

logger = logging.getLogger("regmat." + __name__)

UNIMODULAR_VALUES = (-1, 0, 1)


@dataclass(frozen=True)
class Minor:
    """
    A square submatrix selection together with its determinant.
    """

    rows: tuple[Label, ...]
    cols: tuple[Label, ...]
    det: Fraction


@dataclass(frozen=True)
class TuReport:
    """
    Outcome of a TU or k-PU check.

    ``witness`` is the first violating minor in (size, rows, cols) order, rows
    and columns compared by label, or None when the check passed.

    """

    is_tu: bool
    witness: Minor | None = None
    minors_checked: int = 0

    def __bool__(self) -> bool:
        return self.is_tu


# --------------------------------------------------------------------------- #
# Minor enumeration
# --------------------------------------------------------------------------- #


def _require_rational(a) -> None:
    if not isinstance(a, RatMatrix):
        raise FieldMismatch("TU checks are defined over Q only")


def _first_bad_entry(a: RatMatrix) -> tuple[int, Minor] | None:
    cols = label_order(a.col_labels)
    for rank, (i, j) in enumerate(
        (i, j) for i in label_order(a.row_labels) for j in cols
    ):
        value = a.at(i, j)
        if value not in UNIMODULAR_VALUES:
            minor = Minor((a.row_labels[i],), (a.col_labels[j],), value)
            return rank + 1, minor
    return None


def _minor_dets(
    a: RatMatrix, k: int
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], Fraction]]:
    integral = a.is_integral()
    grid = a.int_rows() if integral else None
    row_order = label_order(a.row_labels)
    col_order = label_order(a.col_labels)
    for rows in combinations(row_order, k):
        for cols in combinations(col_order, k):
            if integral:
                value = Fraction(
                    bareiss([[grid[i][j] for j in cols] for i in rows])
                )
            else:
                value = det(
                    RatMatrix.from_rows(
                        [[a.at(i, j) for j in cols] for i in rows]
                    )
                )
            yield rows, cols, value


def _scan(a: RatMatrix, sizes: range, limit: int) -> TuReport:
    checked = 0
    for k in sizes:
        for rows, cols, value in _minor_dets(a, k):
            checked += 1
            if checked > limit:
                logger.warning(
                    "Minor budget exhausted after %d minors (limit=%d)",
                    checked - 1,
                    limit,
                )
                raise SizeLimitExceeded(
                    f"more than {limit} minors would be evaluated", limit
                )
            if value not in UNIMODULAR_VALUES:
                witness = Minor(
                    tuple(a.row_labels[i] for i in rows),
                    tuple(a.col_labels[j] for j in cols),
                    value,
                )
                logger.debug(
                    "violating %dx%d minor rows=%r cols=%r det=%s",
                    k,
                    k,
                    witness.rows,
                    witness.cols,
                    witness.det,
                )
                return TuReport(False, witness, checked)
    return TuReport(True, None, checked)


def is_tu(a: RatMatrix, limit: int = TU_MINOR_LIMIT) -> TuReport:
    """
    Exhaustive total unimodularity check with a deterministic witness.

    Entries outside {0, +-1} are reported as 1x1 witnesses without any
    elimination. Larger minors are enumerated in increasing size, rows and
    columns taken in lexicographic order of their labels, so the witness
    does not depend on the order of the axes.
    ``minors_checked`` counts the 1x1 minors too.

    """
    _require_rational(a)
    m, n = a.shape
    found = _first_bad_entry(a)
    if found is not None:
        checked, bad = found
        logger.debug(
            "entry %r/%r = %s is not unimodular", *bad.rows, *bad.cols, bad.det
        )
        return TuReport(False, bad, checked)
    report = _scan(a, range(2, min(m, n) + 1), limit)
    report = replace(report, minors_checked=report.minors_checked + m * n)
    logger.debug(
        "is_tu shape=%s -> %s after %d minors",
        a.shape,
        report.is_tu,
        report.minors_checked,
    )
    return report


def is_k_pu(a: RatMatrix, k: int, limit: int = TU_MINOR_LIMIT) -> TuReport:
    """
    Check every k x k selection, repeated rows or columns allowed.

    Selections with a repeated index have determinant 0 and are never
    enumerated, so only injective selections are evaluated.

    """
    _require_rational(a)
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > min(a.shape):
        return TuReport(True)
    if k == 0:
        # the empty selection has determinant 1
        return TuReport(True, None, 1)
    return _scan(a, range(k, k + 1), limit)


# --------------------------------------------------------------------------- #
# Scaling and signings
# --------------------------------------------------------------------------- #


def _check_factors(factors: Mapping[Label, int], known) -> None:
    for label, factor in factors.items():
        known(label)
        if factor not in UNIMODULAR_VALUES:
            logger.error("Factor %r for %r not in {0, +-1}", factor, label)
            raise BadFactor(
                f"factor {factor!r} for {label!r} not in {{0, +-1}}"
            )


def scale_rows(a: RatMatrix, factors: Mapping[Label, int]) -> RatMatrix:
    """
    Multiply rows by {0, +-1} factors; rows without a factor are kept.
    """
    _check_factors(factors, a.row_index)
    return RatMatrix.from_function(
        a.row_labels,
        a.col_labels,
        lambda x, y: a[x, y] * factors.get(x, 1),
    )


def scale_cols(a: RatMatrix, factors: Mapping[Label, int]) -> RatMatrix:
    _check_factors(factors, a.col_index)
    return RatMatrix.from_function(
        a.row_labels,
        a.col_labels,
        lambda x, y: a[x, y] * factors.get(y, 1),
    )


def is_signing_of(q: RatMatrix, b: BinMatrix) -> bool:
    if set(q.row_labels) != set(b.row_labels) or set(q.col_labels) != set(
        b.col_labels
    ):
        logger.error(
            "Signing labels differ: %r/%r vs %r/%r",
            q.row_labels,
            q.col_labels,
            b.row_labels,
            b.col_labels,
        )
        raise LabelMismatch("signing and matrix have different labels")
    return all(
        abs(q[x, y]) == b[x, y] for x in b.row_labels for y in b.col_labels
    )


@dataclass(frozen=True)
class Signing:
    """
    A {0, +-1} rational matrix ``signed`` whose absolute values give ``of``.

    ``method`` records how it was found: "forced" for the spanning-forest
    candidate, "exhaustive" for the backtracking fallback, or the name of
    the construction that produced it.

    """

    signed: RatMatrix
    of: BinMatrix
    method: str = "forced"

    def __post_init__(self):
        if not is_signing_of(self.signed, self.of):
            raise LabelMismatch("signed matrix does not match its support")


def _forced_candidate(b: BinMatrix) -> RatMatrix:
    """
    Sign a spanning forest of the nonzero pattern with +1, then give every
    other nonzero the sign that makes a shortest closing cycle sum to 0 mod 4.
    """
    graph = nx.Graph()
    graph.add_nodes_from(("r", x) for x in b.row_labels)
    graph.add_nodes_from(("c", y) for y in b.col_labels)
    edges = [(("r", x), ("c", y)) for x, y in b.nonzero_positions()]
    graph.add_edges_from(edges)

    signs: dict[frozenset, int] = {}
    signed = nx.Graph()
    signed.add_nodes_from(graph)
    for u, v in nx.minimum_spanning_edges(
        graph, algorithm="kruskal", data=False
    ):
        signs[frozenset((u, v))] = 1
        signed.add_edge(u, v)

    pending = [e for e in edges if frozenset(e) not in signs]
    while pending:
        best = None
        for u, v in pending:
            path = nx.shortest_path(signed, u, v)
            if best is None or len(path) < len(best[1]):
                best = ((u, v), path)
        (u, v), path = best
        total = sum(
            signs[frozenset(step)] for step in zip(path, path[1:])
        )
        # total + s must be divisible by 4 for a chordless cycle
        signs[frozenset((u, v))] = 1 if (total + 1) % 4 == 0 else -1
        signed.add_edge(u, v)
        pending.remove((u, v))
        logger.debug(
            "forced sign %d on (%r, %r) via cycle of length %d",
            signs[frozenset((u, v))],
            u[1],
            v[1],
            len(path),
        )

    return RatMatrix.from_function(
        b.row_labels,
        b.col_labels,
        lambda x, y: signs.get(frozenset((("r", x), ("c", y))), 0),
    )


def _exhaustive_signing(
    b: BinMatrix, minor_limit: int
) -> tuple[RatMatrix | None, int]:
    """
    Backtrack over signs of all nonzeros in row-major order.

    A partial assignment is abandoned as soon as a fully signed 2x2 minor has
    determinant +-2. Complete assignments are checked with is_tu.

    """
    positions = [
        (b.row_index(x), b.col_index(y)) for x, y in b.nonzero_positions()
    ]
    m, n = b.shape
    grid = [[0] * n for _ in range(m)]
    leaves = 0

    def consistent(i: int, j: int) -> bool:
        for i2 in range(i):
            if not grid[i2][j]:
                continue
            for j2 in range(j):
                if grid[i2][j2] and grid[i][j2]:
                    value = (
                        grid[i][j] * grid[i2][j2] - grid[i][j2] * grid[i2][j]
                    )
                    if value not in UNIMODULAR_VALUES:
                        return False
        return True

    def search(k: int) -> RatMatrix | None:
        nonlocal leaves
        if k == len(positions):
            leaves += 1
            candidate = RatMatrix.from_rows(grid, b.row_labels, b.col_labels)
            return candidate if is_tu(candidate, minor_limit) else None
        i, j = positions[k]
        for sign in (1, -1):
            grid[i][j] = sign
            if consistent(i, j):
                found = search(k + 1)
                if found is not None:
                    return found
        grid[i][j] = 0
        return None

    return search(0), leaves


def find_tu_signing(
    b: BinMatrix,
    nonzero_limit: int = SIGNING_NONZERO_LIMIT,
    minor_limit: int = TU_MINOR_LIMIT,
) -> Signing | None:
    """
    Find a TU signing of a GF(2) matrix, or None if there is none.

    The forced candidate is tried first; if it is not TU the exhaustive
    search decides, within ``nonzero_limit`` nonzeros.

    """
    if not isinstance(b, BinMatrix):
        raise FieldMismatch("signings are searched for GF(2) matrices")
    candidate = _forced_candidate(b)
    if is_tu(candidate, minor_limit):
        logger.debug("forced signing of %dx%d matrix is TU", *b.shape)
        return Signing(candidate, b, "forced")

    nonzeros = len(b.nonzero_positions())
    if nonzeros > nonzero_limit:
        logger.warning(
            "Forced signing failed and %d nonzeros exceed the limit %d",
            nonzeros,
            nonzero_limit,
        )
        raise SizeLimitExceeded(
            f"{nonzeros} nonzeros exceed the exhaustive signing limit",
            nonzero_limit,
        )
    found, leaves = _exhaustive_signing(b, minor_limit)
    logger.debug(
        "exhaustive signing search over %d nonzeros: %d complete assignments,"
        " found=%s",
        nonzeros,
        leaves,
        found is not None,
    )
    if found is None:
        return None
    return Signing(found, b, "exhaustive")

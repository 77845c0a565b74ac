# matroid/special.py
from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import NamedTuple, Union

from ..errors import (
    CertInvalid,
    LabelMismatch,
    NotTU,
    RegmatError,
    SumPreconditionFailed,
)
from ..linalg.constants import TU_MINOR_LIMIT
from ..linalg.matrix import BinMatrix, Label
from ..linalg.unimodular import Signing, find_tu_signing, is_signing_of, is_tu
from .constants import R10_COLS, R10_ROWS
from .graphs import Digraph, cographic_standard_repr, graphic_standard_repr
from .matroid import Matroid, StandardRepr, standard_repr_matroid
from .signing import canonical_signing_sum3, sum1_signing, sum2_signing
from .sums import Sum3Frame, sum1, sum2, sum3, validate_sum3

logger = logging.getLogger("regmat." + __name__)

R10_ENTRIES = (
    (1, 0, 0, 1, 1),
    (1, 1, 0, 0, 1),
    (0, 1, 1, 0, 1),
    (0, 0, 1, 1, 1),
    (1, 1, 1, 1, 1),
)


def r10() -> StandardRepr:
    """
    The 10-element regular matroid that is neither graphic nor cographic.
    """
    return StandardRepr(BinMatrix.from_rows(R10_ENTRIES, R10_ROWS, R10_COLS))


# --------------------------------------------------------------------------- #
# Good trees
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class GraphicCert:
    graph: Digraph


@dataclass(frozen=True)
class CographicCert:
    graph: Digraph


@dataclass(frozen=True)
class R10Cert:
    """
    R10 with its fixed labels renamed by ``row_map`` / ``col_map`` (pairs of
    old and new label; unmapped labels are kept).

    When ``matrix`` is given it must equal the relabelled R10, compared
    entry by entry on labels.

    """

    row_map: tuple[tuple[Label, Label], ...] = ()
    col_map: tuple[tuple[Label, Label], ...] = ()
    matrix: BinMatrix | None = None


@dataclass(frozen=True)
class Sum1:
    pass


@dataclass(frozen=True)
class Sum2:
    x: Label
    y: Label


@dataclass(frozen=True)
class Sum3:
    frame: Sum3Frame


SumKind = Union[Sum1, Sum2, Sum3]


@dataclass(frozen=True)
class Node:
    kind: SumKind
    left: GoodTree
    right: GoodTree


GoodTree = Union[GraphicCert, CographicCert, R10Cert, Node]


class GoodEvaluation(NamedTuple):
    representation: StandardRepr
    signing: Signing


def _r10_leaf(cert: R10Cert, path: tuple) -> GoodEvaluation:
    base = r10()
    row_map, col_map = dict(cert.row_map), dict(cert.col_map)
    try:
        relabelled = StandardRepr(base.b.relabel(row_map, col_map))
    except RegmatError as exc:
        raise CertInvalid(path, f"bad R10 relabelling: {exc}") from exc
    if cert.matrix is not None:
        m = cert.matrix
        same_labels = set(m.row_labels) == set(relabelled.x) and set(
            m.col_labels
        ) == set(relabelled.y)
        if not same_labels or any(
            m[x, y] != relabelled.b[x, y]
            for x in relabelled.x
            for y in relabelled.y
        ):
            raise CertInvalid(path, "matrix is not the relabelled R10")
    signing = find_tu_signing(base.b)
    signed = signing.signed.relabel(row_map, col_map)
    return GoodEvaluation(relabelled, Signing(signed, relabelled.b, "r10"))


def _leaf(t: GoodTree, path: tuple, limit: int) -> GoodEvaluation:
    if isinstance(t, R10Cert):
        result = _r10_leaf(t, path)
    else:
        build = (
            graphic_standard_repr
            if isinstance(t, GraphicCert)
            else cographic_standard_repr
        )
        try:
            result = GoodEvaluation(*build(t.graph, limit))
        except RegmatError as exc:
            raise CertInvalid(path, str(exc)) from exc
    if not is_tu(result.signing.signed, limit):
        raise CertInvalid(path, "leaf witness is not TU")
    logger.debug(
        "leaf %s at %r: %dx%d",
        type(t).__name__,
        path,
        *result.representation.b.shape,
    )
    return result


def _combine(
    kind: SumKind,
    left: GoodEvaluation,
    right: GoodEvaluation,
    path: tuple,
) -> GoodEvaluation:
    # sum preconditions are checked on the GF(2) representations first
    try:
        if isinstance(kind, Sum1):
            representation = sum1(left.representation, right.representation)
        elif isinstance(kind, Sum2):
            representation = sum2(
                left.representation, right.representation, kind.x, kind.y
            )
        else:
            blocks = validate_sum3(
                left.representation, right.representation, kind.frame
            )
            representation = sum3(blocks)
    except RegmatError as exc:
        raise SumPreconditionFailed(path, str(exc)) from exc

    if isinstance(kind, Sum1):
        signing = sum1_signing(left.signing, right.signing)
    elif isinstance(kind, Sum2):
        signing = sum2_signing(left.signing, right.signing, kind.x, kind.y)
    else:
        signed = canonical_signing_sum3(
            left.signing.signed, right.signing.signed, kind.frame
        )
        signing = Signing(signed, representation.b, "sum3")
    logger.debug(
        "%s at %r: %dx%d",
        type(kind).__name__,
        path,
        *representation.b.shape,
    )
    return GoodEvaluation(representation, signing)


def _evaluate(t: GoodTree, path: tuple, limit: int) -> GoodEvaluation:
    if not isinstance(t, Node):
        return _leaf(t, path, limit)
    left = _evaluate(t.left, path + ("left",), limit)
    right = _evaluate(t.right, path + ("right",), limit)
    return _combine(t.kind, left, right, path)


def eval_good_tree(
    t: GoodTree, limit: int = TU_MINOR_LIMIT, verify: bool = True
) -> GoodEvaluation:
    """
    Build the GF(2) representation of a good matroid and its TU signing.

    Every node is validated before its signing is formed; failures carry
    the path of left/right steps from the root to the offending node. With
    ``verify`` the final signing is checked with is_tu.

    """
    result = _evaluate(t, (), limit)
    if not is_signing_of(result.signing.signed, result.representation.b):
        raise LabelMismatch("evaluated signing does not match its support")
    if verify:
        report = is_tu(result.signing.signed, limit)
        if not report:
            logger.error("good tree signing not TU: %r", report.witness)
            raise NotTU(f"signing is not TU: {report.witness}")
    logger.debug(
        "good tree evaluated to %dx%d representation",
        *result.representation.b.shape,
    )
    return result


def tree_matroid(t: GoodTree, limit: int = TU_MINOR_LIMIT) -> Matroid:
    return standard_repr_matroid(eval_good_tree(t, limit).representation)


__all__ = [
    "CographicCert",
    "GoodEvaluation",
    "GoodTree",
    "GraphicCert",
    "Node",
    "R10Cert",
    "Sum1",
    "Sum2",
    "Sum3",
    "eval_good_tree",
    "r10",
    "tree_matroid",
]

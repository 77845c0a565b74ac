# matroid/codec.py
from __future__ import annotations

import logging
from pathlib import Path
import re

from ..errors import ParseError, RegmatError
from ..linalg.codec import COMMENT_PREFIX, read_matrix, read_text
from ..linalg.matrix import BinMatrix
from .graphs import Digraph
from .special import (
    CographicCert,
    GoodTree,
    GraphicCert,
    Node,
    R10Cert,
    Sum1,
    Sum2,
    Sum3,
)
from .sums import Sum3Frame

logger = logging.getLogger("regmat." + __name__)

NODES = "nodes"
EDGE = "edge"
FRAME_LABELS = ("x0", "x1", "x2", "y0", "y1", "y2")
FRAME_LISTS = ("xl", "yl", "xr", "yr")


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    return [
        (n, line.split())
        for n, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith(COMMENT_PREFIX)
    ]


# --------------------------------------------------------------------------- #
# Graph files
# --------------------------------------------------------------------------- #


def _graph_from_records(records: list[tuple[int | None, list[str]]]):
    nodes: list[str] = []
    edges: list[tuple[str, str, str]] = []
    for n, tokens in records:
        head, args = tokens[0], tokens[1:]
        if head == NODES:
            if edges:
                raise ParseError("node list must come before edges", line=n)
            nodes.extend(args)
        elif head == EDGE:
            if len(args) != 3:
                raise ParseError(
                    "edge lines read 'edge <label> <tail> <head>'", line=n
                )
            edges.append((args[0], args[1], args[2]))
        else:
            raise ParseError(f"unknown graph record {head!r}", line=n)
    try:
        return Digraph(tuple(nodes), tuple(edges))
    except RegmatError as exc:
        raise ParseError(str(exc)) from exc


def decode_graph(text: str) -> Digraph:
    """
    Parse a graph file::

        nodes a b c
        edge e1 a b
        edge e2 b c

    """
    graph = _graph_from_records(_content_lines(text))
    logger.debug(
        "decode_graph: %d nodes, %d edges",
        len(graph.nodes),
        len(graph.edges),
    )
    return graph


def encode_graph(g: Digraph) -> str:
    lines = [" ".join([NODES, *map(str, g.nodes)])]
    lines += [f"{EDGE} {label} {tail} {head}" for label, tail, head in g.edges]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------- #
# Frame files
# --------------------------------------------------------------------------- #


def _frame_from_records(records: list[tuple[int | None, list[str]]]):
    values: dict[str, object] = {}
    for n, tokens in records:
        key, args = tokens[0], tokens[1:]
        if key in values:
            raise ParseError(f"{key} given twice", line=n)
        if key in FRAME_LABELS:
            if len(args) != 1:
                raise ParseError(f"{key} takes exactly one label", line=n)
            values[key] = args[0]
        elif key in FRAME_LISTS:
            values[key] = tuple(args)
        else:
            raise ParseError(f"unknown frame key {key!r}", line=n)
    missing = [k for k in FRAME_LABELS if k not in values]
    if missing:
        raise ParseError(f"frame is missing {', '.join(missing)}")
    return Sum3Frame(**values)


def decode_frame(text: str) -> Sum3Frame:
    """
    Parse a 3-sum frame file: one ``key label`` line for each of x0, x1,
    x2, y0, y1, y2 and optional ``xl``, ``yl``, ``xr``, ``yr`` lines listing
    the private labels of each summand.
    """
    return _frame_from_records(_content_lines(text))


def encode_frame(frame: Sum3Frame) -> str:
    lines = [f"{k} {getattr(frame, k)}" for k in FRAME_LABELS]
    for k in FRAME_LISTS:
        lines.append(" ".join([k, *map(str, getattr(frame, k))]))
    return "\n".join(lines) + "\n"


def read_frame(path) -> Sum3Frame:
    return decode_frame(read_text(path))


# --------------------------------------------------------------------------- #
# Good-tree files (s-expressions)
# --------------------------------------------------------------------------- #

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def _parse_sexpr(text: str):
    cleaned = "\n".join(
        line.split(COMMENT_PREFIX, 1)[0] for line in text.splitlines()
    )
    tokens = _TOKEN.findall(cleaned)
    pos = 0

    def read():
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of tree")
        token = tokens[pos]
        pos += 1
        if token == ")":
            raise ParseError("unbalanced ')'")
        if token != "(":
            return token
        items = []
        while pos < len(tokens) and tokens[pos] != ")":
            items.append(read())
        if pos >= len(tokens):
            raise ParseError("missing ')'")
        pos += 1
        return items

    expr = read()
    if pos != len(tokens):
        raise ParseError("trailing tokens after tree")
    return expr


def _records(items: list) -> list[tuple[None, list[str]]]:
    out = []
    for item in items:
        if not isinstance(item, list) or not item or any(
            isinstance(v, list) for v in item
        ):
            raise ParseError(f"expected a flat record, got {item!r}")
        out.append((None, item))
    return out


def _pairs(expr) -> tuple[tuple[str, str], ...]:
    if not isinstance(expr, list) or any(
        not isinstance(p, list) or len(p) != 2 for p in expr
    ):
        raise ParseError(f"expected a list of (old new) pairs, got {expr!r}")
    return tuple((old, new) for old, new in expr)


class _TreeReader:
    def __init__(self, base: Path | None):
        self.base = base

    def path(self, name: str) -> Path:
        p = Path(name)
        if self.base is not None and not p.is_absolute():
            p = self.base / p
        return p

    def graph(self, args: list) -> Digraph:
        if len(args) == 1 and isinstance(args[0], str):
            return decode_graph(read_text(self.path(args[0])))
        return _graph_from_records(_records(args))

    def frame(self, expr) -> Sum3Frame:
        if isinstance(expr, str):
            return read_frame(self.path(expr))
        if not expr or expr[0] != "frame":
            raise ParseError("sum3 expects a frame file or (frame ...)")
        return _frame_from_records(_records(expr[1:]))

    def tree(self, expr) -> GoodTree:
        if not isinstance(expr, list) or not expr:
            raise ParseError(f"expected a tree node, got {expr!r}")
        head, args = expr[0], expr[1:]
        if head == "graphic":
            return GraphicCert(self.graph(args))
        if head == "cographic":
            return CographicCert(self.graph(args))
        if head == "r10":
            return self.r10(args)
        if head == "sum1" and len(args) == 2:
            return Node(Sum1(), self.tree(args[0]), self.tree(args[1]))
        if head == "sum2" and len(args) == 4:
            x, y, left, right = args
            if not isinstance(x, str) or not isinstance(y, str):
                raise ParseError("sum2 reads (sum2 x y left right)")
            return Node(Sum2(x, y), self.tree(left), self.tree(right))
        if head == "sum3" and len(args) == 3:
            frame, left, right = args
            return Node(
                Sum3(self.frame(frame)), self.tree(left), self.tree(right)
            )
        raise ParseError(f"unknown or malformed tree node {head!r}")

    def r10(self, args: list) -> R10Cert:
        if len(args) not in (2, 3):
            raise ParseError("r10 reads (r10 <row map> <col map> [matrix])")
        matrix = None
        if len(args) == 3:
            matrix = read_matrix(self.path(args[2]))
            if not isinstance(matrix, BinMatrix):
                raise ParseError("R10 certificate matrix must be GF2")
        return R10Cert(_pairs(args[0]), _pairs(args[1]), matrix)


def decode_tree(text: str, base: Path | None = None) -> GoodTree:
    """
    Parse a good-tree s-expression.

    Leaves are ``(graphic <graph>)``, ``(cographic <graph>)`` and
    ``(r10 ((old new) ...) ((old new) ...))``; a graph is a file name or
    inline ``(nodes ...) (edge ...)`` records. Nodes are ``(sum1 L R)``,
    ``(sum2 x y L R)`` and ``(sum3 <frame> L R)`` where the frame is a file
    name or ``(frame (x0 a) ... (xl p q))``. File names are resolved
    against ``base``.

    """
    try:
        tree = _TreeReader(base).tree(_parse_sexpr(text))
    except OSError as exc:
        raise ParseError(f"cannot read referenced file: {exc}") from exc
    logger.debug("decode_tree: root %s", type(tree).__name__)
    return tree


def read_tree(path) -> GoodTree:
    path = Path(path)
    return decode_tree(read_text(path), path.parent)


def _encode_graph_records(g: Digraph) -> str:
    records = ["(" + " ".join([NODES, *map(str, g.nodes)]) + ")"]
    records += [f"({EDGE} {e} {t} {h})" for e, t, h in g.edges]
    return " ".join(records)


def _encode_frame_records(frame: Sum3Frame) -> str:
    parts = [f"({k} {getattr(frame, k)})" for k in FRAME_LABELS]
    for k in FRAME_LISTS:
        labels = " ".join(map(str, getattr(frame, k)))
        parts.append(f"({k} {labels})" if labels else f"({k})")
    return "(frame " + " ".join(parts) + ")"


def encode_tree(t: GoodTree) -> str:
    """
    Write a good tree as a single s-expression with every graph and frame
    inlined. R10 certificate matrices are not written.
    """
    if isinstance(t, (GraphicCert, CographicCert)):
        head = "graphic" if isinstance(t, GraphicCert) else "cographic"
        return f"({head} {_encode_graph_records(t.graph)})"
    if isinstance(t, R10Cert):
        rows = " ".join(f"({a} {b})" for a, b in t.row_map)
        cols = " ".join(f"({a} {b})" for a, b in t.col_map)
        return f"(r10 ({rows}) ({cols}))"
    left, right = encode_tree(t.left), encode_tree(t.right)
    if isinstance(t.kind, Sum1):
        return f"(sum1 {left} {right})"
    if isinstance(t.kind, Sum2):
        return f"(sum2 {t.kind.x} {t.kind.y} {left} {right})"
    return f"(sum3 {_encode_frame_records(t.kind.frame)} {left} {right})"


__all__ = [
    "decode_frame",
    "decode_graph",
    "decode_tree",
    "encode_frame",
    "encode_graph",
    "encode_tree",
    "read_frame",
    "read_tree",
]

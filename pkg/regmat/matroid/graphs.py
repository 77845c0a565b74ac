# matroid/graphs.py
from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import NamedTuple

import networkx as nx

from ..errors import DuplicateLabel, UnknownLabel
from ..linalg.constants import TU_MINOR_LIMIT
from ..linalg.matrix import Label, RatMatrix, support
from ..linalg.unimodular import Signing
from .matroid import StandardRepr, dual_repr, standardize

logger = logging.getLogger("regmat." + __name__)


@dataclass(frozen=True)
class Digraph:
    """
    Directed multigraph; ``edges`` holds (edge label, tail, head) triples.
    Self-loops are allowed.
    """

    nodes: tuple[Label, ...]
    edges: tuple[tuple[Label, Label, Label], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(
            self, "edges", tuple(tuple(e) for e in self.edges)
        )
        if len(set(self.nodes)) != len(self.nodes):
            logger.error("Duplicate node label in %r", self.nodes)
            raise DuplicateLabel("node labels must be distinct")
        labels = [e[0] for e in self.edges]
        if len(set(labels)) != len(labels):
            logger.error("Duplicate edge label in %r", labels)
            raise DuplicateLabel("edge labels must be distinct")
        known = set(self.nodes)
        for label, tail, head in self.edges:
            if tail not in known or head not in known:
                logger.error(
                    "Edge %r joins unknown nodes %r -> %r", label, tail, head
                )
                raise UnknownLabel(
                    f"edge {label!r} uses a node that is not listed"
                )

    @property
    def edge_labels(self) -> tuple[Label, ...]:
        return tuple(e[0] for e in self.edges)

    def to_networkx(self) -> nx.MultiGraph:
        """
        Undirected view with edge keys set to the edge labels and an
        ``order`` attribute recording the position in ``edges``.
        """
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.nodes)
        for order, (label, tail, head) in enumerate(self.edges):
            graph.add_edge(tail, head, key=label, order=order)
        return graph


class GraphicRepr(NamedTuple):
    representation: StandardRepr
    witness: Signing


def is_node_incidence(a: RatMatrix) -> bool:
    """
    Every column is zero or holds exactly one +1 and one -1.
    """
    for y in a.col_labels:
        nonzero = sorted(v for v in a.col(y) if v != 0)
        if nonzero and nonzero != [-1, 1]:
            logger.debug("column %r is not an incidence column", y)
            return False
    return True


def incidence_matrix(g: Digraph) -> RatMatrix:
    """
    Node-by-edge matrix with +1 at the tail and -1 at the head of every
    edge; self-loops give zero columns.
    """
    ends = {label: (tail, head) for label, tail, head in g.edges}

    def entry(node: Label, edge: Label) -> int:
        tail, head = ends[edge]
        if tail == head:
            return 0
        if node == tail:
            return 1
        return -1 if node == head else 0

    return RatMatrix.from_function(g.nodes, g.edge_labels, entry)


def spanning_forest(g: Digraph) -> tuple[Label, ...]:
    """
    Edge labels of a spanning forest, preferring edges listed earlier.
    """
    graph = g.to_networkx()
    chosen = {
        key
        for _, _, key in nx.minimum_spanning_edges(
            graph, algorithm="kruskal", weight="order", keys=True, data=False
        )
    }
    forest = tuple(label for label in g.edge_labels if label in chosen)
    logger.debug(
        "spanning forest of %d nodes: %d of %d edges",
        len(g.nodes),
        len(forest),
        len(g.edges),
    )
    return forest


def graphic_standard_repr(
    g: Digraph, limit: int = TU_MINOR_LIMIT
) -> GraphicRepr:
    """
    Standard representation of the cycle matroid of ``g``.

    The incidence matrix is standardized at a spanning forest; the rational
    result is the TU witness and its support the GF(2) representation.

    """
    witness = standardize(
        incidence_matrix(g), spanning_forest(g), limit, assume_tu=True
    ).b
    representation = StandardRepr(support(witness))
    return GraphicRepr(
        representation, Signing(witness, representation.b, "graphic")
    )


def cographic_standard_repr(
    g: Digraph, limit: int = TU_MINOR_LIMIT
) -> GraphicRepr:
    """
    Dual of the graphic representation, witnessed by -W^T.
    """
    graphic = graphic_standard_repr(g, limit)
    representation = dual_repr(graphic.representation)
    witness = dual_repr(StandardRepr(graphic.witness.signed)).b
    return GraphicRepr(
        representation, Signing(witness, representation.b, "cographic")
    )


__all__ = [
    "Digraph",
    "GraphicRepr",
    "cographic_standard_repr",
    "graphic_standard_repr",
    "incidence_matrix",
    "is_node_incidence",
    "spanning_forest",
]

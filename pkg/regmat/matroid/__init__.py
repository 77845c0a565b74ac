# matroid/__init__.py
from __future__ import annotations

import logging

from .constants import AXIOM_GROUND_LIMIT, GROUND_LIMIT
from .graphs import (
    Digraph,
    cographic_standard_repr,
    graphic_standard_repr,
    incidence_matrix,
    is_node_incidence,
)
from .matroid import (
    Matroid,
    StandardRepr,
    check_axioms,
    dual_matroid,
    dual_repr,
    find_base,
    is_base,
    matroids_equal,
    orthogonal_dual_matroid,
    same_support_check,
    standard_repr_matroid,
    standardize,
    vector_matroid,
)
from .signing import (
    Mls3Class,
    canonical_resign,
    canonical_signing_3x3,
    canonical_signing_bordered,
    canonical_signing_sum3,
    in_mls3_class,
    mls3_class_of,
)
from .special import (
    CographicCert,
    GraphicCert,
    Node,
    R10Cert,
    Sum1,
    Sum2,
    Sum3,
    eval_good_tree,
    r10,
    tree_matroid,
)
from .sums import (
    Sum3Blocks,
    Sum3Frame,
    coupling_block,
    normalize_frame,
    sum1,
    sum2,
    sum3,
    validate_sum3,
)

logger = logging.getLogger("regmat." + __name__)
logger.info(
    "matroid package imported",
    extra={
        "ground_limit": GROUND_LIMIT,
        "axiom_ground_limit": AXIOM_GROUND_LIMIT,
    },
)

__all__ = [
    "CographicCert",
    "Digraph",
    "GraphicCert",
    "Matroid",
    "Mls3Class",
    "Node",
    "R10Cert",
    "StandardRepr",
    "Sum1",
    "Sum2",
    "Sum3",
    "Sum3Blocks",
    "Sum3Frame",
    "canonical_resign",
    "canonical_signing_3x3",
    "canonical_signing_bordered",
    "canonical_signing_sum3",
    "check_axioms",
    "cographic_standard_repr",
    "coupling_block",
    "dual_matroid",
    "dual_repr",
    "eval_good_tree",
    "find_base",
    "graphic_standard_repr",
    "in_mls3_class",
    "incidence_matrix",
    "is_base",
    "is_node_incidence",
    "matroids_equal",
    "mls3_class_of",
    "normalize_frame",
    "orthogonal_dual_matroid",
    "r10",
    "same_support_check",
    "standard_repr_matroid",
    "standardize",
    "sum1",
    "sum2",
    "sum3",
    "tree_matroid",
    "validate_sum3",
    "vector_matroid",
]

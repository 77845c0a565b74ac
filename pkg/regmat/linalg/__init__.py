# linalg/__init__.py
from __future__ import annotations

import logging

from .constants import FIELDS, SIGNING_NONZERO_LIMIT, TU_MINOR_LIMIT
from .elimination import (
    classify_invertible_2x2_gf2,
    det,
    det_by_permutations,
    gf2_inverse_2x2,
    null_space_gf2,
    rank,
    row_space_gf2,
    rows_independent,
)
from .matrix import (
    BinMatrix,
    RatMatrix,
    adjoin_identity,
    embed,
    submatrix,
    support,
    transpose,
)
from .pivoting import (
    PivotSpec,
    long_tableau_pivot,
    pivot_submatrix_det_ratio,
    short_tableau_pivot,
    short_tableau_pivot_constructive,
)
from .unimodular import (
    Signing,
    TuReport,
    find_tu_signing,
    is_k_pu,
    is_signing_of,
    is_tu,
    scale_cols,
    scale_rows,
)

logger = logging.getLogger("regmat." + __name__)
logger.info(
    "linalg package imported",
    extra={
        "fields": FIELDS,
        "tu_minor_limit": TU_MINOR_LIMIT,
        "signing_nonzero_limit": SIGNING_NONZERO_LIMIT,
    },
)

__all__ = [
    "BinMatrix",
    "PivotSpec",
    "RatMatrix",
    "Signing",
    "TuReport",
    "adjoin_identity",
    "classify_invertible_2x2_gf2",
    "det",
    "det_by_permutations",
    "embed",
    "find_tu_signing",
    "gf2_inverse_2x2",
    "is_k_pu",
    "is_signing_of",
    "is_tu",
    "long_tableau_pivot",
    "null_space_gf2",
    "pivot_submatrix_det_ratio",
    "rank",
    "row_space_gf2",
    "rows_independent",
    "scale_cols",
    "scale_rows",
    "short_tableau_pivot",
    "short_tableau_pivot_constructive",
    "submatrix",
    "support",
    "transpose",
]

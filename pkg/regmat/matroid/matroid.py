# matroid/matroid.py
from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
import logging

from ..errors import (
    FieldMismatch,
    GroundMismatch,
    LabelMismatch,
    LabelOverlap,
    NotABase,
    NotTU,
    SizeLimitExceeded,
    UnknownLabel,
)
from ..linalg.constants import TU_MINOR_LIMIT
from ..linalg.elimination import null_space_gf2, rank, row_space_gf2
from ..linalg.matrix import (
    BinMatrix,
    Label,
    Matrix,
    RatMatrix,
    adjoin_identity,
    label_order,
    support,
)
from ..linalg.pivoting import PivotSpec, long_tableau_pivot
from ..linalg.unimodular import Signing, find_tu_signing, is_tu
from .constants import (
    AXIOM_GROUND_LIMIT,
    DUAL,
    GROUND_LIMIT,
    ORTHOGONAL_DUAL,
    STANDARD,
    VECTOR,
)

logger = logging.getLogger("regmat." + __name__)


@dataclass(frozen=True)
class Matroid:
    """
    Finite matroid given by its ground set and an independence oracle.

    The oracle receives frozensets of ground labels. Axioms are not checked
    at construction; see ``check_axioms``.

    """

    ground: tuple[Label, ...]
    indep: Callable[[frozenset], bool] = field(compare=False)
    provenance: str = VECTOR

    def is_independent(self, subset: Iterable[Label]) -> bool:
        subset = frozenset(subset)
        unknown = subset - set(self.ground)
        if unknown:
            logger.error("Labels %r are not in the ground set", unknown)
            raise UnknownLabel(
                f"not in the ground set: {sorted(map(str, unknown))}"
            )
        return self.indep(subset)

    def subsets(self) -> Iterable[frozenset]:
        for k in range(len(self.ground) + 1):
            for combo in combinations(self.ground, k):
                yield frozenset(combo)


def _cached(
    oracle: Callable[[frozenset], bool],
) -> Callable[[frozenset], bool]:
    return lru_cache(maxsize=None)(oracle)


def _require_ground_limit(m: Matroid, limit: int) -> None:
    if len(m.ground) > limit:
        logger.warning(
            "Ground set of %d elements exceeds limit %d", len(m.ground), limit
        )
        raise SizeLimitExceeded(
            f"ground set of {len(m.ground)} elements exceeds {limit}", limit
        )


# --------------------------------------------------------------------------- #
# Representations
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class StandardRepr:
    """
    Matrix B with row set X and column set Y, X and Y disjoint; stands for
    the vector matroid of [1 | B] on X + Y.
    """

    b: Matrix

    def __post_init__(self):
        overlap = set(self.b.row_labels) & set(self.b.col_labels)
        if overlap:
            logger.error("Standard representation labels overlap: %r", overlap)
            raise LabelOverlap(
                f"X and Y share labels: {sorted(map(str, overlap))}"
            )

    @property
    def x(self) -> tuple[Label, ...]:
        return self.b.row_labels

    @property
    def y(self) -> tuple[Label, ...]:
        return self.b.col_labels

    @property
    def ground(self) -> tuple[Label, ...]:
        return self.x + self.y

    @property
    def field_tag(self) -> str:
        return self.b.field_tag

    def full(self) -> Matrix:
        """
        The matrix [1 | B].
        """
        return adjoin_identity(self.b)


def vector_matroid(a: Matrix, provenance: str = VECTOR) -> Matroid:
    order = {y: j for j, y in enumerate(a.col_labels)}

    def indep(subset: frozenset) -> bool:
        cols = sorted(subset, key=order.__getitem__)
        return rank(a.submatrix(None, cols)) == len(cols)

    return Matroid(a.col_labels, _cached(indep), provenance)


def standard_repr_matroid(s: StandardRepr) -> Matroid:
    return vector_matroid(s.full(), provenance=STANDARD)


def is_base(m: Matroid, subset: Iterable[Label]) -> bool:
    subset = frozenset(subset)
    if not m.is_independent(subset):
        return False
    return not any(
        m.indep(subset | {e}) for e in m.ground if e not in subset
    )


def _by_label(labels) -> list[Label]:
    labels = tuple(labels)
    return [labels[i] for i in label_order(labels)]


def find_base(m: Matroid) -> tuple[Label, ...]:
    """
    Greedy base, trying ground elements in label order.
    """
    base: list[Label] = []
    for e in _by_label(m.ground):
        if m.indep(frozenset(base) | {e}):
            base.append(e)
    logger.debug("greedy base of %s matroid: %r", m.provenance, base)
    return tuple(base)


def standardize(
    a: RatMatrix,
    base: Iterable[Label],
    limit: int = TU_MINOR_LIMIT,
    assume_tu: bool = False,
) -> StandardRepr:
    """
    Pivot a TU matrix so the base columns become an identity.

    Rows left zero by the pivots are dropped; the result has X = base (in
    column order of ``a``) and Y = the other columns. Base columns are
    pivoted in label order, each on the first usable row by label.
    ``assume_tu`` skips the TU check for matrices that are TU by construction.

    """
    if not assume_tu:
        report = is_tu(a, limit)
        if not report:
            logger.error("standardize on non-TU input: %r", report.witness)
            raise NotTU(f"matrix is not TU: {report.witness}")
    base_set = frozenset(base)
    if not base_set <= set(a.col_labels) or not is_base(
        vector_matroid(a), base_set
    ):
        logger.error(
            "%r is not a base of the column matroid",
            sorted(map(str, base_set)),
        )
        raise NotABase(f"{sorted(map(str, base_set))} is not a base")

    rows = _by_label(a.row_labels)
    tableau = a
    pivot_row: dict[Label, Label] = {}
    used: set[Label] = set()
    for e in _by_label(base_set):
        x = next(
            r
            for r in rows
            if r not in used and tableau[r, e] != 0
        )
        tableau = long_tableau_pivot(tableau, PivotSpec(x, e))
        pivot_row[e] = x
        used.add(x)
        logger.debug("standardize pivot row=%r base column=%r", x, e)

    others = [y for y in a.col_labels if y not in base_set]
    ordered = [y for y in a.col_labels if y in base_set]
    b = RatMatrix.from_function(
        ordered, others, lambda e, y: tableau[pivot_row[e], y]
    )
    return StandardRepr(b)


def dual_repr(s: StandardRepr) -> StandardRepr:
    """
    Dual standard representation -B^T (B^T over GF(2)).
    """
    t = s.b.transpose()
    if isinstance(t, RatMatrix):
        t = -t
    return StandardRepr(t)


# --------------------------------------------------------------------------- #
# Duals and equality
# --------------------------------------------------------------------------- #


def bases(m: Matroid, limit: int = GROUND_LIMIT) -> list[frozenset]:
    _require_ground_limit(m, limit)
    r = len(find_base(m))
    candidates = (frozenset(c) for c in combinations(m.ground, r))
    return [c for c in candidates if m.indep(c)]


def dual_matroid(m: Matroid, limit: int = GROUND_LIMIT) -> Matroid:
    """
    Dual by base complements: a set is independent iff it avoids some base.
    """
    complements = [frozenset(m.ground) - b for b in bases(m, limit)]
    logger.debug(
        "dual of %s matroid on %d elements: %d bases",
        m.provenance,
        len(m.ground),
        len(complements),
    )

    def indep(subset: frozenset) -> bool:
        return any(subset <= c for c in complements)

    return Matroid(m.ground, _cached(indep), DUAL)


def orthogonal_dual_matroid(b: BinMatrix) -> Matroid:
    """
    Vector matroid of a matrix whose rows span the orthogonal complement of
    the row space of ``b``.
    """
    basis = tuple(null_space_gf2(b))
    dual = BinMatrix(
        tuple(f"k{i}" for i in range(len(basis))), b.col_labels, basis
    )
    return vector_matroid(dual, provenance=ORTHOGONAL_DUAL)


def first_difference(
    m1: Matroid, m2: Matroid, limit: int = GROUND_LIMIT
) -> frozenset | None:
    """
    First subset (by size, then ground order) on which the oracles disagree.
    """
    if set(m1.ground) != set(m2.ground):
        logger.error("Ground sets differ: %r vs %r", m1.ground, m2.ground)
        raise GroundMismatch("matroids have different ground sets")
    _require_ground_limit(m1, limit)
    for subset in m1.subsets():
        if m1.indep(subset) != m2.indep(subset):
            logger.debug("matroids differ on %r", sorted(map(str, subset)))
            return subset
    return None


def matroids_equal(
    m1: Matroid, m2: Matroid, limit: int = GROUND_LIMIT
) -> bool:
    return first_difference(m1, m2, limit) is None


def same_support_check(s1: StandardRepr, s2: StandardRepr) -> bool:
    if set(s1.x) != set(s2.x) or set(s1.y) != set(s2.y):
        logger.error("Representations have different X or Y")
        raise LabelMismatch("representations have different X or Y")
    b1, b2 = support(s1.b), support(s2.b)
    return all(b1[x, y] == b2[x, y] for x in s1.x for y in s1.y)


# --------------------------------------------------------------------------- #
# Axioms
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class AxiomReport:
    """
    Outcome of the exhaustive axiom check.

    ``failed`` names the first failing axiom ("empty", "hereditary" or
    "augmentation"); ``counterexample`` holds the offending sets.

    """

    failed: str | None = None
    counterexample: tuple[frozenset, ...] = ()

    @property
    def ok(self) -> bool:
        return self.failed is None


def check_axioms(m: Matroid, limit: int = AXIOM_GROUND_LIMIT) -> AxiomReport:
    _require_ground_limit(m, limit)
    ground = m.ground
    n = len(ground)

    def as_set(mask: int) -> frozenset:
        return frozenset(ground[i] for i in range(n) if (mask >> i) & 1)

    independent = {
        mask for mask in range(1 << n) if m.indep(as_set(mask))
    }
    if 0 not in independent:
        return AxiomReport("empty", (frozenset(),))

    for mask in independent:
        for i in range(n):
            if (mask >> i) & 1 and mask & ~(1 << i) not in independent:
                return AxiomReport(
                    "hereditary", (as_set(mask), as_set(mask & ~(1 << i)))
                )

    def extensions(mask: int) -> list[int]:
        return [
            i
            for i in range(n)
            if not (mask >> i) & 1 and mask | (1 << i) in independent
        ]

    maximal = [mask for mask in independent if not extensions(mask)]
    for mask in independent:
        if mask in maximal:
            continue
        for top in maximal:
            diff = top & ~mask
            if not any(
                (diff >> i) & 1 and mask | (1 << i) in independent
                for i in range(n)
            ):
                return AxiomReport(
                    "augmentation", (as_set(mask), as_set(top))
                )
    logger.debug(
        "axioms hold for %s matroid: %d independent sets, %d bases",
        m.provenance,
        len(independent),
        len(maximal),
    )
    return AxiomReport()


# --------------------------------------------------------------------------- #
# Row spaces over GF(2)
# --------------------------------------------------------------------------- #


def _require_gf2(s: StandardRepr) -> BinMatrix:
    if not isinstance(s.b, BinMatrix):
        raise FieldMismatch("row-space enumeration needs GF(2) entries")
    return s.b


def _labels_of(mask: int, labels: tuple[Label, ...]) -> frozenset:
    return frozenset(labels[j] for j in range(len(labels)) if (mask >> j) & 1)


def row_space_labels(a: BinMatrix) -> set[frozenset]:
    """
    Row space of ``a``, each vector given by the column labels of its ones.
    """
    return {_labels_of(v, a.col_labels) for v in row_space_gf2(a)}


def orthogonal_complement_labels(a: BinMatrix) -> set[frozenset]:
    basis = tuple(null_space_gf2(a))
    kernel = BinMatrix(
        tuple(f"k{i}" for i in range(len(basis))), a.col_labels, basis
    )
    return row_space_labels(kernel)


def _rows_xor(b: BinMatrix, rows: Iterable[int]) -> int:
    value = 0
    for i in rows:
        value ^= b.rows[i]
    return value


def row_space_standard(
    s: StandardRepr, limit: int = GROUND_LIMIT
) -> set[frozenset]:
    """
    {(u, uB)} for all u over X, on X + Y coordinates.
    """
    b = _require_gf2(s)
    if len(s.x) > limit:
        raise SizeLimitExceeded(f"|X| = {len(s.x)} exceeds {limit}", limit)
    space = set()
    for u in range(1 << len(s.x)):
        picked = [i for i in range(len(s.x)) if (u >> i) & 1]
        space.add(
            _labels_of(u, s.x) | _labels_of(_rows_xor(b, picked), s.y)
        )
    return space


def orthogonal_complement_standard(
    s: StandardRepr, limit: int = GROUND_LIMIT
) -> set[frozenset]:
    """
    {(B v, v)} for all v over Y, on X + Y coordinates.
    """
    b = _require_gf2(s)
    if len(s.y) > limit:
        raise SizeLimitExceeded(f"|Y| = {len(s.y)} exceeds {limit}", limit)
    space = set()
    for v in range(1 << len(s.y)):
        bv = 0
        for i, row in enumerate(b.rows):
            if bin(row & v).count("1") % 2:
                bv |= 1 << i
        space.add(_labels_of(bv, s.x) | _labels_of(v, s.y))
    return space


def row_space_dual_standard(
    s: StandardRepr, limit: int = GROUND_LIMIT
) -> set[frozenset]:
    """
    Row space of [1 | B^T], the full matrix of the dual representation.
    """
    return row_space_standard(dual_repr(s), limit)


# --------------------------------------------------------------------------- #
# Regularity
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class RegularityCertificate:
    """
    A TU signing of B together with the TU rational representation [1 | B'].
    """

    signing: Signing
    representation: RatMatrix


def regularity_certificate(
    s: StandardRepr, limit: int = TU_MINOR_LIMIT
) -> RegularityCertificate | None:
    if not isinstance(s.b, BinMatrix):
        raise FieldMismatch("regularity certificates need GF(2) entries")
    signing = find_tu_signing(s.b, minor_limit=limit)
    if signing is None:
        logger.debug(
            "no TU signing: matroid on %d elements is not regular",
            len(s.ground),
        )
        return None
    return RegularityCertificate(signing, adjoin_identity(signing.signed))


def is_regular_via_tu_representation(
    a: RatMatrix, limit: int = TU_MINOR_LIMIT
) -> bool:
    """
    True when ``a`` is TU and represents the same matroid as its support.
    """
    if not is_tu(a, limit):
        return False
    return matroids_equal(vector_matroid(a), vector_matroid(support(a)))

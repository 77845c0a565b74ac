# blueprint/suite.py
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
import logging
import random

from ..errors import ParseError, RegmatError
from ..linalg.codec import encode_matrix
from ..linalg.elimination import det, det_by_permutations, rank
from ..linalg.matrix import (
    BinMatrix,
    Matrix,
    RatMatrix,
    adjoin_identity,
    embed,
    support,
)
from ..linalg.pivoting import (
    PivotSpec,
    long_tableau_pivot,
    pivoted_labels,
    pivot_submatrix_det_ratio,
    short_tableau_pivot,
    short_tableau_pivot_constructive,
)
from ..linalg.unimodular import (
    Signing,
    find_tu_signing,
    is_k_pu,
    is_signing_of,
    is_tu,
    scale_cols,
    scale_rows,
)
from ..matroid.graphs import (
    cographic_standard_repr,
    graphic_standard_repr,
    incidence_matrix,
    is_node_incidence,
)
from ..matroid.matroid import (
    StandardRepr,
    check_axioms,
    dual_matroid,
    dual_repr,
    find_base,
    first_difference,
    matroids_equal,
    orthogonal_complement_labels,
    orthogonal_complement_standard,
    orthogonal_dual_matroid,
    row_space_dual_standard,
    row_space_labels,
    row_space_standard,
    same_support_check,
    standard_repr_matroid,
    standardize,
    vector_matroid,
)
from ..matroid.signing import (
    bordered_c_matrix,
    bordered_d_matrix,
    canonical_resign,
    canonical_signing_sum3,
    d_product,
    in_mls3_class,
    mls3_class_of,
    parallel_vectors,
    sum1_signing,
    sum2_signing,
)
from ..matroid.special import r10
from ..matroid.sums import coupling_block, sum1, sum2, sum3, validate_sum3
from ..transcript import FAIL, PASS, CheckResult, Transcript
from .constants import MAX_SIZE, SEED, SUM3_PRIVATE_MAX, TRIALS
from .generators import (
    random_digraph,
    random_pivot_instance,
    random_rational_matrix,
    random_signs,
    random_sum2_instance,
    random_sum3_instance,
    random_tu_matrix,
    random_tu_repr,
)

logger = logging.getLogger("regmat." + __name__)

PivotFn = Callable[[RatMatrix, PivotSpec], RatMatrix]


def mutant_short_pivot(a: RatMatrix, p: PivotSpec) -> RatMatrix:
    """
    Short pivot with the sign of the rank-one update flipped.

    Used to show that the suite rejects a wrong pivot.

    """
    px, py = a.row_index(p.row), a.col_index(p.col)
    value = a.at(px, py)

    def entry(i: int, j: int) -> Fraction:
        if i == px and j == py:
            return 1 / value
        if i == px:
            return a.at(px, j) / value
        if j == py:
            return -a.at(i, py) / value
        return a.at(i, j) + a.at(i, py) * a.at(px, j) / value

    rows, cols = pivoted_labels(a, p)
    return RatMatrix.from_function(rows, cols, entry, positional=True)


@dataclass(frozen=True)
class SuiteConfig:
    max_size: int = MAX_SIZE
    pivot: PivotFn = short_tableau_pivot


# A property runs one trial and returns a counterexample or None.
Property = Callable[[random.Random, SuiteConfig], "str | None"]

PROPERTIES: dict[str, Property] = {}
# Properties without randomness run a single trial.
SINGLE_TRIAL: set[str] = set()


def lemma(name: str, single: bool = False):
    def register(fn: Property) -> Property:
        PROPERTIES[name] = fn
        if single:
            SINGLE_TRIAL.add(name)
        return fn

    return register


def _show(m: Matrix) -> str:
    try:
        return encode_matrix(m).rstrip("\n")
    except ParseError:
        return repr(m.to_rows())


def _dump(reason: str, **items) -> str:
    lines = [reason]
    for name, item in items.items():
        if isinstance(item, (RatMatrix, BinMatrix)):
            lines.append(f"{name}:")
            lines.extend("  " + row for row in _show(item).splitlines())
        else:
            lines.append(f"{name}: {item!r}")
    return "\n".join(lines)


def _small(cfg: SuiteConfig, cap: int) -> int:
    return max(1, min(cap, cfg.max_size))


def _unit_matrix(rng: random.Random, rows: int, cols: int) -> RatMatrix:
    return RatMatrix.from_rows(
        [[rng.choice((-1, 0, 1)) for _ in range(cols)] for _ in range(rows)]
    )


def _random_gf2_repr(rng: random.Random, ground: int) -> StandardRepr:
    m = rng.randint(0, ground)
    n = ground - m
    grid = [[rng.randint(0, 1) for _ in range(n)] for _ in range(m)]
    return StandardRepr(
        BinMatrix.from_rows(
            grid,
            row_labels=[f"x{i}" for i in range(m)],
            col_labels=[f"y{j}" for j in range(n)],
        )
    )


# --------------------------------------------------------------------------- #
# Determinants and supports
# --------------------------------------------------------------------------- #


@lemma("det-permutation-expansion")
def det_matches_permutation_expansion(rng, cfg):
    n = rng.randint(0, _small(cfg, 5))
    a = random_rational_matrix(rng, n, n)
    if det(a) != det_by_permutations(a):
        return _dump("elimination and permutation expansion differ", a=a)
    return None


@lemma("det-block-triangular")
def det_of_block_triangular(rng, cfg):
    k1 = rng.randint(1, _small(cfg, 3))
    k2 = rng.randint(1, _small(cfg, 3))
    a11 = random_rational_matrix(rng, k1, k1).to_rows()
    a12 = random_rational_matrix(rng, k1, k2).to_rows()
    a22 = random_rational_matrix(rng, k2, k2).to_rows()
    grid = [a11[i] + a12[i] for i in range(k1)]
    grid += [[Fraction(0)] * k1 + a22[i] for i in range(k2)]
    a = RatMatrix.from_rows(grid)
    expected = det(RatMatrix.from_rows(a11)) * det(RatMatrix.from_rows(a22))
    if det(a) != expected:
        return _dump("det is not the product of the diagonal blocks", a=a)
    return None


@lemma("support-commutes")
def support_commutes(rng, cfg):
    m, n = rng.randint(1, cfg.max_size), rng.randint(1, cfg.max_size)
    a = random_rational_matrix(rng, m, n)
    b = support(a)
    rows = rng.sample(a.row_labels, rng.randint(1, m))
    cols = rng.sample(a.col_labels, rng.randint(1, n))
    if support(embed(b)) != b:
        return _dump("support of the embedding differs", b=b)
    if support(a.transpose()) != b.transpose():
        return _dump("support does not commute with transpose", a=a)
    if support(a.submatrix(rows, cols)) != b.submatrix(rows, cols):
        return _dump("support does not commute with submatrix", a=a)
    return None


@lemma("rank-vs-det")
def rank_agrees_with_det(rng, cfg):
    n = rng.randint(1, _small(cfg, 4))
    a = _unit_matrix(rng, n, n)
    if (det(a) != 0) != (rank(a) == n):
        return _dump("full rank and nonzero det disagree", a=a)
    return None


# --------------------------------------------------------------------------- #
# Pivots
# --------------------------------------------------------------------------- #


@lemma("short-pivot-closed-form")
def short_pivot_closed_form(rng, cfg):
    a, x, y = random_pivot_instance(rng, cfg.max_size)
    p = PivotSpec(x, y)
    got = cfg.pivot(a, p)
    expected = short_tableau_pivot_constructive(a, p)
    if got != expected:
        return _dump("closed form differs", a=a, pivot=p, got=got)
    return None


@lemma("pivot-det-ratio")
def pivot_det_ratio(rng, cfg):
    a, x, y = random_pivot_instance(rng, cfg.max_size, square=True)
    p = PivotSpec(x, y)
    ratio = pivot_submatrix_det_ratio(a, p, cfg.pivot)
    if not ratio.holds:
        return _dump("det ratio fails", a=a, pivot=p, ratio=ratio)
    return None


@lemma("pivot-involution")
def pivot_involution(rng, cfg):
    a, x, y = random_pivot_instance(rng, cfg.max_size)
    p = PivotSpec(x, y)
    back = cfg.pivot(cfg.pivot(a, p), PivotSpec(y, x))
    if back != a:
        return _dump("pivoting twice does not restore", a=a, pivot=p)
    return None


@lemma("pivot-keeps-zero-block")
def pivot_keeps_zero_block(rng, cfg):
    m1, n1 = rng.randint(1, _small(cfg, 3)), rng.randint(1, _small(cfg, 3))
    m2, n2 = rng.randint(1, _small(cfg, 3)), rng.randint(1, _small(cfg, 3))
    b11 = random_rational_matrix(rng, m1, n1).to_rows()
    b21 = random_rational_matrix(rng, m2, n1).to_rows()
    b22 = random_rational_matrix(rng, m2, n2).to_rows()
    i, j = rng.randrange(m1), rng.randrange(n1)
    if b11[i][j] == 0:
        b11[i][j] = Fraction(1)
    top = tuple(f"a{k}" for k in range(m1))
    bottom = tuple(f"b{k}" for k in range(m2))
    left = tuple(f"p{k}" for k in range(n1))
    right = tuple(f"q{k}" for k in range(n2))
    grid = [row + [Fraction(0)] * n2 for row in b11]
    grid += [b21[k] + b22[k] for k in range(m2)]
    c = RatMatrix.from_rows(grid, top + bottom, left + right)
    p = PivotSpec(top[i], left[j])

    after = cfg.pivot(c, p)
    top_after = tuple(p.col if x == p.row else x for x in top)
    left_after = tuple(p.row if y == p.col else y for y in left)
    if not after.submatrix(top_after, right).is_zero():
        return _dump("zero block lost", c=c, pivot=p)
    if after.submatrix(bottom, right) != c.submatrix(bottom, right):
        return _dump("bottom-right block changed", c=c, pivot=p)
    expected = cfg.pivot(c.submatrix(None, left), p)
    if after.submatrix(None, left_after) != expected:
        return _dump("left block is not the pivot of [B11; B21]", c=c)
    return None


# --------------------------------------------------------------------------- #
# Total unimodularity
# --------------------------------------------------------------------------- #


@lemma("tu-closed-under-pivots")
def tu_closed_under_pivots(rng, cfg):
    a = random_tu_matrix(rng, cfg.max_size)
    nonzero = a.nonzero_positions()
    if not nonzero:
        return None
    p = PivotSpec(*rng.choice(nonzero))
    for name, pivot in (("long", long_tableau_pivot), ("short", cfg.pivot)):
        report = is_tu(pivot(a, p))
        if not report:
            return _dump(
                f"{name} pivot is not TU",
                a=a,
                pivot=p,
                witness=report.witness,
            )
    return None


@lemma("tu-closed-under-scaling")
def tu_closed_under_scaling(rng, cfg):
    a = random_tu_matrix(rng, cfg.max_size)
    scaled = scale_cols(
        scale_rows(a, random_signs(rng, a.row_labels, allow_zero=True)),
        random_signs(rng, a.col_labels, allow_zero=True),
    )
    for name, m in (("scaled", scaled), ("transposed", a.transpose())):
        if not is_tu(m):
            return _dump(f"{name} matrix is not TU", a=a, result=m)
    return None


@lemma("tu-iff-every-k-pu")
def tu_iff_every_k_pu(rng, cfg):
    m, n = rng.randint(1, _small(cfg, 4)), rng.randint(1, _small(cfg, 4))
    a = _unit_matrix(rng, m, n)
    every = all(is_k_pu(a, k) for k in range(1, min(m, n) + 1))
    if bool(is_tu(a)) != every:
        return _dump("TU and k-PU for all k disagree", a=a)
    return None


@lemma("tu-adjoin-identity")
def tu_adjoin_identity(rng, cfg):
    a = random_tu_matrix(rng, cfg.max_size)
    if not is_tu(adjoin_identity(a)):
        return _dump("[1 | A] is not TU for TU A", a=a)
    u = _unit_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
    if bool(is_tu(u)) != bool(is_tu(adjoin_identity(u))):
        return _dump("adjoining the identity changed TU-ness", a=u)
    return None


# --------------------------------------------------------------------------- #
# 1-, 2- and 3-sums
# --------------------------------------------------------------------------- #


def _given(s: StandardRepr) -> Signing:
    return Signing(s.b, support(s.b), "given")


@lemma("sum1-preserves-tu")
def sum1_preserves_tu(rng, cfg):
    bl = random_tu_repr(rng, cfg.max_size, "l")
    br = random_tu_repr(rng, cfg.max_size, "r")
    s = sum1(bl, br).b
    if not is_tu(s):
        return _dump("1-sum of TU matrices is not TU", bl=bl.b, br=br.b)
    signing = sum1_signing(_given(bl), _given(br))
    expected = sum1(
        StandardRepr(support(bl.b)), StandardRepr(support(br.b))
    ).b
    if signing.of != expected or not is_signing_of(signing.signed, expected):
        return _dump("signed 1-sum is not a signing", bl=bl.b, br=br.b)
    return None


@lemma("sum2-preserves-tu")
def sum2_preserves_tu(rng, cfg):
    inst = random_sum2_instance(rng, cfg.max_size)
    bl, br, x, y = inst.bl, inst.br, inst.x, inst.y
    s = sum2(bl, br, x, y).b
    if not is_tu(coupling_block(bl, br, x, y)):
        return _dump("[D | Ar] is not TU", bl=bl.b, br=br.b, x=x, y=y)
    if not is_tu(s):
        return _dump("2-sum is not TU", bl=bl.b, br=br.b, x=x, y=y)
    signing = sum2_signing(_given(bl), _given(br), x, y)
    expected = sum2(
        StandardRepr(support(bl.b)), StandardRepr(support(br.b)), x, y
    ).b
    if not is_signing_of(signing.signed, expected):
        return _dump("signed 2-sum is not a signing", bl=bl.b, br=br.b)
    return None


@lemma("sum2-pivot-commutes")
def sum2_pivot_commutes(rng, cfg):
    inst = random_sum2_instance(rng, cfg.max_size)
    bl, br, x, y = inst.bl, inst.br, inst.x, inst.y
    candidates = [
        (i, j) for i, j in bl.b.nonzero_positions() if i != x
    ]
    if not candidates:
        return None
    p = PivotSpec(*rng.choice(candidates))
    after = cfg.pivot(sum2(bl, br, x, y).b, p)

    left = StandardRepr(cfg.pivot(bl.b, p))
    right, y_after = br, y
    if p.col == y:
        # the shared column moved to the row side; it keeps label p.row
        right = StandardRepr(br.b.relabel(col_map={y: p.row}))
        y_after = p.row
    expected = sum2(left, right, x, y_after).b
    if after != expected:
        return _dump(
            "pivot and 2-sum do not commute",
            bl=bl.b,
            br=br.b,
            x=x,
            y=y,
            pivot=p,
        )
    return None


def _sum3_pipeline(inst) -> tuple[RatMatrix, str | None]:
    frame = inst.frame
    bl = StandardRepr(support(inst.bl_signed))
    br = StandardRepr(support(inst.br_signed))
    blocks = validate_sum3(bl, br, frame)
    f = blocks.frame
    b2 = canonical_signing_sum3(inst.bl_signed, inst.br_signed, frame)

    def fail(reason: str) -> tuple[RatMatrix, str]:
        return b2, _dump(
            reason,
            frame=frame,
            left=inst.bl_signed,
            right=inst.br_signed,
            signed=b2,
        )

    if not is_signing_of(b2, sum3(blocks).b):
        return fail("B'' is not a signing of the 3-sum")

    ql = canonical_resign(inst.bl_signed, f)
    qr = canonical_resign(inst.br_signed, f)
    for columns in ((0, 2), (1, 2), (0, 1, 2)):
        if not is_tu(bordered_c_matrix(qr, f, columns)):
            return fail(f"[c {columns} | Ar] is not TU")
        if not is_tu(bordered_d_matrix(ql, f, columns)):
            return fail(f"[Al; d {columns}] is not TU")

    vectors = parallel_vectors(b2, frame)
    c0, c1, c2 = vectors.c0, vectors.c1, vectors.c2
    for i in f.bottom_rows:
        if c2[i] not in (-1, 0, 1) or (c0[i], c1[i]) in ((1, -1), (-1, 1)):
            return fail(f"c vectors are not compatible at row {i!r}")
    d = b2.submatrix(f.bottom_rows, f.left_part_cols)
    if d != d_product(vectors, blocks.d0_class.kind):
        return fail("D'' is not the product of c and d vectors")

    allowed_cols = set()
    for vec in (c0, c1, c2):
        column = tuple(vec[i] for i in f.bottom_rows)
        allowed_cols.add(column)
        allowed_cols.add(tuple(-v for v in column))
    allowed_cols.add((Fraction(0),) * len(f.bottom_rows))
    for j in f.left_part_cols:
        if d.col(j) not in allowed_cols:
            return fail(f"column {j!r} of D'' is not parallel to c")
    allowed_rows = set()
    for vec in (vectors.d0, vectors.d1, vectors.d2):
        row = tuple(vec[j] for j in f.left_part_cols)
        allowed_rows.add(row)
        allowed_rows.add(tuple(-v for v in row))
    allowed_rows.add((Fraction(0),) * len(f.left_part_cols))
    for i in f.bottom_rows:
        if d.row(i) not in allowed_rows:
            return fail(f"row {i!r} of D'' is not parallel to d")

    if not is_tu(b2):
        return fail("canonical signing of the 3-sum is not TU")
    report = in_mls3_class(b2, mls3_class_of(b2, frame))
    if not report:
        return fail(f"not in its class: {report.failed}")
    return b2, None


@lemma("sum3-canonical-signing")
def sum3_canonical_signing(rng, cfg):
    inst = random_sum3_instance(
        rng, max_private=min(SUM3_PRIVATE_MAX, max(0, cfg.max_size - 2))
    )
    _, counterexample = _sum3_pipeline(inst)
    return counterexample


@lemma("class-closed-under-pivots")
def class_closed_under_pivots(rng, cfg):
    inst = random_sum3_instance(
        rng, max_private=min(SUM3_PRIVATE_MAX, max(0, cfg.max_size - 2))
    )
    b2, counterexample = _sum3_pipeline(inst)
    if counterexample:
        return counterexample
    cls = mls3_class_of(b2, inst.frame)
    candidates = [
        (x, y) for x in cls.xl for y in cls.yl if b2[x, y] != 0
    ]
    if not candidates:
        return None
    p = PivotSpec(*rng.choice(candidates))
    report = in_mls3_class(cfg.pivot(b2, p), cls.after_pivot(p))
    if not report:
        return _dump(
            f"pivot left the class: {report.failed}",
            signed=b2,
            pivot=p,
            details=report.details,
        )
    return None


# --------------------------------------------------------------------------- #
# Matroids
# --------------------------------------------------------------------------- #


@lemma("dual-representation")
def dual_representation(rng, cfg):
    s = _random_gf2_repr(rng, rng.randint(1, _small(cfg, 4) * 2))
    m = standard_repr_matroid(s)
    dual = standard_repr_matroid(dual_repr(s))
    diff = first_difference(dual_matroid(m), dual)
    if diff is not None:
        return _dump("dual of [1|B] is not [1|B^T]", b=s.b, subset=diff)
    if not matroids_equal(orthogonal_dual_matroid(s.full()), dual):
        return _dump("orthogonal dual differs", b=s.b)
    if row_space_standard(s) != row_space_labels(s.full()):
        return _dump("row space of [1|B] is not {(u, uB)}", b=s.b)
    complement = orthogonal_complement_standard(s)
    if complement != orthogonal_complement_labels(s.full()):
        return _dump("complement of [1|B] is not {(Bv, v)}", b=s.b)
    if row_space_dual_standard(s) != complement:
        return _dump("row space of the dual is not the complement", b=s.b)
    return None


@lemma("support-matroid")
def support_matroid(rng, cfg):
    a = random_tu_matrix(rng, _small(cfg, 4), _small(cfg, 5))
    if not matroids_equal(vector_matroid(a), vector_matroid(support(a))):
        return _dump("TU matrix and its support differ as matroids", a=a)
    base = find_base(vector_matroid(a))
    rescaled = scale_cols(
        scale_rows(a, random_signs(rng, a.row_labels)),
        random_signs(rng, a.col_labels),
    )
    if not same_support_check(
        standardize(a, base), standardize(rescaled, base)
    ):
        return _dump("standardizations at one base differ", a=a, base=base)
    return None


@lemma("graphic-incidence")
def graphic_incidence(rng, cfg):
    g = random_digraph(
        rng, rng.randint(1, _small(cfg, 5)), rng.randint(0, _small(cfg, 6))
    )
    a = incidence_matrix(g)
    if not is_node_incidence(a) or not is_tu(a):
        return _dump("incidence matrix is not a TU node incidence", a=a)
    for build in (graphic_standard_repr, cographic_standard_repr):
        rep = build(g)
        if not is_tu(rep.witness.signed):
            return _dump(f"{build.__name__} witness is not TU", a=a)
    rep = graphic_standard_repr(g)
    if not matroids_equal(
        vector_matroid(a), standard_repr_matroid(rep.representation)
    ):
        return _dump("standard representation changes the matroid", a=a)
    return None


@lemma("dual-of-regular")
def dual_of_regular(rng, cfg):
    s = random_tu_repr(rng, cfg.max_size, "")
    if not is_tu(dual_repr(s).b):
        return _dump("-B^T of a TU matrix is not TU", b=s.b)
    return None


@lemma("zero-rows-keep-matroid")
def zero_rows_keep_matroid(rng, cfg):
    m, n = rng.randint(1, _small(cfg, 4)), rng.randint(1, _small(cfg, 5))
    a = random_rational_matrix(rng, m, n)
    grid = a.to_rows()
    at = rng.randint(0, m)
    grid.insert(at, [Fraction(0)] * n)
    padded = RatMatrix.from_rows(grid, col_labels=a.col_labels)
    if not matroids_equal(vector_matroid(a), vector_matroid(padded)):
        return _dump("zero row changed the matroid", a=a)
    return None


@lemma("matroid-axioms")
def matroid_axioms(rng, cfg):
    s = _random_gf2_repr(rng, rng.randint(1, _small(cfg, 4) * 2))
    primal = standard_repr_matroid(s)
    for m in (primal, dual_matroid(primal)):
        report = check_axioms(m)
        if not report.ok:
            return _dump("axioms fail", b=s.b, report=report)
    return None


@lemma("r10-regular", single=True)
def r10_regular(rng, cfg):
    s = r10()
    signing = find_tu_signing(s.b)
    if signing is None or not is_tu(signing.signed):
        return _dump("R10 has no TU signing", b=s.b)
    m = standard_repr_matroid(s)
    if not matroids_equal(m, dual_matroid(dual_matroid(m))):
        return _dump("R10 is not its double dual", b=s.b)
    return None


@lemma("exhaustive-duality-small", single=True)
def exhaustive_duality_small(rng, cfg):
    for m, n in product(range(4), repeat=2):
        for bits in range(1 << (m * n)):
            grid = [
                [(bits >> (i * n + j)) & 1 for j in range(n)]
                for i in range(m)
            ]
            s = StandardRepr(
                BinMatrix.from_rows(
                    grid,
                    row_labels=[f"x{i}" for i in range(m)],
                    col_labels=[f"y{j}" for j in range(n)],
                )
            )
            dual = dual_matroid(standard_repr_matroid(s))
            if not matroids_equal(dual, standard_repr_matroid(dual_repr(s))):
                return _dump("dual representation fails", b=s.b)
    return None


# --------------------------------------------------------------------------- #
# Runner
# --------------------------------------------------------------------------- #


def run_property(
    name: str,
    rng: random.Random,
    trials: int,
    cfg: SuiteConfig | None = None,
) -> CheckResult:
    cfg = cfg or SuiteConfig()
    fn = PROPERTIES[name]
    count = min(1, trials) if name in SINGLE_TRIAL else trials
    for trial in range(1, count + 1):
        try:
            counterexample = fn(rng, cfg)
        except RegmatError as exc:
            counterexample = f"{type(exc).__name__}: {exc}"
        if counterexample is not None:
            logger.warning("property %s failed at trial %d", name, trial)
            return CheckResult(name, FAIL, trial, counterexample)
    logger.debug("property %s passed %d trials", name, count)
    return CheckResult(name, PASS, count, note="0 trials" if not count else "")


def run_suite(
    seed: int = SEED,
    trials: int = TRIALS,
    max_size: int = MAX_SIZE,
    mutant: bool = False,
    names: list[str] | None = None,
) -> Transcript:
    """
    Run every registered property with one seeded generator.

    Properties run in registration order and share the generator, so a
    seed reproduces the whole transcript.

    """
    pivot = mutant_short_pivot if mutant else short_tableau_pivot
    cfg = SuiteConfig(max_size=max_size, pivot=pivot)
    rng = random.Random(seed)
    command = f"verify-blueprint --seed {seed} --trials {trials}"
    command += f" --max-size {max_size}" + (" --mutant" if mutant else "")
    transcript = Transcript(command, seed)
    for name in names or list(PROPERTIES):
        transcript.checks.append(run_property(name, rng, trials, cfg))
    logger.info(
        "blueprint suite finished",
        extra={
            "seed": seed,
            "trials": trials,
            "mutant": mutant,
            "failed": [c.name for c in transcript.checks if not c.passed],
        },
    )
    return transcript


__all__ = [
    "PROPERTIES",
    "SuiteConfig",
    "mutant_short_pivot",
    "run_property",
    "run_suite",
]

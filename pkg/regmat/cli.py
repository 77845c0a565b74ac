# cli.py
from __future__ import annotations

import argparse
import logging
import logging.config
import sys

from .blueprint.constants import MAX_SIZE, SEED, TRIALS
from .blueprint.suite import run_suite
from .errors import FieldMismatch, ParseError, RegmatError
from .linalg.codec import encode_matrix, read_matrix
from .linalg.constants import TU_MINOR_LIMIT
from .linalg.matrix import BinMatrix, Matrix, RatMatrix, support
from .linalg.pivoting import PivotSpec, long_tableau_pivot, short_tableau_pivot
from .linalg.unimodular import (
    TuReport,
    find_tu_signing,
    is_k_pu,
    is_signing_of,
    is_tu,
)
from .matroid.codec import read_frame, read_tree
from .matroid.constants import AXIOM_GROUND_LIMIT
from .matroid.matroid import (
    StandardRepr,
    bases,
    check_axioms,
    dual_matroid,
    dual_repr,
    first_difference,
    is_base,
    standard_repr_matroid,
    vector_matroid,
)
from .matroid.signing import (
    canonical_signing_sum3,
    in_mls3_class,
    mls3_class_of,
)
from .matroid.special import eval_good_tree
from .matroid.sums import sum1, sum2, sum3, validate_sum3
from .transcript import EXIT_INPUT_ERROR, Transcript

logger = logging.getLogger("regmat." + __name__)

FORMAT_TEXT = "text"
FORMAT_STRUCTURED = "structured"


def configure_logging(level: str) -> None:
    logging.config.dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "verbose_regmat": {
                    "format": "regmat: [%(levelname)s] %(name)s "
                    "%(funcName)s(): %(message)s",
                },
            },
            "handlers": {
                "console_regmat": {
                    "class": "logging.StreamHandler",
                    "formatter": "verbose_regmat",
                    "stream": "ext://sys.stderr",
                },
            },
            "loggers": {
                "regmat": {
                    "handlers": ["console_regmat"],
                    "level": level.upper(),
                    "propagate": False,
                },
            },
        }
    )


# --------------------------------------------------------------------------- #
# Helpers
# --------------------------------------------------------------------------- #


def _rational(path) -> RatMatrix:
    m = read_matrix(path)
    if not isinstance(m, RatMatrix):
        raise FieldMismatch(f"{path}: expected a Q matrix")
    return m


def _binary(path) -> BinMatrix:
    """
    GF(2) matrix from a file; a Q file is read through its support.
    """
    return support(read_matrix(path))


def _labels(text: str | None) -> list[str]:
    if not text:
        return []
    return [part.strip() for part in text.split(",") if part.strip()]


def _report(t: Transcript, name: str, report: TuReport) -> None:
    verdict = "yes" if report.is_tu else "no"
    t.outputs[name] = f"{name.upper()}: {verdict}"
    witness = None
    if report.witness is not None:
        w = report.witness
        witness = (
            f"rows {' '.join(map(str, w.rows))}\n"
            f"cols {' '.join(map(str, w.cols))}\n"
            f"det {w.det}"
        )
    t.add(name, report.is_tu, witness, note=f"{report.minors_checked} minors")


def _matrix(t: Transcript, name: str, m: Matrix) -> None:
    t.outputs[name] = encode_matrix(m)


def _difference(diff: frozenset | None) -> str | None:
    if diff is None:
        return None
    return "independence differs on " + ", ".join(sorted(map(str, diff)))


# --------------------------------------------------------------------------- #
# Commands
# --------------------------------------------------------------------------- #


def cmd_check_tu(args, t: Transcript) -> None:
    a = _rational(args.path)
    if args.k is None:
        _report(t, "tu", is_tu(a, args.limit))
    else:
        _report(t, f"{args.k}-pu", is_k_pu(a, args.k, args.limit))


def cmd_check_kpu(args, t: Transcript) -> None:
    a = _rational(args.path)
    _report(t, f"{args.k}-pu", is_k_pu(a, args.k, args.limit))


def cmd_sign(args, t: Transcript) -> None:
    b = _binary(args.path)
    signing = find_tu_signing(b, minor_limit=args.limit)
    t.add("signing", signing is not None, None if signing else "no signing")
    if signing is None:
        return
    _matrix(t, "signing", signing.signed)
    t.add("is-signing", is_signing_of(signing.signed, b))
    _report(t, "tu", is_tu(signing.signed, args.limit))


def cmd_pivot(args, t: Transcript) -> None:
    a = _rational(args.path)
    pivot = long_tableau_pivot if args.mode == "long" else short_tableau_pivot
    _matrix(t, "pivoted", pivot(a, PivotSpec(args.row, args.col)))


def _pair(args) -> tuple[StandardRepr, StandardRepr]:
    return (
        StandardRepr(read_matrix(args.left)),
        StandardRepr(read_matrix(args.right)),
    )


def cmd_sum1(args, t: Transcript) -> None:
    _matrix(t, "sum1", sum1(*_pair(args)).b)


def cmd_sum2(args, t: Transcript) -> None:
    bl, br = _pair(args)
    _matrix(t, "sum2", sum2(bl, br, args.x, args.y).b)


def cmd_sum3(args, t: Transcript) -> None:
    bl, br = _pair(args)
    blocks = validate_sum3(bl, br, read_frame(args.frame))
    t.outputs["D0"] = blocks.d0_class.kind
    _matrix(t, "sum3", sum3(blocks).b)


def _signed(path, limit: int) -> RatMatrix:
    m = read_matrix(path)
    if isinstance(m, RatMatrix):
        return m
    signing = find_tu_signing(m, minor_limit=limit)
    if signing is None:
        raise FieldMismatch(f"{path}: summand has no TU signing")
    return signing.signed


def cmd_sign_sum3(args, t: Transcript) -> None:
    frame = read_frame(args.frame)
    left = _signed(args.left, args.limit)
    right = _signed(args.right, args.limit)
    b2 = canonical_signing_sum3(left, right, frame)
    _matrix(t, "signed-sum3", b2)
    blocks = validate_sum3(
        StandardRepr(support(left)), StandardRepr(support(right)), frame
    )
    t.add("is-signing", is_signing_of(b2, sum3(blocks).b))
    _report(t, "tu", is_tu(b2, args.limit))
    report = in_mls3_class(b2, mls3_class_of(b2, frame), args.limit)
    t.add(
        "class",
        report.ok,
        "\n".join(f"{k}: {v}" for k, v in report.details.items()) or None,
    )


def cmd_dual(args, t: Transcript) -> None:
    _matrix(t, "dual", dual_repr(StandardRepr(read_matrix(args.path))).b)


def _matroid_of(path, standard: bool):
    m = read_matrix(path)
    if standard:
        return standard_repr_matroid(StandardRepr(m))
    return vector_matroid(m)


def cmd_matroid(args, t: Transcript) -> None:
    if args.op == "dual":
        s = StandardRepr(read_matrix(args.path))
        dual = dual_matroid(standard_repr_matroid(s))
        diff = first_difference(dual, standard_repr_matroid(dual_repr(s)))
        t.outputs["dual-bases"] = "\n".join(
            ",".join(sorted(map(str, base))) for base in bases(dual)
        )
        t.add("dual-representation", diff is None, _difference(diff))
        return
    m = _matroid_of(args.path, args.standard)
    if args.op == "equal":
        if args.other is None:
            raise ParseError("matroid equal needs two matrix files")
        diff = first_difference(m, _matroid_of(args.other, args.standard))
        t.add("equal", diff is None, _difference(diff))
        return
    subset = _labels(args.subset)
    if args.op == "indep":
        t.add("independent", m.is_independent(subset))
    else:
        t.add("base", is_base(m, subset))


def cmd_good(args, t: Transcript) -> None:
    result = eval_good_tree(read_tree(args.path), args.limit, verify=False)
    _matrix(t, "representation", result.representation.b)
    _matrix(t, "signing", result.signing.signed)
    t.add(
        "is-signing",
        is_signing_of(result.signing.signed, result.representation.b),
    )
    report = is_tu(result.signing.signed, args.limit)
    _report(t, "tu", report)
    if report.is_tu:
        t.outputs["verdict"] = "TU verified"
    ground = len(result.representation.ground)
    if ground > AXIOM_GROUND_LIMIT:
        t.skip("axioms", f"ground {ground} > {AXIOM_GROUND_LIMIT}")
        return
    axioms = check_axioms(standard_repr_matroid(result.representation))
    t.add("axioms", axioms.ok, axioms.failed)


def cmd_verify_blueprint(args, t: Transcript) -> Transcript:
    suite = run_suite(args.seed, args.trials, args.max_size, args.mutant)
    suite.command = t.command
    return suite


COMMANDS = {
    "check-tu": cmd_check_tu,
    "check-kpu": cmd_check_kpu,
    "sign": cmd_sign,
    "pivot": cmd_pivot,
    "sum1": cmd_sum1,
    "sum2": cmd_sum2,
    "sum3": cmd_sum3,
    "sign-sum3": cmd_sign_sum3,
    "dual": cmd_dual,
    "matroid": cmd_matroid,
    "good": cmd_good,
    "verify-blueprint": cmd_verify_blueprint,
}


# --------------------------------------------------------------------------- #
# Parser
# --------------------------------------------------------------------------- #


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regmat",
        description="Totally unimodular matrices and regular matroids",
    )
    parser.add_argument(
        "--format",
        choices=(FORMAT_TEXT, FORMAT_STRUCTURED),
        default=FORMAT_TEXT,
    )
    parser.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--limit", type=int, default=TU_MINOR_LIMIT)
        return p

    p = command("check-tu", "check total unimodularity of a Q matrix")
    p.add_argument("path")
    p.add_argument("--k", type=int)

    p = command("check-kpu", "check every k x k minor of a Q matrix")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)

    p = command("sign", "find a TU signing of a GF(2) matrix")
    p.add_argument("path")

    p = command("pivot", "long or short tableau pivot")
    p.add_argument("path")
    p.add_argument("--mode", choices=("long", "short"), default="short")
    p.add_argument("--row", required=True)
    p.add_argument("--col", required=True)

    p = command("sum1", "1-sum of two standard representations")
    p.add_argument("left")
    p.add_argument("right")

    p = command("sum2", "2-sum of two standard representations")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    for name, help in (
        ("sum3", "3-sum of two GF(2) standard representations"),
        ("sign-sum3", "canonical signing of a 3-sum"),
    ):
        p = command(name, help)
        p.add_argument("left")
        p.add_argument("right")
        p.add_argument("--frame", required=True)

    p = command("dual", "dual standard representation")
    p.add_argument("path")

    p = command("matroid", "matroid oracle queries")
    p.add_argument("op", choices=("indep", "base", "dual", "equal"))
    p.add_argument("path")
    p.add_argument("other", nargs="?")
    p.add_argument("--subset", help="comma-separated labels")
    p.add_argument(
        "--standard",
        action="store_true",
        help="read matrices as standard representations [1 | B]",
    )

    p = command("good", "evaluate a good-tree file")
    p.add_argument("path")

    p = command("verify-blueprint", "run the lemma property suite")
    p.add_argument("--seed", type=int, default=SEED)
    p.add_argument("--trials", type=int, default=TRIALS)
    p.add_argument("--max-size", type=int, default=MAX_SIZE)
    p.add_argument(
        "--mutant",
        action="store_true",
        help="swap in a short pivot with one sign flipped",
    )
    return parser


def execute(args: argparse.Namespace, command: str) -> Transcript:
    """
    Run a parsed command. Input errors (any RegmatError, including files
    that are not UTF-8, or OSError) are recorded on the transcript, which
    then exits with code 2.
    """
    t = Transcript(command)
    try:
        result = COMMANDS[args.command](args, t)
    except (RegmatError, OSError) as exc:
        logger.error(
            "%s failed, exit %d: %s", args.command, EXIT_INPUT_ERROR, exc
        )
        t.error = f"{type(exc).__name__}: {exc}"
        return t
    return result or t


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    t = execute(args, " ".join(["regmat", *argv]))
    if args.format == FORMAT_STRUCTURED:
        sys.stdout.write(t.to_json() + "\n")
    else:
        sys.stdout.write(t.to_text())
    return t.exit_code


if __name__ == "__main__":
    sys.exit(main())

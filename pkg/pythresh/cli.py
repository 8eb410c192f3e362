"""pythresh 명령줄 인터페이스.

명령: gen, invariants, dist, verify, uniformity, recognize.
종료 코드: 0 성공, 1 사용법/검증 오류, 2 도메인 오류 (NotThreshold, 검증 불일치).
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, TextIO

from pythresh.config import Settings
from pythresh.distributions import closed_form
from pythresh.engines.base import elapsed_ms
from pythresh.exceptions import (
    EdgeListFormatError,
    NotThreshold,
    RecognitionDefect,
    ThresholdError,
    UsageError,
)
from pythresh.invariants import Invariant, invariant_report
from pythresh.lab import ThresholdLab
from pythresh.models.graph import EdgeListGraph, recognize
from pythresh.models.report import RunReport
from pythresh.models.sequence import CreationSequence, parse_sequence
from pythresh.rng import RNG_ALGORITHM, resolve_seed

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


class _Parser(argparse.ArgumentParser):
    """사용법 오류를 종료 코드 2 대신 UsageError로 알리는 파서."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(out: TextIO, data) -> None:
    out.write(json.dumps(data, ensure_ascii=False) + "\n")


def cmd_gen(args: argparse.Namespace, lab: ThresholdLab, out: TextIO) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    if args.count < 1:
        raise UsageError(f"--count must be >= 1, got {args.count}")
    seed = resolve_seed(args.seed, lab.settings.ci_deterministic)
    _logger.info("gen n=%d count=%d model=%s seed=%d rng=%s", args.n, args.count, args.model, seed, RNG_ALGORITHM)
    for s in lab.sampling.generate(args.n, args.count, seed, args.model):
        out.write(f"{s}\n")
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace, lab: ThresholdLab, out: TextIO) -> int:
    s = parse_sequence(args.seq)
    if any(k < 0 for k in args.k):
        raise UsageError("--k values must be >= 0")
    _emit(out, invariant_report(s, args.k).to_dict())
    return EXIT_OK


def cmd_dist(args: argparse.Namespace, lab: ThresholdLab, out: TextIO) -> int:
    started = time.perf_counter()
    invariant = Invariant.parse(args.invariant)
    if invariant.requires_k and args.k is None:
        raise UsageError("--k is required for --invariant kcore")
    dist = closed_form(invariant, args.n, args.k)
    if args.format == "csv":
        out.write(dist.to_csv())
        return EXIT_OK

    report = RunReport(
        command="dist",
        n=dist.order,
        k=dist.k,
        denominator=dist.denominator,
        cells=dist.to_dict()["cells"],
        elapsed_ms=elapsed_ms(started),
    )
    data = report.to_dict()
    data["invariant"] = dist.invariant
    _emit(out, data)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, lab: ThresholdLab, out: TextIO) -> int:
    report = lab.verification.verify(args.n_max, args.k_max)
    _emit(out, report.to_dict())
    return EXIT_OK if report.passed else EXIT_DOMAIN


def cmd_uniformity(args: argparse.Namespace, lab: ThresholdLab, out: TextIO) -> int:
    started = time.perf_counter()
    seed = resolve_seed(args.seed, lab.settings.ci_deterministic)
    result = lab.uniformity.uniformity_test(args.n, args.samples, seed, args.alpha, args.model)
    length = result.n - 1
    cells = [
        {"sequence": str(CreationSequence(code=code, length=length)), "count": count}
        for code, count in enumerate(result.observed)
    ]
    report = RunReport(
        command="uniformity",
        n=result.n,
        samples=result.samples,
        seed=result.seed,
        denominator=result.cells,
        cells=cells,
        statistic=result.statistic,
        df=result.df,
        p_value=result.p_value,
        decision=result.decision,
        rng=RNG_ALGORITHM,
        elapsed_ms=elapsed_ms(started),
    )
    data = report.to_dict()
    data["alpha"] = result.alpha
    data["model"] = result.model
    _emit(out, data)
    return EXIT_OK


def cmd_recognize(args: argparse.Namespace, lab: ThresholdLab, out: TextIO) -> int:
    path = Path(args.path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    except UnicodeDecodeError as exc:
        raise EdgeListFormatError(f"{path} is not valid UTF-8 text: {exc.reason} at byte {exc.start}")
    out.write(f"{recognize(EdgeListGraph.from_text(text))}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--workers", type=int, default=None, help="Worker processes (default: available cores)")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    parser = _Parser(prog="pythresh", description="Random threshold graphs via creation sequences.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_gen = subparsers.add_parser("gen", parents=[common], help="Generate random creation sequences")
    p_gen.add_argument("--n", type=int, required=True, help="Number of vertices")
    p_gen.add_argument("--count", type=int, default=1, help="Number of sequences (default: 1)")
    p_gen.add_argument("--seed", type=int, default=None, help="Master seed")
    p_gen.add_argument("--model", choices=["weights", "uniform"], default="weights")
    p_gen.set_defaults(handler=cmd_gen)

    p_inv = subparsers.add_parser("invariants", parents=[common], help="Closed-form invariants of one sequence")
    p_inv.add_argument("--seq", required=True, help="Creation sequence over {0,1} (may be empty)")
    p_inv.add_argument("--k", type=int, nargs="*", default=[], help="k values for k-core sizes")
    p_inv.set_defaults(handler=cmd_invariants)

    p_dist = subparsers.add_parser("dist", parents=[common], help="Exact distribution table")
    p_dist.add_argument("--n", type=int, required=True, help="Number of vertices")
    p_dist.add_argument("--invariant", required=True, help=", ".join(i.value for i in Invariant))
    p_dist.add_argument("--k", type=int, default=None, help="k for --invariant kcore")
    p_dist.add_argument("--format", choices=["json", "csv"], default="json")
    p_dist.set_defaults(handler=cmd_dist)

    p_verify = subparsers.add_parser("verify", parents=[common], help="Closed form vs enumeration vs oracles")
    p_verify.add_argument("--n-max", type=int, default=8, help="Largest order to check (default: 8)")
    p_verify.add_argument("--k-max", type=int, default=3, help="Largest k-core k (default: 3)")
    p_verify.set_defaults(handler=cmd_verify)

    p_uni = subparsers.add_parser("uniformity", parents=[common], help="Chi-square test of the weights model")
    p_uni.add_argument("--n", type=int, required=True, help="Number of vertices")
    p_uni.add_argument("--samples", type=int, required=True, help="Number of weight vectors")
    p_uni.add_argument("--seed", type=int, default=None, help="Master seed")
    p_uni.add_argument("--alpha", type=float, default=None, help="Significance level (default: 0.001)")
    p_uni.add_argument("--model", choices=["weights", "uniform"], default="weights")
    p_uni.set_defaults(handler=cmd_uniformity)

    p_rec = subparsers.add_parser("recognize", parents=[common], help="Creation sequence of an edge-list file")
    p_rec.add_argument("path", help="Edge-list file: 'n' then one 'u v' per line")
    p_rec.set_defaults(handler=cmd_recognize)

    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            stream=err,
        )
        lab = ThresholdLab(Settings.from_env(workers=args.workers))
        return args.handler(args, lab, out)
    except (NotThreshold, RecognitionDefect) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except ThresholdError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

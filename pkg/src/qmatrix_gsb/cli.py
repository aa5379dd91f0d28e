"""Command line entry point: ``qmgsb <subcommand> [options]``.

Exit codes: 0 success, 1 a check failed (non-trivial composition, failed
cross-check, pattern mismatch), 2 bad arguments, 3 unparseable expression.
``--format machine`` writes one JSON object per line; every record carries
``kind`` and ``schema`` fields (see README for the field list).
"""

from __future__ import annotations

import argparse
import json
import sys

from .elimination import EliminationProblem, find_witness, is_in_span_T, reconstruct
from .freealg import Generator, render_word
from .gsb import ReductionStep, reduce, verify_gsb
from .parser import ParseError, parse_poly
from .pbw import (
    check_pattern_hypothesis,
    cumulative,
    enumerate_normal,
    gk_dimension_readout,
    hilbert,
    hilbert_closed_form,
    quotient_dimension_bruteforce,
    reduced_span_rank,
)
from .qlaurent import QMode
from .quantum_matrix import build_relations

SCHEMA = 1
EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3
DEFAULT_MAX_N = 6


class UsageError(Exception):
    pass


class Output:
    def __init__(self, fmt: str, stream=None):
        self.machine = fmt == "machine"
        self.stream = stream or sys.stdout

    def text(self, line: str = "") -> None:
        if not self.machine:
            print(line, file=self.stream)

    def record(self, kind: str, **fields) -> None:
        if self.machine:
            print(json.dumps({"kind": kind, "schema": SCHEMA, **fields}, sort_keys=True), file=self.stream)


def _q_mode(text: str) -> QMode:
    try:
        return QMode.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _relations(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if args.n > DEFAULT_MAX_N and not args.allow_large:
        raise UsageError(f"--n above {DEFAULT_MAX_N} needs --allow-large")
    return build_relations(args.n, args.q)


def _expressions(args) -> list[str]:
    texts = list(getattr(args, "expr", None) or [])
    if getattr(args, "file", None):
        with open(args.file) as fh:
            texts += [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if not texts:
        raise UsageError("no expression given")
    return texts


# -- subcommands ----------------------------------------------------------


def cmd_relations(args, out: Output) -> int:
    S = _relations(args)
    for r in S.relations:
        out.text(f"{r.cls.value}  {r.name:<8} {r.poly}")
        out.record("relation", n=S.n, q=str(S.mode), **{"class": r.cls.value}, name=r.name,
                   indices=list(r.indices), leading=render_word(r.leading_word), poly=str(r.poly))
    counts = S.class_counts()
    out.text(f"{len(S)} relations: " + ", ".join(f"{k}:{v}" for k, v in counts.items()))
    out.record("relations_summary", n=S.n, q=str(S.mode), total=len(S), counts=counts)
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    S = _relations(args)
    verdict = verify_gsb(S, parallel=args.jobs > 1, jobs=args.jobs, keep_trace=args.trace)
    for rep in verdict.reports:
        out.record("composition", n=S.n, **rep.as_record())
    out.text(verdict.summary())
    for row, count in verdict.family_histogram.items():
        out.text(f"  {row:<10} {count}")
    for rep in verdict.failures:
        out.text(f"  FAILED {rep.ambiguity}: remainder {rep.remainder}")
    out.record(
        "verify",
        n=S.n,
        q=str(S.mode),
        total=verdict.total_ambiguities,
        trivial=verdict.trivial_count,
        inclusions=verdict.inclusions,
        confirmed=verdict.confirmed,
        histogram=verdict.family_histogram,
    )
    return EXIT_OK if verdict.confirmed else EXIT_CHECK_FAILED


def cmd_nf(args, out: Output) -> int:
    S = _relations(args)
    for text in _expressions(args):
        p = parse_poly(text, S.n, S.mode)
        steps: list[ReductionStep] = []
        nf = reduce(p, S, trace=steps)
        out.text(str(nf))
        if args.trace:
            for s in steps:
                out.text(f"  rewrite {render_word(s.word)} at {s.position} by {s.relation}")
        out.record("normal_form", n=S.n, q=str(S.mode), input=text, result=str(nf), steps=len(steps))
    return EXIT_OK


def cmd_pbw(args, out: Output) -> int:
    _relations(args)
    words = enumerate_normal(args.n, args.degree)
    for w in words:
        out.text(str(w))
    out.text(f"{len(words)} normal words of degree {args.degree}")
    out.record("pbw", n=args.n, degree=args.degree, count=len(words), words=[str(w) for w in words])
    return EXIT_OK


def cmd_hilbert(args, out: Output) -> int:
    S = _relations(args)
    data = hilbert(args.n, args.maxdeg)
    coeffs = list(data.coefficients)
    out.text(" ".join(str(c) for c in coeffs))
    ok = True
    record = {"n": args.n, "maxdeg": args.maxdeg, "coefficients": coeffs, "cumulative": cumulative(coeffs)}
    if args.check:
        closed = hilbert_closed_form(args.n, args.maxdeg)
        oracle = {}
        for d in range(min(args.maxdeg, args.oracle_maxdeg) + 1):
            oracle[d] = {
                "reduced_span": reduced_span_rank(S, d),
                "free_quotient": quotient_dimension_bruteforce(S, d),
            }
        ok = coeffs == closed and all(
            v["reduced_span"] == coeffs[d] == v["free_quotient"] for d, v in oracle.items()
        )
        out.text(f"binomial C(n^2+d-1, d): {' '.join(str(c) for c in closed)}")
        for d, v in oracle.items():
            out.text(f"rank oracle d={d}: reduced span {v['reduced_span']}, free quotient {v['free_quotient']}")
        out.text("check passed" if ok else "check FAILED")
        record.update(check=ok, closed_form=closed, oracle={str(d): v for d, v in oracle.items()})
    N = args.n * args.n
    if args.maxdeg >= N + 1:
        gk = gk_dimension_readout(args.n, args.maxdeg)
        out.text(f"GK dimension readout: {gk}")
        record["gk_dimension"] = gk
    out.record("hilbert", **record)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_pattern(args, out: Output) -> int:
    S = _relations(args)
    check = check_pattern_hypothesis(S)
    if check.holds:
        out.text("leading words are exactly the ascending pairs of the order")
        out.text("  " + " < ".join(str(g) for g in check.witness))
    else:
        out.text(f"pattern fails: {check.reason}")
    out.record(
        "pattern",
        n=S.n,
        holds=check.holds,
        witness=[str(g) for g in check.witness] if check.witness else None,
        generator_order=check.matches_generator_order(),
        reason=check.reason,
    )
    return EXIT_OK if check.holds else EXIT_CHECK_FAILED


def _parse_subset(text: str, n: int) -> tuple[Generator, ...]:
    gens = []
    for part in text.replace(" ", "").split("],"):
        part = part if part.endswith("]") else part + "]"
        p = parse_poly(part, n)
        words = list(p.terms)
        if len(words) != 1 or len(words[0]) != 1:
            raise UsageError(f"{part!r} is not a single generator")
        gens.append(words[0][0])
    if len(set(gens)) != len(gens):
        raise UsageError("duplicate generator in --subset")
    return tuple(sorted(gens, reverse=True))


def cmd_eliminate(args, out: Output) -> int:
    S = _relations(args)
    gens = [parse_poly(t, S.n, S.mode) for t in _expressions(args)]
    subset = _parse_subset(args.subset, S.n)
    try:
        prob = EliminationProblem(S.n, gens, subset, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc))
    outcome = find_witness(prob, S, growth=True)
    sound = None
    if outcome.found:
        sound = is_in_span_T(outcome.witness, subset) and reconstruct(prob, outcome, S) == outcome.witness
        out.text(f"witness: {outcome.witness}")
        out.text(f"witness re-verified: {'yes' if sound else 'NO'}")
    else:
        out.text(f"no witness up to degree {args.degree}")
    out.text(f"explored dimension: {outcome.explored_dimension}")
    out.text("quotient dims (degree <= d, advisory): " + " ".join(str(x) for x in outcome.quotient_growth))
    out.record(
        "eliminate",
        n=S.n,
        q=str(S.mode),
        subset=[str(g) for g in subset],
        degree=args.degree,
        witness=str(outcome.witness) if outcome.found else None,
        verified=sound,
        explored_dimension=outcome.explored_dimension,
        quotient_growth=outcome.quotient_growth,
    )
    return EXIT_CHECK_FAILED if sound is False else EXIT_OK


# -- argument parsing -----------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="matrix size (default 2)")
    common.add_argument("--q", type=_q_mode, default=QMode(), help="'generic' (default) or a nonzero rational")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
    common.add_argument("--trace", action="store_true", help="keep reduction traces")
    common.add_argument("--allow-large", action="store_true", help=f"permit n > {DEFAULT_MAX_N}")

    parser = _Parser(prog="qmgsb", description="Groebner-Shirshov toolkit for quantized matrix algebras")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("relations", parents=[common], help="list the defining relations")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("verify", parents=[common], help="check that every composition reduces to 0")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("nf", parents=[common], help="normal form of expressions")
    p.add_argument("expr", nargs="*")
    p.add_argument("--file", help="read expressions from a file, one per line")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("pbw", parents=[common], help="list PBW normal words of one degree")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_pbw)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series coefficients")
    p.add_argument("--maxdeg", type=int, default=5)
    p.add_argument("--check", action="store_true", help="compare with the binomial formula and the rank oracles")
    p.add_argument("--oracle-maxdeg", type=int, default=3, help="highest degree for the rank oracles")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("pattern", parents=[common], help="leading-word pattern check")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("eliminate", parents=[common], help="bounded elimination witness search")
    p.add_argument("expr", nargs="*", help="left ideal generators")
    p.add_argument("--file", help="read ideal generators from a file, one per line")
    p.add_argument("--subset", required=True, help="comma-separated generators, e.g. 'Z[2,2],Z[1,1]'")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_eliminate)
    return parser


def dispatch(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        for name in ("degree", "maxdeg", "oracle_maxdeg"):
            if getattr(args, name, 0) < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
        return args.func(args, Output(args.format, stdout))
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()

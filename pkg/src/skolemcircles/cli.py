"""``skolem`` command line.

Exit status: 0 on success, 1 when a check fails (invalid input sequence,
oracle disagreement, count mismatch), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import catalog, constructions, enumeration
from .canonical import canonicalize
from .core import CircleLabeling, parse_symbols, validate_circle, validate_sequence
from .errors import InvalidInput, SkolemError
from .removable import removable_count_weight, removable_edges_fast, removable_edges_oracle, sequences_of_circle

log = logging.getLogger("skolemcircles")


class UsageError(Exception):
    pass


class _CheckFailed(Exception):
    pass


def _circle_arg(text: str) -> CircleLabeling:
    syms = parse_symbols(text)
    report = validate_circle(syms)
    if not report.valid:
        raise _CheckFailed("invalid circle: " + "; ".join(v.detail for v in report.violations))
    return CircleLabeling(syms)


def _need_m(args):
    if args.m is None:
        raise UsageError(f"{args.command} needs -m <order>")
    return args.m


def _expected_table(spec: str):
    return catalog.expected_counts() if spec == "bundled" else catalog.read_counts(spec)


def _report_diff(mismatches, out) -> int:
    if not mismatches:
        print("expect=ok", file=out)
        return 0
    for mm in mismatches:
        print(f"mismatch m={mm.m} j={mm.key} actual={mm.actual} expected={mm.expected}", file=out)
    return 1


def _collect_shards(specs, threads: int):
    """Run shards (optionally in threads), gathering both counts and circles per shard."""

    def work(spec):
        found = []
        counts = enumeration.enumerate_shard(spec, found.append)
        return counts, found

    if threads <= 1:
        results = [work(s) for s in specs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, specs))
    counts = enumeration.merge(r[0] for r in results)
    circles = [c for r in results for c in r[1]]
    return counts, circles


def cmd_enumerate(args, out):
    m = _need_m(args)
    specs = enumeration.plan_shards(m, args.shards)
    _, circles = _collect_shards(specs, args.threads)
    text = catalog.write_catalog(circles, args.out, m=m)
    if args.out is None:
        out.write(text)
    return 0


def cmd_classify(args, out):
    m = _need_m(args)
    specs = enumeration.plan_shards(m, args.shards)
    enumeration.verify_partition(specs)
    if args.catalog:
        counts, circles = _collect_shards(specs, args.threads)
        catalog.write_catalog(circles, args.catalog, m=m)
    else:
        partials = enumeration.run_shards(specs, threads=args.threads, checkpoint_dir=args.checkpoint_dir)
        counts = enumeration.merge(partials)
    print(counts, file=out)
    if args.out:
        catalog.write_counts([counts], args.out)
    if args.expect:
        return _report_diff(catalog.diff_counts(counts, _expected_table(args.expect)), out)
    return 0


def cmd_count_sequences(args, out):
    print(enumeration.enumerate_sequences(_need_m(args)), file=out)
    return 0


def cmd_validate(args, out):
    syms = parse_symbols(args.sequence)
    if args.kind == "circle":
        report = validate_circle(syms)
    else:
        report = validate_sequence(
            syms, args.kind, defect=args.d, null_position=args.k,
        )
    if report.valid:
        print("valid", file=out)
        return 0
    print("invalid", file=out)
    for v in report.violations:
        print(f"  {v.kind} {v.where}: {v.detail}", file=out)
    return 1


def cmd_canon(args, out):
    print(canonicalize(_circle_arg(args.sequence)), file=out)
    return 0


def cmd_removable(args, out):
    c = _circle_arg(args.sequence)
    edges = removable_edges_fast(c)
    j = removable_count_weight(c)
    line = f"j={j} edges={','.join(str(e) for e in sorted(edges))}"
    if not args.oracle:
        print(line, file=out)
        return 0
    oracle = removable_edges_oracle(c)
    ok = oracle == edges and len(oracle) == j
    print(f"{line} agreement={'ok' if ok else 'FAIL'}", file=out)
    if not ok:
        print(f"  oracle edges={','.join(str(e) for e in sorted(oracle))}", file=out)
    return 0 if ok else 1


def cmd_sequences_of(args, out):
    for s in sequences_of_circle(_circle_arg(args.sequence)):
        print(s, file=out)
    return 0


def cmd_construct(args, out):
    what = args.what
    if what == "langford-power3":
        if args.n is None:
            raise UsageError("langford-power3 needs -n N")
        print(constructions.langford_power3(args.n), file=out)
    elif what == "theorem9":
        if args.k is None:
            raise UsageError("theorem9 needs -k K")
        print(constructions.theorem9_circle(args.k), file=out)
    elif what == "glue":
        if not args.file:
            raise UsageError("glue needs a file with one sequence per line")
        lines = Path(args.file).read_text().splitlines()
        parts = [parse_symbols(ln) for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
        print(constructions.glue(parts), file=out)
    return 0


def cmd_bounds(args, out):
    b = constructions.bounds(_need_m(args))
    print(f"m={b.m}", file=out)
    print(f"max_removable_bound={b.max_removable_bound}", file=out)
    print(f"circle_lower_bound={b.circle_lower_bound}", file=out)
    print(f"sequence_lower_bound={b.sequence_lower_bound}", file=out)
    print(f"naive_sequence_upper_bound={b.naive_sequence_upper_bound}", file=out)
    print(f"naive_circle_upper_bound={b.naive_circle_upper_bound}", file=out)
    return 0


def cmd_diff_counts(args, out):
    actual = catalog.read_counts(args.actual)
    return _report_diff(catalog.diff_counts(actual, _expected_table(args.expected)), out)


COMMANDS = {
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "count-sequences": cmd_count_sequences,
    "validate": cmd_validate,
    "canon": cmd_canon,
    "removable": cmd_removable,
    "sequences-of": cmd_sequences_of,
    "construct": cmd_construct,
    "bounds": cmd_bounds,
    "diff-counts": cmd_diff_counts,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skolem", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def order(p):
        p.add_argument("-m", type=int, help="order")

    def parallel(p):
        p.add_argument("--shards", type=int, default=1, help="number of shards (default 1)")
        p.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")

    p = sub.add_parser("enumerate", help="write the catalog of circles of order m")
    order(p)
    parallel(p)
    p.add_argument("--out", help="catalog path (default: stdout)")

    p = sub.add_parser("classify", help="count circles of order m by removable edges")
    order(p)
    parallel(p)
    p.add_argument("--out", help="write the counts table here")
    p.add_argument("--catalog", help="also write the circle catalog here")
    p.add_argument("--expect", nargs="?", const="bundled", help="compare with a counts file (default: bundled table)")
    p.add_argument("--checkpoint-dir", help="per-shard checkpoint directory (resumable)")

    p = sub.add_parser("count-sequences", help="count Skolem sequences of order m")
    order(p)

    p = sub.add_parser("validate", help="validate a circle or sequence")
    p.add_argument("sequence")
    p.add_argument("--kind", default="circle", choices=["circle", "skolem", "langford", "skolem-type", "extended", "hook"])
    p.add_argument("-d", type=int, help="Langford defect")
    p.add_argument("-k", type=int, help="null position for extended sequences")

    p = sub.add_parser("canon", help="standard positional labeling of a circle")
    p.add_argument("sequence")

    p = sub.add_parser("removable", help="removable edges of a circle")
    p.add_argument("sequence")
    p.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")

    p = sub.add_parser("sequences-of", help="the 2j Skolem sequences held by a circle")
    p.add_argument("sequence")

    p = sub.add_parser("construct", help="explicit constructions")
    p.add_argument("what", choices=["langford-power3", "theorem9", "glue"])
    p.add_argument("file", nargs="?", help="for glue: one sequence per line")
    p.add_argument("-n", type=int)
    p.add_argument("-k", type=int)

    p = sub.add_parser("bounds", help="removable-edge and counting bounds for order m")
    order(p)

    p = sub.add_parser("diff-counts", help="compare two counts files")
    p.add_argument("actual")
    p.add_argument("expected", nargs="?", default="bundled")
    return parser


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except _CheckFailed as exc:
        print(exc, file=out)
        return 1
    except (UsageError, InvalidInput, OSError) as exc:
        print(f"skolem {args.command}: {exc}", file=sys.stderr)
        return 2
    except SkolemError as exc:
        print(f"skolem {args.command}: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

"""Command-line interface.

Exit codes: 0 ok, 1 fuzz found divergences, 2 usage or parse error,
3 degenerate input, 4 polygon not convex.

Polygon files hold one vertex per line, ``x y`` separated by whitespace, in
ring order; lines starting with ``#`` and blank lines are ignored.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .classify import CLASSIFIERS, AlgorithmId, classify_half_plane_oracle
from .containment import polygon_inside, segment_inside
from .errors import DegenerateInput, InternalInconsistency, NotConvex
from .geometry import DEFAULT_TOL, Point, Polygon, Tolerance, validate
from .polygen import GenConfig, gen_convex, gen_point_inside, gen_point_on_edge, gen_point_outside

EXIT_OK = 0
EXIT_DIVERGENCE = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_NOT_CONVEX = 4


class ParseError(Exception):
    pass


def read_polygon_text(text: str, source: str = "<input>") -> list[tuple[float, float]]:
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"{source}:{lineno}: expected 2 numbers, got {len(fields)} fields")
        try:
            pts.append((float(fields[0]), float(fields[1])))
        except ValueError:
            raise ParseError(f"{source}:{lineno}: not a number: {line!r}") from None
    return pts


def load_polygon(path) -> Polygon:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return validate(read_polygon_text(text, str(path)))


def format_polygon(poly: Polygon, header: str = "") -> str:
    lines = [f"# {header}"] if header else []
    lines += [f"{v.x!r} {v.y!r}" for v in poly.vertices]
    return "\n".join(lines) + "\n"


def _point(text: str) -> Point:
    try:
        x, y = text.split(",")
        return Point(float(x), float(y))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from None


def _segment(text: str) -> tuple[Point, Point]:
    try:
        a, b = text.split(":")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X1,Y1:X2,Y2, got {text!r}") from None
    return _point(a), _point(b)


def _algorithm(text: str) -> AlgorithmId:
    try:
        return AlgorithmId.parse(text)
    except ValueError:
        names = ", ".join(a.value for a in AlgorithmId)
        raise argparse.ArgumentTypeError(f"unknown algorithm {text!r}; valid: {names}") from None


def _algorithm_list(text: str) -> list[AlgorithmId]:
    return [_algorithm(t) for t in text.split(",") if t.strip()]


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _tol(args) -> Tolerance:
    if args.epsilon is None:
        return DEFAULT_TOL
    return Tolerance(abs_eps=args.epsilon)


def cmd_area(args) -> int:
    poly = load_polygon(args.polygon)
    print(f"{poly.area:#.12g}")
    return EXIT_OK


def cmd_classify(args) -> int:
    poly = load_polygon(args.polygon)
    tol = _tol(args)
    got = CLASSIFIERS[args.algorithm](poly, args.point, tol)
    line = got.value
    if args.check_oracle:
        want = classify_half_plane_oracle(poly, args.point, tol)
        if want is not got:
            line += f" [DIVERGES: oracle={want.value}]"
    print(line)
    return EXIT_OK


def cmd_contains(args) -> int:
    outer = load_polygon(args.polygon)
    tol = _tol(args)
    if args.segment is not None:
        ok = segment_inside(outer, *args.segment, tol)
    else:
        ok = polygon_inside(outer, load_polygon(args.inner_polygon), tol)
    print("true" if ok else "false")
    return EXIT_OK


_POINT_GEN = {"inside": gen_point_inside, "outside": gen_point_outside, "edge": gen_point_on_edge}


def cmd_gen(args) -> int:
    poly = gen_convex(GenConfig(n=args.n, seed=args.seed))
    text = format_polygon(poly, f"convex polygon n={args.n} seed={args.seed}")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.point:
        p = _POINT_GEN[args.point](poly, args.seed)
        print(f"{p.x!r},{p.y!r}")
    return EXIT_OK


def _summary_path(out: str) -> Path:
    p = Path(out)
    return p.with_name(p.stem + "_summary" + (p.suffix or ".csv"))


def cmd_bench(args) -> int:
    cfg = harness.BenchConfig(vertex_counts=args.n_list, trials=args.trials, reps=args.reps,
                              algorithms=args.algorithms, seed=args.seed)
    records = harness.run_benchmark(cfg)
    rows = harness.summarize(records)
    if args.out:
        harness.write_records_csv(records, args.out)
        harness.write_summary_csv(rows, args.summary_out or _summary_path(args.out))
    print(",".join(harness.SUMMARY_HEADER))
    for r in rows:
        print(f"{r.n_vertices},{r.algorithm.value},{r.grand_mean_ns:.3f},{r.ratio_vs_extra_vertex:.4f}")
    return EXIT_OK


def cmd_fuzz(args) -> int:
    divs = harness.differential_fuzz(args.seed, args.iterations, args.algorithms, mode=args.mode)
    if args.out:
        harness.write_divergences_json(divs, args.out)
    print(f"{len(divs)} divergence(s) in {args.iterations} iteration(s)")
    return EXIT_DIVERGENCE if divs else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extravertex",
                                     description="Shoelace-area point-in-convex-polygon tools")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("area", help="print polygon area")
    p.add_argument("polygon")
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("classify", help="classify a point against a polygon")
    p.add_argument("polygon")
    p.add_argument("--point", type=_point, required=True, metavar="X,Y",
                   help="use --point=X,Y when X is negative")
    p.add_argument("--algorithm", type=_algorithm, default=AlgorithmId.EXTRA_VERTEX_BEST_EDGE)
    p.add_argument("--epsilon", type=float, default=None, help="absolute area tolerance")
    p.add_argument("--check-oracle", action="store_true",
                   help="flag answers that differ from the half-plane oracle")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("contains", help="segment or polygon containment")
    p.add_argument("polygon")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--segment", type=_segment, metavar="X1,Y1:X2,Y2")
    g.add_argument("--inner-polygon", metavar="FILE")
    p.add_argument("--epsilon", type=float, default=None)
    p.set_defaults(func=cmd_contains)

    p = sub.add_parser("gen", help="write a random convex polygon")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--point", choices=sorted(_POINT_GEN))
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time classifiers")
    p.add_argument("--n-list", type=_int_list, default=[20, 180])
    p.add_argument("--trials", type=_positive_int, default=20)
    p.add_argument("--reps", type=_positive_int, default=100)
    p.add_argument("--algorithms", type=_algorithm_list,
                   default=list(harness.DEFAULT_BENCH_ALGORITHMS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="per-trial records CSV")
    p.add_argument("--summary-out", help="summary CSV (default: <out>_summary.csv)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("fuzz", help="differential test against the half-plane oracle")
    p.add_argument("--iterations", type=_positive_int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algorithms", type=_algorithm_list,
                   default=[AlgorithmId.EXTRA_VERTEX_BEST_EDGE])
    p.add_argument("--mode", choices=harness.FUZZ_MODES, default="mixed")
    p.add_argument("--out", help="JSON divergence report")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        if isinstance(exc, NotConvex):
            print(f"error: not convex: {exc}", file=sys.stderr)
            return EXIT_NOT_CONVEX
        if isinstance(exc, DegenerateInput):
            print(f"error: degenerate input: {exc}", file=sys.stderr)
            return EXIT_DEGENERATE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"error: numeric inconsistency: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())

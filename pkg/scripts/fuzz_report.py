"""Differential fuzz of every classifier against the half-plane oracle.

Prints a disagreement count per (algorithm, point mode) and dumps the
append-variant counterexamples to results/append_divergences.json.

    python scripts/fuzz_report.py [--iterations 10000] [--seed 0]
"""
import argparse
from pathlib import Path

from extravertex.classify import AlgorithmId
from extravertex.harness import differential_fuzz, write_divergences_json

MODES = ("inside", "outside", "edge", "near-boundary")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--iterations", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    algos = [a for a in AlgorithmId if a is not AlgorithmId.HALF_PLANE_ORACLE]
    print(f"{'algorithm':<22}" + "".join(f"{m:>15}" for m in MODES))
    append_divs = []
    for a in algos:
        counts = []
        for m in MODES:
            divs = differential_fuzz(args.seed, args.iterations, [a], mode=m)
            counts.append(len(divs))
            if a is AlgorithmId.EXTRA_VERTEX_APPEND and m == "outside":
                append_divs = divs
        print(f"{a.value:<22}" + "".join(f"{c:>15}" for c in counts))

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    write_divergences_json(append_divs, out / "append_divergences.json")
    print(f"{len(append_divs)} append counterexamples -> {out / 'append_divergences.json'}")


if __name__ == "__main__":
    main()

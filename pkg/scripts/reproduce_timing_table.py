"""Run the 20-trial x 100-rep timing protocol at 20 and 180 vertices.

Writes per-trial records and a summary CSV to results/ and prints the
triangulation / extra-vertex ratios next to the reference ones.

    python scripts/reproduce_timing_table.py [--seed 0] [--outdir results]
"""
import argparse
from pathlib import Path

from extravertex.classify import AlgorithmId
from extravertex.harness import BenchConfig, run_benchmark, summarize, write_records_csv, write_summary_csv

REFERENCE = {20: (1.600, 3.000), 180: (6.769, 17.941)}  # grand means, 1e-5 s


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    algos = [AlgorithmId.EXTRA_VERTEX_APPEND, AlgorithmId.EXTRA_VERTEX_BEST_EDGE, AlgorithmId.TRIANGULATION]
    records = run_benchmark(BenchConfig(algorithms=algos, seed=args.seed))
    rows = summarize(records)

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    write_records_csv(records, out / "timing_records.csv")
    write_summary_csv(rows, out / "timing_summary.csv")

    mean = {(r.n_vertices, r.algorithm): r.grand_mean_ns for r in rows}
    print(f"{'n':>4} {'append ns':>10} {'best-edge ns':>13} {'triang ns':>10} "
          f"{'tri/append':>11} {'tri/best':>9} {'reference':>10}")
    for n, (ev, tri) in REFERENCE.items():
        a = mean[(n, AlgorithmId.EXTRA_VERTEX_APPEND)]
        b = mean[(n, AlgorithmId.EXTRA_VERTEX_BEST_EDGE)]
        t = mean[(n, AlgorithmId.TRIANGULATION)]
        print(f"{n:>4} {a:>10.0f} {b:>13.0f} {t:>10.0f} {t / a:>11.2f} {t / b:>9.2f} {tri / ev:>10.2f}")
    print(f"records: {out / 'timing_records.csv'}")


if __name__ == "__main__":
    main()

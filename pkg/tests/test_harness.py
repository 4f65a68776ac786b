import csv
import json

import pytest

from extravertex.classify import AlgorithmId, Classification
from extravertex.errors import EmptyInput
from extravertex.harness import (
    RECORD_HEADER,
    SUMMARY_HEADER,
    BenchConfig,
    BenchRecord,
    bench_inputs,
    differential_fuzz,
    read_records_csv,
    run_benchmark,
    summarize,
    write_divergences_json,
    write_records_csv,
    write_summary_csv,
)

EVA, EVB, TRI = AlgorithmId.EXTRA_VERTEX_APPEND, AlgorithmId.EXTRA_VERTEX_BEST_EDGE, AlgorithmId.TRIANGULATION

# reference per-trial means from the original timing study, units of 1e-5 s
TABLE2 = {
    20: {EVA: [1.71, 1.64, 1.66, 1.68, 1.67, 1.67, 1.67, 1.66, 1.65, 1.43,
               1.45, 1.64, 1.59, 1.56, 1.56, 1.52, 1.49, 1.45, 1.64, 1.66],
         TRI: [3.12, 3.24, 3.27, 3.389, 3.1, 2.88, 2.83, 2.86, 2.81, 2.73,
               2.92, 2.94, 2.97, 3.01, 3.01, 3.02, 3.03, 2.98, 2.94, 2.96]},
    180: {EVA: [5.89, 5.95, 5.81, 6.05, 6.36, 6.69, 7.27, 7.26, 7.06, 6.93,
                6.91, 6.83, 7.02, 7.16, 7.16, 7.16, 7.09, 7.03, 6.94, 6.81],
          TRI: [17.02, 19.32, 21.64, 20.58, 19.78, 19.07, 18.57, 18.16, 17.84, 17.59,
                17.37, 17.25, 17.1, 16.97, 16.85, 16.89, 16.8, 16.72, 16.68, 16.61]},
}


def test_summarize_reproduces_reference_means():
    records = [BenchRecord(t, n, a, v * 1e4)  # 1e-5 s -> ns
               for n, cols in TABLE2.items() for a, vals in cols.items()
               for t, v in enumerate(vals)]
    rows = {(r.n_vertices, r.algorithm): r for r in summarize(records)}
    assert rows[(20, EVA)].grand_mean_ns == pytest.approx(1.60e4, rel=1e-3)
    assert rows[(20, TRI)].grand_mean_ns == pytest.approx(3.0005e4, rel=1e-3)
    assert rows[(20, TRI)].ratio_vs_extra_vertex == pytest.approx(1.875, abs=5e-3)
    assert rows[(180, EVA)].grand_mean_ns == pytest.approx(6.77e4, rel=1e-3)
    assert rows[(180, TRI)].grand_mean_ns == pytest.approx(17.94e4, rel=1e-3)
    assert rows[(180, TRI)].ratio_vs_extra_vertex == pytest.approx(2.65, abs=5e-3)
    assert rows[(20, EVA)].ratio_vs_extra_vertex == 1.0


def test_summarize_single_and_empty():
    rows = summarize([BenchRecord(0, 20, TRI, 123.0)])
    assert len(rows) == 1 and rows[0].grand_mean_ns == 123.0
    assert rows[0].ratio_vs_extra_vertex != rows[0].ratio_vs_extra_vertex  # nan: no reference
    with pytest.raises(EmptyInput):
        summarize([])


def test_summary_reference_falls_back_to_best_edge():
    rows = summarize([BenchRecord(0, 20, TRI, 30.0), BenchRecord(0, 20, EVB, 10.0)])
    assert [(r.algorithm, r.ratio_vs_extra_vertex) for r in rows] == [(EVB, 1.0), (TRI, 3.0)]


def test_run_benchmark_cardinality_and_pairing():
    cfg = BenchConfig(trials=3, reps=5)
    records = run_benchmark(cfg)
    assert len(records) == 3 * 2 * 2
    assert all(r.mean_time_ns > 0 for r in records)
    assert {(r.trial, r.n_vertices, r.algorithm) for r in records} == {
        (t, n, a) for t in range(3) for n in (20, 180) for a in (EVA, TRI)}
    # inputs depend only on the config, not on which algorithm runs
    p1, pts1 = bench_inputs(cfg, 1, 20)
    p2, pts2 = bench_inputs(BenchConfig(trials=3, reps=5, algorithms=[EVB]), 1, 20)
    assert p1.vertices == p2.vertices and pts1 == pts2


def test_default_protocol_constants():
    cfg = BenchConfig()
    assert (cfg.vertex_counts, cfg.trials, cfg.reps, cfg.points_per_rep) == ([20, 180], 20, 100, 1)
    assert cfg.algorithms == [EVA, TRI]


@pytest.mark.parametrize("kwargs", [dict(trials=0), dict(reps=0), dict(vertex_counts=[2]),
                                    dict(algorithms=[])])
def test_bench_config_rejects(kwargs):
    with pytest.raises(ValueError):
        BenchConfig(**kwargs)


def test_csv_round_trip(tmp_path):
    records = [BenchRecord(0, 20, EVA, 1500.25), BenchRecord(0, 20, TRI, 3000.5)]
    path = tmp_path / "r.csv"
    write_records_csv(records, path)
    with open(path) as fh:
        assert next(csv.reader(fh)) == RECORD_HEADER
    assert read_records_csv(path) == records
    spath = tmp_path / "s.csv"
    write_summary_csv(summarize(records), spath)
    lines = spath.read_text().splitlines()
    assert lines[0] == ",".join(SUMMARY_HEADER)
    assert lines[2] == "20,triangulation,3000.500,2.0000"


def test_fuzz_best_edge_clean_and_deterministic():
    assert differential_fuzz(3, 500, [EVB, TRI, AlgorithmId.RAY_CASTING, AlgorithmId.ANGLE_SUM]) == []


def test_fuzz_finds_append_divergence(tmp_path):
    divs = differential_fuzz(3, 50, [EVA], mode="outside")
    assert divs
    assert all(d.expected is Classification.OUTSIDE and d.got is Classification.INSIDE for d in divs)
    assert [d.to_json() for d in divs] == [d.to_json() for d in differential_fuzz(3, 50, [EVA], mode="outside")]
    path = tmp_path / "d.json"
    write_divergences_json(divs, path)
    doc = json.loads(path.read_text())
    assert set(doc[0]) == {"polygon", "point", "expected", "got", "algorithm"}
    assert doc[0]["algorithm"] == "extra-vertex-append"
    assert doc[0]["expected"] == "outside" and doc[0]["got"] == "inside"


def test_fuzz_rejects_bad_args():
    with pytest.raises(ValueError):
        differential_fuzz(0, 0, [EVB])
    with pytest.raises(ValueError):
        differential_fuzz(0, 1, [EVB], mode="bogus")


def test_timing_invariants():
    algos = [a for a in AlgorithmId if a is not AlgorithmId.HALF_PLANE_ORACLE]
    rows = summarize(run_benchmark(BenchConfig(trials=5, algorithms=algos, seed=1)))
    mean = {(r.n_vertices, r.algorithm): r.grand_mean_ns for r in rows}
    for a in algos:
        growth = mean[(180, a)] / mean[(20, a)]
        assert 2 <= growth <= 30, (a, growth)
    r20 = mean[(20, TRI)] / mean[(20, EVB)]
    r180 = mean[(180, TRI)] / mean[(180, EVB)]
    assert r20 >= 1.2 and r180 >= r20


def test_near_boundary_mode_runs():
    # tolerance-band stress: best-edge and the oracle share one band, so they still agree
    assert differential_fuzz(5, 300, [EVB], mode="near-boundary") == []

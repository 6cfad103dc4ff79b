//! Benchmark harness for `khperiod`; the benchmarks live in `benches/`.

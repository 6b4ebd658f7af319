//! Criterion benchmarks for `hyperint`; see `benches/`.

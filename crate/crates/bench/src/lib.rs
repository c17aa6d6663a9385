//! Benchmarks for minperiodic-core live under `benches/`.

//! Benchmarks for the `graycat` crate live under `benches/`.

//! Benchmarks for bernstir live under `benches/`; run them with
//! `cargo bench -p bernstir-bench`.

//! Criterion benchmarks for the rank oracles and group algorithms; see
//! `benches/oracles.rs`.

//! Criterion benchmarks for the special functions and quadrature; see `benches/`.

//! Criterion benchmarks for the flow and coloring solvers live in `benches/`.

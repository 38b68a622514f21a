//! Benchmark-only crate; see `benches/families.rs`.

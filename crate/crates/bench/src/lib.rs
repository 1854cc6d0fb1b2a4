//! Shared builders for the benchmark targets.

use sylow_core::groupengine::{self, FiniteGroup};

/// The groups the oracle benchmarks run against, smallest first.
pub fn oracle_benchmark_groups() -> Vec<(&'static str, FiniteGroup, u64)> {
    vec![
        ("A5/p=5", groupengine::alternating_group(5).unwrap(), 5),
        ("PSL2(7)/p=7", groupengine::psl(2, 7).unwrap(), 7),
        ("PSL2(11)/p=11", groupengine::psl(2, 11).unwrap(), 11),
    ]
}

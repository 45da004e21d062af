//! Shape lists shared by the benchmarks.

use jack_core::Composition;

/// Compositions used for engine comparisons, small to moderate.
pub fn bench_shapes() -> Vec<Composition> {
    ["2,0,1", "1,2,0,1", "0,3,1,1", "2,1,2,0,1", "1,1,1,1,1"]
        .iter()
        .map(|s| s.parse().expect("valid composition"))
        .collect()
}

/// Partitions used for the symmetric routes, as `(λ, n)`.
pub fn bench_partitions() -> Vec<(Composition, usize)> {
    [("2,1", 3), ("3,1", 4), ("2,2,1", 5), ("3,2,1", 6)]
        .iter()
        .map(|(s, n)| (s.parse().expect("valid partition"), *n))
        .collect()
}

//! Fixture shapes shared by the benchmarks.

use syt::Partition;

/// Shapes every method can count: height at most 3 and small enough for the oracle.
pub fn small_shapes() -> Vec<Partition> {
    [&[3, 1][..], &[4, 3, 2], &[5, 4, 3], &[6, 5, 4]]
        .iter()
        .map(|p| Partition::validate(p).expect("fixture is a partition"))
        .collect()
}

/// Larger shapes for the exact methods that scale.
pub fn large_shapes() -> Vec<Partition> {
    [&[10, 8, 6][..], &[16, 12, 8, 4], &[30, 20, 10]]
        .iter()
        .map(|p| Partition::validate(p).expect("fixture is a partition"))
        .collect()
}

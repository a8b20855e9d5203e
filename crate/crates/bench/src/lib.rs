//! Workloads shared by the benchmarks.

use semicov::NumericalSemigroup;

/// `Δ` values whose oversemigroup families range from tens to thousands of
/// members.
pub fn theta_inputs() -> Vec<(&'static str, NumericalSemigroup)> {
    [
        ("5,7,9", &[5u64, 7, 9][..]),
        ("7,9,11", &[7, 9, 11][..]),
        ("8,11,13", &[8, 11, 13][..]),
    ]
    .into_iter()
    .map(|(name, g)| (name, NumericalSemigroup::from_generators(g).unwrap()))
    .collect()
}

/// Odd Frobenius numbers for the coe family.
pub const COE_INPUTS: [i64; 3] = [11, 15, 19];

//! Fixed inputs shared by the benchmarks.

use hyperflex_core::FamilyPoint;

/// Deterministic members with small coefficients, spread over the box `[-5, 5]^6`.
pub fn sample_members(n: usize) -> Vec<FamilyPoint> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    (0..n)
        .map(|_| {
            FamilyPoint::from_i64s(std::array::from_fn(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 11) as i64 - 5
            }))
        })
        .collect()
}

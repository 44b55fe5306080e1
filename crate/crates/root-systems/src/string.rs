//! The d-coefficient attached to a root string.

/// `d_{αφ} = q − p − 2pq` for the α-series `φ + nα`, `p ≤ n ≤ q`.
///
/// This is the total weight with which the pair `±α` contributes to the
/// Casimir eigenvalue on the root space of φ.
pub fn d_coefficient(p: i32, q: i32) -> i64 {
    debug_assert!(p <= 0 && q >= 0, "string must satisfy p ≤ 0 ≤ q");
    i64::from(q) - i64::from(p) - 2 * i64::from(p) * i64::from(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn appendix_cases() {
        assert_eq!(d_coefficient(0, 1), 1); // φ, φ+α
        assert_eq!(d_coefficient(-1, 0), 1); // φ, φ−α
        assert_eq!(d_coefficient(-1, 1), 4); // φ, φ±α
        assert_eq!(d_coefficient(0, 0), 0); // singular string
    }

    #[test]
    fn reversal_symmetry() {
        for p in -3..=0 {
            for q in 0..=3 {
                assert_eq!(d_coefficient(p, q), d_coefficient(-q, -p));
            }
        }
    }
}

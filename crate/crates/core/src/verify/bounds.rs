//! Exact comparisons against bounds of the form `a·log₂ b + c`.

use num_bigint::BigUint;

/// Whether `x ≤ a·log₂(b) + c` for integers, with `b ≥ 1`.
///
/// Rewritten as `x - c ≤ a·log₂ b`, i.e. `2^(x-c) ≤ b^a` when `x > c`.
pub fn le_log_bound(x: u64, a: u64, b: u64, c: u64) -> bool {
    assert!(b >= 1, "logarithm of zero");
    if x <= c {
        return true;
    }
    let lhs = BigUint::from(1u8) << (x - c);
    let rhs = BigUint::from(b).pow(a as u32);
    lhs <= rhs
}

/// Theorem B shape: `x ≤ 24·k·log₂k + 390·k`.
pub fn pi_bound_holds(x: u64, k: u64) -> bool {
    le_log_bound(x, 24 * k, k, 390 * k)
}

/// Theorem A shape: `x ≤ 24·k²·log₂k + 390·k² + 1`.
pub fn cod_bound_holds(x: u64, k: u64) -> bool {
    le_log_bound(x, 24 * k * k, k, 390 * k * k + 1)
}

/// Theorem C shape: `x ≤ 24·log₂ c + 389`.
pub fn dl_bound_holds(x: u64, c: u64) -> bool {
    le_log_bound(x, 24, c, 389)
}

/// Floating value of `a·log₂ b + c`, for reporting slack only.
pub fn log_bound_value(a: u64, b: u64, c: u64) -> f64 {
    a as f64 * (b as f64).log2() + c as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundaries() {
        // 24·log₂2 + 389 = 413
        assert!(dl_bound_holds(413, 2));
        assert!(!dl_bound_holds(414, 2));
        // log₂1 = 0
        assert!(dl_bound_holds(389, 1));
        assert!(!dl_bound_holds(390, 1));
        // k = 1: bound 390
        assert!(pi_bound_holds(390, 1));
        assert!(!pi_bound_holds(391, 1));
        // k = 2: 48 + 780 = 828
        assert!(pi_bound_holds(828, 2));
        assert!(!pi_bound_holds(829, 2));
        // k = 2: 96 + 1560 + 1 = 1657
        assert!(cod_bound_holds(1657, 2));
        assert!(!cod_bound_holds(1658, 2));
    }

    #[test]
    fn irrational_logs() {
        // 24·log₂3 + 389 ≈ 427.04
        assert!(dl_bound_holds(427, 3));
        assert!(!dl_bound_holds(428, 3));
        assert!((log_bound_value(24, 3, 389) - 427.0391).abs() < 1e-3);
    }
}

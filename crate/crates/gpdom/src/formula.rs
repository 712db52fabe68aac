//! Closed-form domination values for the `P(n,2)` family.

/// `gamma(P(n,2)) = ceil(3n/5)` for `n >= 3`.
pub fn gamma(n: usize) -> usize {
    (3 * n).div_ceil(5)
}

/// `gamma(P(n,2) - u_f)`: one less than the fault-free value when
/// `n = 5k+1` or `5k+2`, otherwise unchanged.
pub fn gamma_faulted(n: usize) -> usize {
    match n % 5 {
        1 | 2 => gamma(n) - 1,
        _ => gamma(n),
    }
}

//! Exact counting of the spiral closure by length.
//!
//! The class is counted by the rational generating function
//! (1 - 4x + 3x^2) / (1 - 5x + 6x^2 - 2x^3 - x^4 - 3x^5); coefficients are
//! produced by the order-5 linear recurrence the denominator implies, in
//! arbitrary precision.

use num_bigint::BigInt;

const NUMERATOR: [i64; 3] = [1, -4, 3];
const DENOMINATOR: [i64; 6] = [1, -5, 6, -2, -1, -3];

/// Taylor coefficients c_0..c_max_n of the class generating function.
pub fn gf_coefficients(max_n: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut value = BigInt::from(*NUMERATOR.get(n).unwrap_or(&0));
        for j in 1..DENOMINATOR.len().min(n + 1) {
            value -= DENOMINATOR[j] * &c[n - j];
        }
        c.push(value);
    }
    c
}

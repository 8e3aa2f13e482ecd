//! Truncation of positive-majorant power series with a geometric tail certificate.

use crate::error::{Error, Result};

/// Hard cap on the number of series terms any routine will sum.
pub const MAX_TERMS: usize = 1_000_000;

/// Smallest `K` such that `Σ_{j>K} term(j) ≤ tol` is certified.
///
/// `term(j)` is a nonnegative majorant of the j-th term and `ratio(n)` must
/// bound `term(j+1)/term(j)` for every `j ≥ n`. The tail after `K` is bounded
/// by `term(K+1) / (1 - ratio(K+1))` once that ratio is below one.
pub fn terms_needed<T, R>(term: T, ratio: R, tol: f64, cap: usize) -> Result<usize>
where
    T: Fn(usize) -> f64,
    R: Fn(usize) -> f64,
{
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tail tolerance must be positive, got {tol}")));
    }
    for k in 0..=cap {
        let q = ratio(k + 1);
        if q < 1.0 && term(k + 1) / (1.0 - q) <= tol {
            return Ok(k);
        }
    }
    // Report how far the certificate would have to go.
    let mut k = cap;
    while k < usize::MAX / 2 {
        let q = ratio(k + 1);
        if q < 1.0 && term(k + 1) / (1.0 - q) <= tol {
            break;
        }
        k = k.saturating_mul(2);
        if k > (1usize << 40) {
            break;
        }
    }
    Err(Error::TruncationBudget { required: k, cap })
}

//! Exact binomial and figurate-number arithmetic.
//!
//! Counting formulas throughout the crate use the convention
//! `C(n, r) = 0` whenever `r > n`, which makes vanishing correction
//! terms such as `C(2, 3)` come out as zero without special-casing.

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, r)` with the `r > n => 0` convention.
///
/// Exact: the multiply-then-divide recurrence keeps every intermediate
/// integral, and anything that would not fit in the result type is an
/// [`Error::Overflow`], never a wraparound.
pub fn binomial(n: u64, r: u64) -> Result<u64> {
    if r > n {
        return Ok(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r {
        acc = acc
            .checked_mul((n - r + i) as u128)
            .ok_or(Error::Overflow("binomial"))?;
        // exact: C(n-r+1..n-r+i, i) is integral at every step
        acc /= i as u128;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial"))
}

/// The `j`th tetrahedral number `C(j+2, 3)`, i.e. the sum of the first
/// `j` triangular numbers.
pub fn tetrahedral(j: u64) -> Result<u64> {
    let n = j.checked_add(2).ok_or(Error::Overflow("tetrahedral"))?;
    binomial(n, 3)
}

/// `C(n, r)` for a possibly negative upper index, clamped to zero.
///
/// Layer-intersection counts feed arguments like `h-i-t-(h-i0)t+2` here,
/// which go negative exactly when the intersection is empty.
pub(crate) fn binomial_clamped(n: i64, r: u64) -> Result<u64> {
    if n < 0 {
        return Ok(0);
    }
    binomial(n as u64, r)
}

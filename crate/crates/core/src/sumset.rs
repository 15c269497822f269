//! h-fold sumsets: the fast merge engine, the independent naive oracle,
//! and the size bounds they are checked against.
//!
//! The two computation paths share no sumset logic. The engine iterates
//! pairwise sumsets `(i)A + A` with a sorted-merge dedupe; the oracle
//! enumerates multiplicity vectors directly. Differential tests hold
//! them against each other.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::set::IntSet;

/// Refusal threshold for the naive oracle: number of h-multisets it is
/// willing to enumerate.
pub const NAIVE_ORACLE_GUARD: u64 = 10_000_000;

/// The bounds `h(k-1)+1 <= |hA| <= C(h+k-1, k-1)` for sets of size `k`.
///
/// The lower bound is attained exactly by arithmetic progressions, the
/// upper exactly by B_h sets; the two coincide iff `h == 1` or
/// `k <= 2` (every pair is an AP and a B_h set at once).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeBounds {
    pub h: u32,
    pub k: u32,
    pub lower: u64,
    pub upper: u64,
}

pub fn size_bounds(h: u32, k: u32) -> Result<SizeBounds> {
    ensure_positive(h, "h")?;
    ensure_positive(k, "k")?;
    let lower = h as u64 * (k as u64 - 1) + 1;
    let upper = binomial(h as u64 + k as u64 - 1, k as u64 - 1)?;
    debug_assert!(lower <= upper);
    Ok(SizeBounds { h, k, lower, upper })
}

/// The h-fold sumset `hA`: all sums of `h` not necessarily distinct
/// elements of `a`.
///
/// Iterated pairwise sumsets, O(h * |iA| * |A|); exact for any input
/// whose folded magnitudes fit in 64 bits (checked on entry).
pub fn h_fold_sumset(a: &IntSet, h: u32) -> Result<IntSet> {
    ensure_positive(h, "h")?;
    check_fold_magnitude(a, h)?;
    let mut acc = a.clone();
    for _ in 1..h {
        acc = pairwise_sumset(&acc, a)?;
    }
    Ok(acc)
}

/// The sumset `S + T` of two sets: a k-way sorted merge of `|T|` shifted
/// copies of `S`, deduplicated.
pub fn pairwise_sumset(s: &IntSet, t: &IntSet) -> Result<IntSet> {
    let mut acc = shift_all(s.elements(), t.min_element())?;
    for &tj in &t.elements()[1..] {
        acc = merge_shifted(&acc, s.elements(), tj)?;
    }
    Ok(IntSet::from_sorted_unchecked(acc))
}

fn shift_all(base: &[i64], shift: i64) -> Result<Vec<i64>> {
    base.iter()
        .map(|&x| x.checked_add(shift).ok_or(Error::Overflow("sumset")))
        .collect()
}

fn merge_shifted(acc: &[i64], base: &[i64], shift: i64) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(acc.len() + base.len());
    let mut i = 0;
    let mut j = 0;
    while i < acc.len() && j < base.len() {
        let b = base[j].checked_add(shift).ok_or(Error::Overflow("sumset"))?;
        match acc[i].cmp(&b) {
            Ordering::Less => {
                out.push(acc[i]);
                i += 1;
            }
            Ordering::Equal => {
                out.push(acc[i]);
                i += 1;
                j += 1;
            }
            Ordering::Greater => {
                out.push(b);
                j += 1;
            }
        }
    }
    out.extend_from_slice(&acc[i..]);
    for &x in &base[j..] {
        out.push(x.checked_add(shift).ok_or(Error::Overflow("sumset"))?);
    }
    Ok(out)
}

/// Independent oracle for [`h_fold_sumset`]: enumerates every
/// multiplicity vector `(m_1, ..., m_k)` with `sum m_i = h` and collects
/// the sums `sum m_i * a_i`. Shares no code with the merge engine.
///
/// Refuses inputs with more than [`NAIVE_ORACLE_GUARD`] multisets.
pub fn h_fold_sumset_naive(a: &IntSet, h: u32) -> Result<IntSet> {
    ensure_positive(h, "h")?;
    check_fold_magnitude(a, h)?;
    let k = a.len() as u64;
    let multisets = binomial(h as u64 + k - 1, k - 1)?;
    if multisets > NAIVE_ORACLE_GUARD {
        return Err(Error::GuardExceeded {
            estimate: multisets,
            limit: NAIVE_ORACLE_GUARD,
        });
    }

    fn assign(elems: &[i64], remaining: u32, partial: i64, sums: &mut BTreeSet<i64>) -> Result<()> {
        let contribution = |m: u32| -> Result<i64> {
            elems[0]
                .checked_mul(m as i64)
                .and_then(|x| partial.checked_add(x))
                .ok_or(Error::Overflow("naive sumset"))
        };
        if elems.len() == 1 {
            sums.insert(contribution(remaining)?);
            return Ok(());
        }
        for m in 0..=remaining {
            assign(&elems[1..], remaining - m, contribution(m)?, sums)?;
        }
        Ok(())
    }

    let mut sums = BTreeSet::new();
    assign(a.elements(), h, 0, &mut sums)?;
    Ok(IntSet::from_sorted_unchecked(sums.into_iter().collect()))
}

/// True iff `a` is a B_h set: every element of `hA` has a unique
/// representation as a multiset of `h` summands. Decided through the
/// equality condition `|hA| == C(h+k-1, k-1)`.
pub fn is_b_h_set(a: &IntSet, h: u32) -> Result<bool> {
    let bounds = size_bounds(h, a.len() as u32)?;
    Ok(h_fold_sumset(a, h)?.len() as u64 == bounds.upper)
}

fn ensure_positive(v: u32, name: &str) -> Result<()> {
    if v == 0 {
        return Err(Error::domain(format!("{name} must be >= 1")));
    }
    Ok(())
}

// h * max|element| must be representable; partial sums of at most h
// elements are then bounded and no later addition can wrap.
fn check_fold_magnitude(a: &IntSet, h: u32) -> Result<()> {
    let max_abs = a.iter().map(i64::unsigned_abs).max().unwrap_or(0);
    let folded = (h as u64)
        .checked_mul(max_abs)
        .ok_or(Error::Overflow("h-fold magnitude"))?;
    if folded > i64::MAX as u64 {
        return Err(Error::Overflow("h-fold magnitude"));
    }
    Ok(())
}

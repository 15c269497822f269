//! The popular 4-element family and its layer decomposition.
//!
//! For `h >= 1` and `i0 in [0, h-1]`, the set `{0, 1, h+1, c}` with
//! `c = (h+1-i0)(h+1)` has h-fold sumset size
//! `C(h+3, 3) - C(i0+2, 3)`, a difference of tetrahedral numbers.
//! This module builds those sets, evaluates the predicted size, and
//! exposes the layer decomposition `hA = union L_i` (with
//! `L_i = (h-i)B + ic`, `B = {0, 1, h+1}`) whose interval and
//! intersection counts make the size formula checkable against brute
//! force.

use crate::arith::{binomial, binomial_clamped, tetrahedral};
use crate::error::{Error, Result};
use crate::set::IntSet;
use crate::sumset::h_fold_sumset;

/// Default bound on `h` for [`verify_theorem`]; the fast engine stays
/// comfortably sub-second per row well beyond desk-scale `h`.
pub const DEFAULT_VERIFY_CAP: u32 = 200;

/// Parameters of one member of the popular family.
///
/// `p = 1 + (i0-1)(h+1)` and `c = h^2 + h + 1 - p = (h+1-i0)(h+1)`;
/// the two expressions for `c` agree for every valid `(h, i0)`, and
/// `c > h+1`, so the set `{0, 1, h+1, c}` always has exactly four
/// elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PopularFamily {
    pub h: u32,
    pub i0: u32,
    pub p: i64,
    pub c: i64,
    pub set: IntSet,
}

/// One integer interval `q(h+1) + [0, j]` of a layer.
///
/// Its smallest element is a multiple of `h+1` and its length `j+1` is
/// at most `h+1`, so distinct runs of a layer never overlap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalRun {
    pub h: u32,
    pub q: i64,
    pub j: u32,
}

impl IntervalRun {
    pub fn new(h: u32, q: i64, j: u32) -> Result<Self> {
        if q < 0 {
            return Err(Error::domain(format!("run multiplier q = {q} must be >= 0")));
        }
        if j > h {
            return Err(Error::domain(format!("run length index j = {j} exceeds h = {h}")));
        }
        Ok(IntervalRun { h, q, j })
    }

    pub fn start(&self) -> Result<i64> {
        self.q
            .checked_mul(self.h as i64 + 1)
            .ok_or(Error::Overflow("interval run"))
    }

    pub fn end(&self) -> Result<i64> {
        self.start()?
            .checked_add(self.j as i64)
            .ok_or(Error::Overflow("interval run"))
    }

    pub fn len(&self) -> u64 {
        self.j as u64 + 1
    }

    pub fn is_empty(&self) -> bool {
        false // always holds j+1 >= 1 integers
    }

    pub fn elements(&self) -> Result<Vec<i64>> {
        Ok((self.start()?..=self.end()?).collect())
    }
}

/// The layer `L_i = (h-i)B + ic` materialized as its interval runs,
/// one per `j in [0, h-i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub family: PopularFamily,
    pub i: u32,
    pub runs: Vec<IntervalRun>,
}

impl LayerDecomposition {
    /// The layer's elements, sorted. Runs move left as `j` increases,
    /// so walking them in reverse yields the sorted union directly.
    pub fn elements(&self) -> Result<IntSet> {
        let mut out = Vec::new();
        for run in self.runs.iter().rev() {
            out.extend(run.elements()?);
        }
        IntSet::from_sorted(out)
    }

    pub fn size(&self) -> u64 {
        self.runs.iter().map(IntervalRun::len).sum()
    }
}

/// One comparison of computed vs. predicted sumset size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRow {
    pub i0: u32,
    pub set: IntSet,
    pub computed_size: u64,
    pub predicted_size: u64,
    pub pass: bool,
}

/// The full sweep over `i0 in [0, h-1]` for a fixed `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub h: u32,
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

fn check_family_domain(h: u32, i0: u32) -> Result<()> {
    if h == 0 {
        return Err(Error::domain("h must be >= 1"));
    }
    if i0 >= h {
        return Err(Error::domain(format!(
            "i0 = {i0} outside [0, {}] for h = {h}",
            h - 1
        )));
    }
    Ok(())
}

/// Builds the family member `{0, 1, h+1, c}` for `i0 in [0, h-1]`.
pub fn popular_set(h: u32, i0: u32) -> Result<PopularFamily> {
    check_family_domain(h, i0)?;
    let hw = h as i64;
    let p = 1 + (i0 as i64 - 1) * (hw + 1);
    let c = (hw + 1 - i0 as i64) * (hw + 1);
    debug_assert_eq!(c, hw * hw + hw + 1 - p);
    let set = IntSet::from_sorted(vec![0, 1, hw + 1, c])?;
    Ok(PopularFamily { h, i0, p, c, set })
}

/// The predicted size `C(h+3, 3) - C(i0+2, 3)`, a difference of
/// tetrahedral numbers.
pub fn predicted_popular_size(h: u32, i0: u32) -> Result<u64> {
    check_family_domain(h, i0)?;
    let whole = tetrahedral(h as u64 + 1)?;
    let gap = tetrahedral(i0 as u64)?;
    whole
        .checked_sub(gap)
        .ok_or(Error::Inconsistency("predicted size underflow".into()))
}

/// All h predicted sizes for a given `h`, as a set. The formula is
/// strictly decreasing in `i0`, so there are exactly `h` of them.
pub fn popular_targets(h: u32) -> Result<IntSet> {
    if h == 0 {
        return Err(Error::domain("h must be >= 1"));
    }
    let mut sizes = Vec::with_capacity(h as usize);
    for i0 in (0..h).rev() {
        let size = predicted_popular_size(h, i0)?;
        sizes.push(i64::try_from(size).map_err(|_| Error::Overflow("popular targets"))?);
    }
    IntSet::from_sorted(sizes)
}

/// The runs of layer `L_i`: `q = h + (h-i0)i - j` for `j in [0, h-i]`.
pub fn layer_intervals(family: &PopularFamily, i: u32) -> Result<LayerDecomposition> {
    let h = family.h;
    if i > h {
        return Err(Error::domain(format!("layer index i = {i} exceeds h = {h}")));
    }
    let base = h as i64 + (h as i64 - family.i0 as i64) * i as i64;
    let mut runs = Vec::with_capacity((h - i) as usize + 1);
    for j in 0..=(h - i) {
        runs.push(IntervalRun::new(h, base - j as i64, j)?);
    }
    Ok(LayerDecomposition {
        family: family.clone(),
        i,
        runs,
    })
}

/// Closed-form layer size `|L_i| = C(h-i+2, 2)`; `B = {0, 1, h+1}` is a
/// B_h set, so `(h-i)B` has full size and the `ic` shift changes
/// nothing.
pub fn layer_size_formula(h: u32, i: u32) -> Result<u64> {
    if h == 0 {
        return Err(Error::domain("h must be >= 1"));
    }
    if i > h {
        return Err(Error::domain(format!("layer index i = {i} exceeds h = {h}")));
    }
    binomial((h - i) as u64 + 2, 2)
}

/// Closed-form overlap `|L_i ∩ L_{i+t}| = C(h-i-t-(h-i0)t+2, 2)`.
///
/// The upper index goes negative or below 2 exactly when the layers are
/// disjoint, which the `C(n, r) = 0` convention turns into a zero count
/// rather than a range error; for `t = 1` the formula collapses to
/// `C(i0+1-i, 2)`.
pub fn layer_intersection_size(family: &PopularFamily, i: u32, t: u32) -> Result<u64> {
    let h = family.h;
    if t == 0 {
        return Err(Error::domain("intersection offset t must be >= 1"));
    }
    if i as u64 + t as u64 > h as u64 {
        return Err(Error::domain(format!(
            "layer pair (i = {i}, t = {t}) exceeds h = {h}"
        )));
    }
    let top = h as i64 - i as i64 - t as i64 - (h as i64 - family.i0 as i64) * t as i64 + 2;
    binomial_clamped(top, 2)
}

/// The first index from which consecutive layers separate:
/// `max(L_i) < min(L_{i+1})` holds iff `i >= 1 + floor(h - c/(h+1))`,
/// which must recompute to `i0`. A mismatch means the family record was
/// built with inconsistent parameters.
pub fn disjointness_threshold(family: &PopularFamily) -> Result<u32> {
    let span = family.h as i64 + 1;
    let threshold = 1 + (family.h as i64 * span - family.c).div_euclid(span);
    if threshold != family.i0 as i64 {
        return Err(Error::Inconsistency(format!(
            "recomputed disjointness threshold {threshold} != i0 = {}",
            family.i0
        )));
    }
    Ok(family.i0)
}

/// Computes `|hA|` for every family member at this `h` and compares it
/// with the predicted size. Uses [`DEFAULT_VERIFY_CAP`].
pub fn verify_theorem(h: u32) -> Result<VerificationReport> {
    verify_theorem_with_cap(h, DEFAULT_VERIFY_CAP)
}

/// As [`verify_theorem`] with an explicit cap on `h`.
pub fn verify_theorem_with_cap(h: u32, cap: u32) -> Result<VerificationReport> {
    if h == 0 {
        return Err(Error::domain("h must be >= 1"));
    }
    if h > cap {
        return Err(Error::CapExceeded { h, cap });
    }
    let mut rows = Vec::with_capacity(h as usize);
    for i0 in 0..h {
        let family = popular_set(h, i0)?;
        let computed_size = h_fold_sumset(&family.set, h)?.len() as u64;
        let predicted_size = predicted_popular_size(h, i0)?;
        rows.push(VerificationRow {
            i0,
            set: family.set,
            computed_size,
            predicted_size,
            pass: computed_size == predicted_size,
        });
    }
    Ok(VerificationReport { h, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumset::h_fold_sumset_naive;

    #[test]
    fn family_members_match_the_worked_cases() {
        let f = popular_set(1, 0).unwrap();
        assert_eq!(f.set.elements(), &[0, 1, 2, 4]);
        assert_eq!((f.p, f.c), (-1, 4));

        let f = popular_set(2, 0).unwrap();
        assert_eq!(f.set.elements(), &[0, 1, 3, 9]);
        assert_eq!(f.c, 9); // (h+1)^2

        let f = popular_set(3, 2).unwrap();
        assert_eq!((f.p, f.c), (5, 8));
        assert_eq!(f.set.elements(), &[0, 1, 4, 8]);
    }

    #[test]
    fn family_domain_is_checked() {
        assert!(popular_set(0, 0).is_err());
        assert!(popular_set(3, 3).is_err());
        assert!(predicted_popular_size(4, 4).is_err());
    }

    #[test]
    fn parameter_identities() {
        for h in 1..=40u32 {
            for i0 in 0..h {
                let f = popular_set(h, i0).unwrap();
                let hw = h as i64;
                assert_eq!(f.c, hw * hw + hw + 1 - f.p);
                assert_eq!(f.c, (hw + 1 - i0 as i64) * (hw + 1));
                assert!(f.c > hw + 1);
                assert_eq!(f.set.len(), 4);
            }
        }
    }

    #[test]
    fn predicted_sizes() {
        assert_eq!(predicted_popular_size(1, 0).unwrap(), 4);
        assert_eq!(predicted_popular_size(3, 2).unwrap(), 16);
        for h in 1..=30 {
            assert_eq!(
                predicted_popular_size(h, 0).unwrap(),
                binomial(h as u64 + 3, 3).unwrap()
            );
        }
    }

    #[test]
    fn targets_are_distinct() {
        assert_eq!(popular_targets(1).unwrap().elements(), &[4]);
        assert_eq!(popular_targets(3).unwrap().elements(), &[16, 19, 20]);
        let t = popular_targets(10).unwrap();
        assert_eq!(t.len(), 10);
        assert_eq!(t.max_element(), 286);
    }

    #[test]
    fn layer_runs_match_hand_computation() {
        let f = popular_set(2, 1).unwrap();
        assert_eq!(f.c, 6);

        let top = layer_intervals(&f, 2).unwrap();
        assert_eq!(top.runs.len(), 1);
        assert_eq!((top.runs[0].q, top.runs[0].j), (4, 0));
        assert_eq!(top.elements().unwrap().elements(), &[12]);

        let bottom = layer_intervals(&f, 0).unwrap();
        let runs: Vec<_> = bottom
            .runs
            .iter()
            .map(|r| r.elements().unwrap())
            .collect();
        assert_eq!(runs, vec![vec![6], vec![3, 4], vec![0, 1, 2]]);
        assert_eq!(bottom.elements().unwrap().elements(), &[0, 1, 2, 3, 4, 6]);
    }

    #[test]
    fn top_layer_is_the_singleton_hc() {
        for (h, i0) in [(1, 0), (4, 2), (7, 6)] {
            let f = popular_set(h, i0).unwrap();
            let top = layer_intervals(&f, h).unwrap();
            assert_eq!(top.runs.len(), 1);
            assert_eq!(top.runs[0].j, 0);
            assert_eq!(
                top.elements().unwrap().elements(),
                &[h as i64 * f.c]
            );
        }
    }

    #[test]
    fn layer_size_formula_examples() {
        assert_eq!(layer_size_formula(2, 0).unwrap(), 6);
        assert_eq!(layer_size_formula(5, 5).unwrap(), 1);
        assert_eq!(layer_size_formula(3, 1).unwrap(), 6);
        assert!(layer_size_formula(3, 4).is_err());
    }

    #[test]
    fn intersection_formula_examples() {
        let f = popular_set(3, 2).unwrap();
        assert_eq!(layer_intersection_size(&f, 0, 1).unwrap(), 3);
        assert_eq!(layer_intersection_size(&f, 2, 1).unwrap(), 0); // i = i0

        let f = popular_set(2, 1).unwrap();
        assert_eq!(layer_intersection_size(&f, 0, 2).unwrap(), 0);
        assert!(layer_intersection_size(&f, 0, 0).is_err());
        assert!(layer_intersection_size(&f, 2, 1).is_err()); // i + t > h
    }

    #[test]
    fn threshold_recomputes_i0() {
        assert_eq!(disjointness_threshold(&popular_set(3, 2).unwrap()).unwrap(), 2);
        assert_eq!(disjointness_threshold(&popular_set(5, 1).unwrap()).unwrap(), 1);
        assert_eq!(disjointness_threshold(&popular_set(4, 3).unwrap()).unwrap(), 3);
    }

    #[test]
    fn threshold_rejects_tampered_families() {
        let mut f = popular_set(4, 2).unwrap();
        f.c += 5; // no longer a multiple of h+1, threshold shifts
        assert!(matches!(
            disjointness_threshold(&f),
            Err(Error::Inconsistency(_))
        ));
    }

    #[test]
    fn run_constructor_validates() {
        assert!(IntervalRun::new(3, -1, 0).is_err());
        assert!(IntervalRun::new(3, 0, 4).is_err());
        let run = IntervalRun::new(3, 2, 3).unwrap();
        assert_eq!(run.elements().unwrap(), vec![8, 9, 10, 11]);
        assert_eq!(run.len(), 4);
    }

    #[test]
    fn verify_small_h() {
        let report = verify_theorem(1).unwrap();
        assert_eq!(report.rows.len(), 1);
        assert_eq!(report.rows[0].computed_size, 4);
        assert!(report.all_pass());

        let report = verify_theorem(3).unwrap();
        let sizes: Vec<u64> = report.rows.iter().map(|r| r.computed_size).collect();
        assert_eq!(sizes, vec![20, 19, 16]);
        assert!(report.all_pass());
    }

    #[test]
    fn verify_h10_cross_checked_against_oracle() {
        let report = verify_theorem(10).unwrap();
        assert_eq!(report.rows.len(), 10);
        assert!(report.all_pass());
        for i0 in [0u32, 5, 9] {
            let family = popular_set(10, i0).unwrap();
            let oracle = h_fold_sumset_naive(&family.set, 10).unwrap();
            assert_eq!(oracle.len() as u64, report.rows[i0 as usize].computed_size);
        }
    }

    #[test]
    fn verify_respects_the_cap() {
        assert!(matches!(
            verify_theorem_with_cap(250, 200),
            Err(Error::CapExceeded { h: 250, cap: 200 })
        ));
        assert!(verify_theorem(0).is_err());
    }
}

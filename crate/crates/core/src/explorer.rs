//! Exhaustive scans of sumset sizes over bounded search spaces.
//!
//! Enumeration is deterministic by construction: every space has a fixed
//! lexicographic order, work is partitioned into static blocks of that
//! order, and block results merge with an associative, commutative
//! operation (counts add, witnesses keep the lowest rank). Reports are
//! therefore identical for any worker count.
//!
//! A report's `achieved` list is sound — every size is re-verified — but
//! never claimed complete: `max_element` is a search bound, and sizes
//! listed in `missing_in_interval` were not found under it, nothing more.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arith::binomial;
use crate::construction::predicted_popular_size;
use crate::error::{Error, Result};
use crate::set::IntSet;
use crate::sumset::{h_fold_sumset, size_bounds, SizeBounds};

/// Default ceiling on the number of candidate sets a scan will visit.
pub const DEFAULT_ENUM_GUARD: u64 = 10_000_000;

const BLOCK_RANKS: u64 = 1024;

/// Which family of candidate sets a scan walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceShape {
    /// Canonical k-sets with max element <= N: min 0, gcd 1, and
    /// lexicographically minimal against their reflection.
    CanonicalAll,
    /// `{0, 1, a, b}` with `2 <= a <= h` and `a+1 <= b <= ha+1`.
    UnitSecond,
    /// `{0, 1, h+1, h^2+h+1-p}` for `p in [0, h^2-1]`.
    Problem1,
}

/// A finite candidate space. Construct through the shape-specific
/// constructors; `max_element` records the largest element any
/// candidate may contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpace {
    pub k: u32,
    pub max_element: i64,
    pub shape: SpaceShape,
}

impl SearchSpace {
    pub fn canonical_all(k: u32, max_element: i64) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain("canonical spaces need k >= 2"));
        }
        if max_element < 1 {
            return Err(Error::domain("max element must be >= 1"));
        }
        Ok(SearchSpace {
            k,
            max_element,
            shape: SpaceShape::CanonicalAll,
        })
    }

    pub fn unit_second(h: u32) -> Result<Self> {
        if h < 2 {
            return Err(Error::domain("the {0,1,a,b} box needs h >= 2"));
        }
        Ok(SearchSpace {
            k: 4,
            max_element: h as i64 * h as i64 + 1,
            shape: SpaceShape::UnitSecond,
        })
    }

    pub fn problem1(h: u32) -> Result<Self> {
        if h < 1 {
            return Err(Error::domain("h must be >= 1"));
        }
        let hw = h as i64;
        Ok(SearchSpace {
            k: 4,
            max_element: hw * hw + hw + 1,
            shape: SpaceShape::Problem1,
        })
    }

    /// Number of raw candidates (before the canonical filter); this is
    /// what the enumeration guard compares against.
    pub fn raw_cardinality(&self, h: u32) -> Result<u64> {
        match self.shape {
            SpaceShape::CanonicalAll => {
                binomial(self.max_element as u64, self.k as u64 - 1)
            }
            SpaceShape::UnitSecond => {
                let hw = h as u64;
                Ok((2..=hw).map(|a| hw * a + 1 - a).sum())
            }
            SpaceShape::Problem1 => Ok(h as u64 * h as u64),
        }
    }

    fn validate_for(&self, h: u32) -> Result<()> {
        if h == 0 {
            return Err(Error::domain("h must be >= 1"));
        }
        match self.shape {
            SpaceShape::CanonicalAll => Ok(()),
            SpaceShape::UnitSecond => {
                let expect = SearchSpace::unit_second(h)?;
                if *self != expect {
                    return Err(Error::domain(format!(
                        "unit-second space was built for a different h than {h}"
                    )));
                }
                Ok(())
            }
            SpaceShape::Problem1 => {
                let expect = SearchSpace::problem1(h)?;
                if *self != expect {
                    return Err(Error::domain(format!(
                        "problem-1 space was built for a different h than {h}"
                    )));
                }
                Ok(())
            }
        }
    }

    fn cursor_at(&self, h: u32, rank: u64) -> Cursor {
        match self.shape {
            SpaceShape::CanonicalAll => {
                let m = self.k as usize - 1;
                let n = self.max_element as u64;
                let mut elems = Vec::with_capacity(self.k as usize);
                elems.push(0);
                unrank_combination(n, m, rank, &mut elems);
                Cursor::Combination {
                    n: self.max_element,
                    elems,
                }
            }
            SpaceShape::UnitSecond => {
                let hw = h as i64;
                let mut remaining = rank;
                let mut a = 2i64;
                loop {
                    let row = (hw * a + 1 - a) as u64;
                    if remaining < row {
                        break;
                    }
                    remaining -= row;
                    a += 1;
                }
                Cursor::UnitSecond {
                    h: hw,
                    elems: vec![0, 1, a, a + 1 + remaining as i64],
                }
            }
            SpaceShape::Problem1 => {
                let hw = h as i64;
                let c = hw * hw + hw + 1 - rank as i64;
                Cursor::Problem1 {
                    elems: vec![0, 1, hw + 1, c],
                }
            }
        }
    }
}

enum Cursor {
    Combination { n: i64, elems: Vec<i64> },
    UnitSecond { h: i64, elems: Vec<i64> },
    Problem1 { elems: Vec<i64> },
}

impl Cursor {
    fn current(&self) -> &[i64] {
        match self {
            Cursor::Combination { elems, .. }
            | Cursor::UnitSecond { elems, .. }
            | Cursor::Problem1 { elems } => elems,
        }
    }

    /// True when the current candidate belongs to the space (raw ranks
    /// cover a superset of canonical-all).
    fn accepted(&self) -> bool {
        match self {
            Cursor::Combination { elems, .. } => is_canonical_normalized(elems),
            _ => true,
        }
    }

    fn advance(&mut self) {
        match self {
            Cursor::Combination { n, elems } => {
                next_combination(&mut elems[1..], *n);
            }
            Cursor::UnitSecond { h, elems } => {
                let (a, b) = (elems[2], elems[3]);
                if b < *h * a + 1 {
                    elems[3] = b + 1;
                } else {
                    elems[2] = a + 1;
                    elems[3] = a + 2;
                }
            }
            Cursor::Problem1 { elems } => {
                elems[3] -= 1;
            }
        }
    }
}

// Lex unranking of m-combinations of {1..n} appended to `out`.
fn unrank_combination(n: u64, m: usize, mut rank: u64, out: &mut Vec<i64>) {
    let mut v = 1u64;
    let mut remaining = m as u64;
    while remaining > 0 {
        // candidates starting at v: C(n - v, remaining - 1)
        let count = binomial(n - v, remaining - 1).expect("guarded cardinality fits u64");
        if rank < count {
            out.push(v as i64);
            remaining -= 1;
        } else {
            rank -= count;
        }
        v += 1;
    }
}

// In-place lex successor of an increasing tuple over {1..n}; false at the end.
fn next_combination(elems: &mut [i64], n: i64) -> bool {
    let m = elems.len();
    let mut i = m;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if elems[i] < n - (m - 1 - i) as i64 {
            break;
        }
    }
    elems[i] += 1;
    for j in i + 1..m {
        elems[j] = elems[j - 1] + 1;
    }
    true
}

// Canonical filter for already-normalized candidates (elems[0] == 0,
// strictly increasing): gcd of the nonzero elements is 1 and the tuple
// is lexicographically <= its reflection. Agrees with
// `canonical_form(A) == A`; reflection preserves min-0/gcd-1 here.
fn is_canonical_normalized(elems: &[i64]) -> bool {
    let mut g = 0i64;
    for &e in &elems[1..] {
        g = num_integer::gcd(g, e);
        if g == 1 {
            break;
        }
    }
    if g != 1 {
        return false;
    }
    let max = elems[elems.len() - 1];
    for (idx, &e) in elems.iter().enumerate() {
        let reflected = max - elems[elems.len() - 1 - idx];
        match e.cmp(&reflected) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    true // palindromic orbit representative
}

/// Knobs for a scan; `jobs == 1` runs strictly single-threaded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExplorerOptions {
    pub jobs: usize,
    pub guard: u64,
}

impl Default for ExplorerOptions {
    fn default() -> Self {
        ExplorerOptions {
            jobs: 1,
            guard: DEFAULT_ENUM_GUARD,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct SizeHit {
    count: u64,
    first_rank: u64,
    witness: Vec<i64>,
}

type Accum = BTreeMap<u64, SizeHit>;

fn merge_accum(mut a: Accum, b: Accum) -> Accum {
    for (size, hit) in b {
        match a.entry(size) {
            Entry::Vacant(slot) => {
                slot.insert(hit);
            }
            Entry::Occupied(mut slot) => {
                let cur = slot.get_mut();
                cur.count += hit.count;
                if hit.first_rank < cur.first_rank {
                    cur.first_rank = hit.first_rank;
                    cur.witness = hit.witness;
                }
            }
        }
    }
    a
}

fn scan_block(h: u32, space: &SearchSpace, lo: u64, hi: u64) -> Result<Accum> {
    let mut cursor = space.cursor_at(h, lo);
    let mut accum = Accum::new();
    for rank in lo..hi {
        if cursor.accepted() {
            let candidate = IntSet::from_sorted_unchecked(cursor.current().to_vec());
            let size = h_fold_sumset(&candidate, h)?.len() as u64;
            match accum.entry(size) {
                Entry::Vacant(slot) => {
                    slot.insert(SizeHit {
                        count: 1,
                        first_rank: rank,
                        witness: cursor.current().to_vec(),
                    });
                }
                Entry::Occupied(mut slot) => {
                    slot.get_mut().count += 1;
                }
            }
        }
        cursor.advance();
    }
    Ok(accum)
}

fn scan_space(h: u32, space: &SearchSpace, opts: &ExplorerOptions) -> Result<Accum> {
    space.validate_for(h)?;
    if opts.jobs == 0 {
        return Err(Error::domain("worker count must be >= 1"));
    }
    let total = space.raw_cardinality(h)?;
    if total > opts.guard {
        return Err(Error::GuardExceeded {
            estimate: total,
            limit: opts.guard,
        });
    }
    let blocks: Vec<(u64, u64)> = (0..total)
        .step_by(BLOCK_RANKS as usize)
        .map(|lo| (lo, (lo + BLOCK_RANKS).min(total)))
        .collect();
    if opts.jobs == 1 {
        let mut accum = Accum::new();
        for (lo, hi) in blocks {
            accum = merge_accum(accum, scan_block(h, space, lo, hi)?);
        }
        Ok(accum)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::domain(format!("thread pool: {e}")))?;
        pool.install(|| {
            blocks
                .into_par_iter()
                .map(|(lo, hi)| scan_block(h, space, lo, hi))
                .try_reduce(Accum::new, |a, b| Ok(merge_accum(a, b)))
        })
    }
}

/// Achieved sumset sizes over a space, with one witness per size,
/// frequency counts, and the gap report against the theoretical bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeReport {
    pub h: u32,
    pub space: SearchSpace,
    /// Sets actually scanned (canonical representatives for
    /// canonical-all); frequencies sum to this.
    pub cardinality: u64,
    pub bounds: SizeBounds,
    pub achieved: Vec<u64>,
    pub witnesses: BTreeMap<u64, IntSet>,
    pub frequencies: BTreeMap<u64, u64>,
    /// Sizes in `[lower, upper]` not attained within the search bound —
    /// "not found under max_element", never "nonexistent".
    pub missing_in_interval: Vec<u64>,
}

/// Scans the space with default options (single worker, default guard).
pub fn enumerate_sizes(h: u32, space: &SearchSpace) -> Result<RangeReport> {
    enumerate_sizes_with(h, space, &ExplorerOptions::default())
}

pub fn enumerate_sizes_with(
    h: u32,
    space: &SearchSpace,
    opts: &ExplorerOptions,
) -> Result<RangeReport> {
    let accum = scan_space(h, space, opts)?;
    let bounds = size_bounds(h, space.k)?;
    let cardinality = accum.values().map(|hit| hit.count).sum();

    let mut witnesses = BTreeMap::new();
    let mut frequencies = BTreeMap::new();
    for (&size, hit) in &accum {
        if size < bounds.lower || size > bounds.upper {
            return Err(Error::Inconsistency(format!(
                "achieved size {size} outside bounds [{}, {}]",
                bounds.lower, bounds.upper
            )));
        }
        let witness = IntSet::from_sorted(hit.witness.clone())?;
        let replay = h_fold_sumset(&witness, h)?.len() as u64;
        if replay != size {
            return Err(Error::Inconsistency(format!(
                "witness {witness} re-verified to {replay}, recorded {size}"
            )));
        }
        witnesses.insert(size, witness);
        frequencies.insert(size, hit.count);
    }
    let achieved: Vec<u64> = frequencies.keys().copied().collect();
    let missing_in_interval = (bounds.lower..=bounds.upper)
        .filter(|s| !frequencies.contains_key(s))
        .collect();
    Ok(RangeReport {
        h,
        space: *space,
        cardinality,
        bounds,
        achieved,
        witnesses,
        frequencies,
        missing_in_interval,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HistogramEntry {
    pub size: u64,
    pub count: u64,
}

/// Where one predicted popular size landed in the frequency table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TargetRank {
    pub i0: u32,
    pub size: u64,
    /// 1-based position in the table, or None if the size never occurred.
    pub rank: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistogramReport {
    pub h: u32,
    pub space: SearchSpace,
    pub cardinality: u64,
    /// Descending by count, ties broken by ascending size.
    pub entries: Vec<HistogramEntry>,
    pub target_ranks: Vec<TargetRank>,
}

/// Exact frequency table of sumset sizes over a space, with the rank of
/// every predicted popular size.
pub fn popularity_histogram(h: u32, space: &SearchSpace) -> Result<HistogramReport> {
    popularity_histogram_with(h, space, &ExplorerOptions::default())
}

pub fn popularity_histogram_with(
    h: u32,
    space: &SearchSpace,
    opts: &ExplorerOptions,
) -> Result<HistogramReport> {
    let accum = scan_space(h, space, opts)?;
    let cardinality = accum.values().map(|hit| hit.count).sum();
    let mut entries: Vec<HistogramEntry> = accum
        .iter()
        .map(|(&size, hit)| HistogramEntry {
            size,
            count: hit.count,
        })
        .collect();
    entries.sort_by(|a, b| b.count.cmp(&a.count).then(a.size.cmp(&b.size)));

    let mut target_ranks = Vec::with_capacity(h as usize);
    for i0 in 0..h {
        let size = predicted_popular_size(h, i0)?;
        let rank = entries
            .iter()
            .position(|e| e.size == size)
            .map(|idx| idx as u64 + 1);
        target_ranks.push(TargetRank { i0, size, rank });
    }
    Ok(HistogramReport {
        h,
        space: *space,
        cardinality,
        entries,
        target_ranks,
    })
}

/// One parameter of the `{0, 1, h+1, h^2+h+1-p}` scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem1Row {
    pub p: i64,
    /// None when the parameters collide into fewer than 4 elements.
    pub set: Option<IntSet>,
    pub size: Option<u64>,
    pub degenerate: bool,
}

/// Sumset sizes of `{0, 1, h+1, h^2+h+1-p}` for every `p in [0, h^2-1]`,
/// in ascending `p`. Parameter collisions are reported as degenerate
/// rows rather than skipped.
pub fn problem1_scan(h: u32) -> Result<Vec<Problem1Row>> {
    if h == 0 {
        return Err(Error::domain("h must be >= 1"));
    }
    let hw = h as i64;
    let mut rows = Vec::with_capacity((hw * hw) as usize);
    for p in 0..hw * hw {
        let c = hw * hw + hw + 1 - p;
        if c == 0 || c == 1 || c == hw + 1 {
            rows.push(Problem1Row {
                p,
                set: None,
                size: None,
                degenerate: true,
            });
            continue;
        }
        let set = IntSet::new(vec![0, 1, hw + 1, c])?;
        let size = h_fold_sumset(&set, h)?.len() as u64;
        rows.push(Problem1Row {
            p,
            set: Some(set),
            size: Some(size),
            degenerate: false,
        });
    }
    Ok(rows)
}

/// Scans the `{0, 1, a, b}` box for this `h`.
pub fn problem2_scan(h: u32) -> Result<RangeReport> {
    problem2_scan_with(h, &ExplorerOptions::default())
}

pub fn problem2_scan_with(h: u32, opts: &ExplorerOptions) -> Result<RangeReport> {
    let space = SearchSpace::unit_second(h)?;
    enumerate_sizes_with(h, &space, opts)
}

/// The exact size range for the solved cases, ascending:
/// k = 1, h = 1, k = 2, h = 2, and k = 3. Returns None for the open
/// territory k >= 4, h >= 3.
pub fn closed_form_range(h: u32, k: u32) -> Result<Option<Vec<u64>>> {
    if h == 0 || k == 0 {
        return Err(Error::domain("h and k must be >= 1"));
    }
    let range = if k == 1 {
        vec![1]
    } else if h == 1 {
        vec![k as u64]
    } else if k == 2 {
        vec![h as u64 + 1]
    } else if h == 2 {
        let lo = 2 * k as u64 - 1;
        let hi = binomial(k as u64 + 1, 2)?;
        (lo..=hi).collect()
    } else if k == 3 {
        // differences of triangular numbers, descending in i0
        let whole = binomial(h as u64 + 2, 2)?;
        let mut sizes = Vec::with_capacity(h as usize);
        for i0 in (1..=h as u64).rev() {
            sizes.push(whole - binomial(i0, 2)?);
        }
        sizes
    } else {
        return Ok(None);
    };
    Ok(Some(range))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::canonical_form;
    use crate::sumset::h_fold_sumset_naive;

    #[test]
    fn canonical_all_matches_filtering_by_canonical_form() {
        // every enumerated candidate is its own canonical form, and the
        // enumeration finds every canonical set in range
        let space = SearchSpace::canonical_all(3, 12).unwrap();
        let total = space.raw_cardinality(2).unwrap();
        let mut cursor = space.cursor_at(2, 0);
        let mut listed = Vec::new();
        for _ in 0..total {
            if cursor.accepted() {
                listed.push(cursor.current().to_vec());
            }
            cursor.advance();
        }
        let mut expected = Vec::new();
        for b in 1..=12i64 {
            for c in (b + 1)..=12 {
                let set = IntSet::new(vec![0, b, c]).unwrap();
                if canonical_form(&set).unwrap() == set {
                    expected.push(vec![0, b, c]);
                }
            }
        }
        assert_eq!(listed, expected);
    }

    #[test]
    fn unrank_agrees_with_sequential_iteration() {
        let space = SearchSpace::canonical_all(4, 9).unwrap();
        let total = space.raw_cardinality(2).unwrap();
        let mut cursor = space.cursor_at(2, 0);
        for rank in 0..total {
            let fresh = space.cursor_at(2, rank);
            assert_eq!(fresh.current(), cursor.current(), "rank {rank}");
            cursor.advance();
        }
    }

    #[test]
    fn range_3_3_reproduces_the_known_gap() {
        let space = SearchSpace::canonical_all(3, 30).unwrap();
        let report = enumerate_sizes(3, &space).unwrap();
        assert_eq!(report.achieved, vec![7, 9, 10]);
        assert_eq!(report.missing_in_interval, vec![8]);
        assert_eq!((report.bounds.lower, report.bounds.upper), (7, 10));
        assert_eq!(report.witnesses[&7].elements(), &[0, 1, 2]);
    }

    #[test]
    fn single_fold_spaces_only_reach_k() {
        let space = SearchSpace::canonical_all(4, 10).unwrap();
        let report = enumerate_sizes(1, &space).unwrap();
        assert_eq!(report.achieved, vec![4]);
        assert_eq!(report.frequencies[&4], report.cardinality);
    }

    #[test]
    fn two_fold_three_sets_match_closed_form() {
        let space = SearchSpace::canonical_all(3, 12).unwrap();
        let report = enumerate_sizes(2, &space).unwrap();
        assert_eq!(report.achieved, vec![5, 6]);
        assert_eq!(
            closed_form_range(2, 3).unwrap().unwrap(),
            vec![5, 6]
        );
    }

    #[test]
    fn parallel_scan_is_deterministic() {
        let space = SearchSpace::canonical_all(4, 16).unwrap();
        let serial = enumerate_sizes(3, &space).unwrap();
        let parallel = enumerate_sizes_with(
            3,
            &space,
            &ExplorerOptions {
                jobs: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn guard_refuses_with_estimate() {
        let space = SearchSpace::canonical_all(4, 1000).unwrap();
        let err = enumerate_sizes(3, &space).unwrap_err();
        assert!(matches!(err, Error::GuardExceeded { estimate, limit }
            if estimate == 166_167_000 && limit == DEFAULT_ENUM_GUARD));
        assert!(matches!(
            enumerate_sizes_with(
                3,
                &space,
                &ExplorerOptions { jobs: 0, ..Default::default() }
            ),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn histogram_covers_the_popular_targets() {
        let space = SearchSpace::canonical_all(4, 24).unwrap();
        let report = popularity_histogram(3, &space).unwrap();
        assert_eq!(report.target_ranks.len(), 3);
        for target in &report.target_ranks {
            assert!(target.rank.is_some(), "target {} absent", target.size);
        }
        let sizes: Vec<u64> = report.target_ranks.iter().map(|t| t.size).collect();
        assert_eq!(sizes, vec![20, 19, 16]);
        // descending counts, ties by ascending size
        for pair in report.entries.windows(2) {
            assert!(
                pair[0].count > pair[1].count
                    || (pair[0].count == pair[1].count && pair[0].size < pair[1].size)
            );
        }
    }

    #[test]
    fn trivial_histogram_is_one_bucket() {
        let space = SearchSpace::canonical_all(4, 8).unwrap();
        let report = popularity_histogram(1, &space).unwrap();
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].size, 4);
        assert_eq!(report.entries[0].count, report.cardinality);
    }

    #[test]
    fn problem1_rows_match_the_family() {
        let rows = problem1_scan(3).unwrap();
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|r| !r.degenerate));

        let row = &rows[1]; // p = 1 <=> i0 = 1
        assert_eq!(row.set.as_ref().unwrap().elements(), &[0, 1, 4, 12]);
        assert_eq!(row.size, Some(19));

        let row = &rows[5]; // p = 5 <=> i0 = 2
        assert_eq!(row.set.as_ref().unwrap().elements(), &[0, 1, 4, 8]);
        assert_eq!(row.size, Some(16));

        let row = &rows[0]; // p = 0: no closed form claimed, oracle only
        let set = row.set.as_ref().unwrap();
        assert_eq!(set.elements(), &[0, 1, 4, 13]);
        let oracle = h_fold_sumset_naive(set, 3).unwrap().len() as u64;
        assert_eq!(row.size, Some(oracle));
    }

    #[test]
    fn problem2_box_counts() {
        let report = problem2_scan(2).unwrap();
        assert_eq!(report.cardinality, 3); // {0,1,2,b} for b in [3,5]
        let report = problem2_scan(3).unwrap();
        assert_eq!(report.cardinality, 12); // 5 + 7
        assert!(report.achieved.contains(&10)); // AP {0,1,2,3} attains 3h+1
        assert_eq!(report.witnesses[&10].elements(), &[0, 1, 2, 3]);
        assert!(problem2_scan(1).is_err());
    }

    #[test]
    fn spaces_reject_mismatched_h() {
        let space = SearchSpace::unit_second(3).unwrap();
        assert!(enumerate_sizes(2, &space).is_err());
        let space = SearchSpace::problem1(4).unwrap();
        assert!(enumerate_sizes(5, &space).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_range(3, 3).unwrap().unwrap(), vec![7, 9, 10]);
        assert_eq!(
            closed_form_range(2, 5).unwrap().unwrap(),
            (9..=15).collect::<Vec<u64>>()
        );
        assert_eq!(closed_form_range(7, 2).unwrap().unwrap(), vec![8]);
        assert_eq!(closed_form_range(9, 1).unwrap().unwrap(), vec![1]);
        assert_eq!(closed_form_range(1, 6).unwrap().unwrap(), vec![6]);
        assert_eq!(closed_form_range(3, 4).unwrap(), None);
        assert!(closed_form_range(0, 3).is_err());
    }

    #[test]
    fn problem1_space_enumerates_in_p_order() {
        let space = SearchSpace::problem1(3).unwrap();
        let report = enumerate_sizes(3, &space).unwrap();
        assert_eq!(report.cardinality, 9);
        // the family's predicted sizes all occur in the scan
        for size in [16u64, 19] {
            assert!(report.frequencies.contains_key(&size));
        }
    }
}

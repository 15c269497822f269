//! Exact arithmetic for h-fold sumsets of finite integer sets.
//!
//! Three layers:
//!
//! * [`set`] and [`sumset`] — the set algebra: sorted integer sets,
//!   affine canonicalization, the fast sumset engine, an independent
//!   naive oracle, and the size bounds `h(k-1)+1 <= |hA| <= C(h+k-1, k-1)`.
//! * [`construction`] — the explicit 4-element family `{0, 1, h+1, c}`
//!   whose h-fold sumset sizes are differences of tetrahedral numbers,
//!   together with its layer decomposition and closed-form counts.
//! * [`explorer`] — exhaustive, deterministic scans of achievable sizes
//!   over canonical search spaces, with witnesses and frequency tables.
//!
//! All arithmetic is checked 64-bit; overflow is an error, never a
//! wrapped count.

pub mod arith;
pub mod construction;
pub mod error;
pub mod explorer;
pub mod set;
pub mod sumset;

pub use arith::{binomial, tetrahedral};
pub use construction::{
    disjointness_threshold, layer_intersection_size, layer_intervals, layer_size_formula,
    popular_set, popular_targets, predicted_popular_size, verify_theorem,
    verify_theorem_with_cap, IntervalRun, LayerDecomposition, PopularFamily, VerificationReport,
    VerificationRow, DEFAULT_VERIFY_CAP,
};
pub use error::{Error, Result};
pub use explorer::{
    closed_form_range, enumerate_sizes, enumerate_sizes_with, popularity_histogram,
    popularity_histogram_with, problem1_scan, problem2_scan, problem2_scan_with, ExplorerOptions,
    HistogramEntry, HistogramReport, Problem1Row, RangeReport, SearchSpace, SpaceShape,
    TargetRank, DEFAULT_ENUM_GUARD,
};
pub use set::{canonical_form, is_arithmetic_progression, normalize, AffineMap, IntSet};
pub use sumset::{
    h_fold_sumset, h_fold_sumset_naive, is_b_h_set, pairwise_sumset, size_bounds, SizeBounds,
    NAIVE_ORACLE_GUARD,
};

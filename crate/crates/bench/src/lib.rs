//! Shared fixtures for the criterion benches.

use sumset_core::{popular_set, IntSet, SearchSpace};

/// The family witness `{0, 1, h+1, (h+1-i0)(h+1)}`.
pub fn family_set(h: u32, i0: u32) -> IntSet {
    popular_set(h, i0).expect("valid family parameters").set
}

pub fn canonical_space(k: u32, max_element: i64) -> SearchSpace {
    SearchSpace::canonical_all(k, max_element).expect("valid space")
}

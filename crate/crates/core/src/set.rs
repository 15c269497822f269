//! Finite integer sets and affine canonicalization.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite, non-empty set of integers, stored strictly increasing.
///
/// Everything else in the crate works on this representation: sumsets,
/// canonical forms, and search spaces all assume sortedness and rely on
/// exact `i64` arithmetic (overflow is reported, never wrapped).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntSet {
    elements: Vec<i64>,
}

impl IntSet {
    /// Builds a set from elements in any order. Duplicates are an error:
    /// silently collapsing them would change the set's size.
    pub fn new(elements: impl Into<Vec<i64>>) -> Result<Self> {
        let mut elements = elements.into();
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0]));
        }
        Ok(IntSet { elements })
    }

    /// Builds a set from an already strictly increasing sequence.
    pub fn from_sorted(elements: Vec<i64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return if w[0] == w[1] {
                Err(Error::DuplicateElement(w[0]))
            } else {
                Err(Error::NotSorted(w[1]))
            };
        }
        Ok(IntSet { elements })
    }

    // Internal fast path; callers guarantee strict increase.
    pub(crate) fn from_sorted_unchecked(elements: Vec<i64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!elements.is_empty());
        IntSet { elements }
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: non-empty
    }

    pub fn min_element(&self) -> i64 {
        self.elements[0]
    }

    pub fn max_element(&self) -> i64 {
        *self.elements.last().unwrap()
    }

    pub fn contains(&self, value: i64) -> bool {
        self.elements.binary_search(&value).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elements.iter().copied()
    }

    /// The reflection `{max(A) - a : a in A}`, an affine image with scale -1.
    pub fn reflect(&self) -> Result<Self> {
        let max = self.max_element();
        let mut out = Vec::with_capacity(self.len());
        for &a in self.elements.iter().rev() {
            out.push(max.checked_sub(a).ok_or(Error::Overflow("reflect"))?);
        }
        Ok(IntSet::from_sorted_unchecked(out))
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// An integer affine map `x -> scale * x + shift` with `scale != 0`.
///
/// Affinely equivalent sets have equal h-fold sumset sizes for every h,
/// so these maps are the dedup group for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineMap {
    pub scale: i64,
    pub shift: i64,
}

impl AffineMap {
    pub fn new(scale: i64, shift: i64) -> Result<Self> {
        if scale == 0 {
            return Err(Error::domain("affine scale must be nonzero"));
        }
        Ok(AffineMap { scale, shift })
    }

    /// Applies the map elementwise. A negative scale reverses the order.
    pub fn apply(&self, set: &IntSet) -> Result<IntSet> {
        let mut out = Vec::with_capacity(set.len());
        let mapped = |a: i64| -> Result<i64> {
            a.checked_mul(self.scale)
                .and_then(|x| x.checked_add(self.shift))
                .ok_or(Error::Overflow("affine apply"))
        };
        if self.scale > 0 {
            for a in set.iter() {
                out.push(mapped(a)?);
            }
        } else {
            for &a in set.elements().iter().rev() {
                out.push(mapped(a)?);
            }
        }
        Ok(IntSet::from_sorted_unchecked(out))
    }
}

/// Reduces `a` to its affine representative with min 0 and, for sets of
/// size >= 2, gcd 1 over the nonzero elements. Singletons normalize to
/// `{0}`.
///
/// The returned map witnesses the equivalence in the integral direction:
/// `map.apply(&normalized) == a`, i.e. `a = scale * normalized + shift`
/// with `scale == gcd > 0` and `shift == min(a)`.
pub fn normalize(a: &IntSet) -> Result<(IntSet, AffineMap)> {
    let min = a.min_element();
    let mut shifted = Vec::with_capacity(a.len());
    for x in a.iter() {
        shifted.push(x.checked_sub(min).ok_or(Error::Overflow("normalize"))?);
    }
    let gcd = shifted.iter().fold(0i64, |g, &x| g.gcd(&x));
    let scale = if gcd == 0 { 1 } else { gcd };
    for x in &mut shifted {
        *x /= scale;
    }
    Ok((
        IntSet::from_sorted_unchecked(shifted),
        AffineMap { scale, shift: min },
    ))
}

/// The canonical representative of `a`'s affine-plus-reflection orbit:
/// the lexicographically smaller of `normalize(a)` and the normalized
/// reflection. Idempotent, and constant across the whole orbit.
pub fn canonical_form(a: &IntSet) -> Result<IntSet> {
    let (fwd, _) = normalize(a)?;
    let (rev, _) = normalize(&a.reflect()?)?;
    Ok(fwd.min(rev))
}

/// True iff consecutive differences are all equal. Sets of size <= 2
/// are always arithmetic progressions.
pub fn is_arithmetic_progression(a: &IntSet) -> bool {
    let e = a.elements();
    if e.len() <= 2 {
        return true;
    }
    // i128 differences: no overflow for any i64 inputs
    let d = e[1] as i128 - e[0] as i128;
    e.windows(2).all(|w| w[1] as i128 - w[0] as i128 == d)
}

//! Monotone surjections `[n] ↠ [m]` and the monotone-map arithmetic used by
//! the normal-form engine.

use std::fmt;

use crate::error::SimplicialError;

/// Largest simplex dimension the engine handles. Each nondegenerate simplex
/// carries a table indexed by vertex subsets, so memory grows as `2^(dim+1)`.
pub const MAX_DIM: usize = 16;

/// A monotone surjection `η: [n] ↠ [m]`, encoded by its collapse set: the
/// positions `i < n` with `η(i) = η(i+1)`.
///
/// The encoding is bijective with monotone surjections and the identity on
/// `[n]` has an empty collapse set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrdinalSurjection {
    source_dim: u8,
    collapse: u32,
}

impl OrdinalSurjection {
    pub fn identity(dim: usize) -> Self {
        debug_assert!(dim <= MAX_DIM);
        OrdinalSurjection {
            source_dim: dim as u8,
            collapse: 0,
        }
    }

    /// Builds a surjection from its source dimension and collapse positions.
    pub fn new(source_dim: usize, collapse: &[usize]) -> Result<Self, SimplicialError> {
        if source_dim > MAX_DIM {
            return Err(SimplicialError::DimensionTooLarge(source_dim));
        }
        let mut mask = 0u32;
        for &c in collapse {
            if c >= source_dim {
                return Err(SimplicialError::IndexOutOfRange {
                    index: c,
                    dim: source_dim,
                });
            }
            if mask & (1 << c) != 0 {
                return Err(SimplicialError::Malformed(format!(
                    "collapse position {c} repeated"
                )));
            }
            mask |= 1 << c;
        }
        Ok(OrdinalSurjection {
            source_dim: source_dim as u8,
            collapse: mask,
        })
    }

    pub(crate) fn from_mask(source_dim: usize, collapse: u32) -> Self {
        debug_assert!(source_dim <= MAX_DIM);
        debug_assert!(collapse >> source_dim == 0);
        OrdinalSurjection {
            source_dim: source_dim as u8,
            collapse,
        }
    }

    /// Reads off the collapse set of a monotone surjective value table.
    pub(crate) fn from_values(values: &[u8]) -> Self {
        let n = values.len() - 1;
        let mut mask = 0u32;
        for p in 0..n {
            debug_assert!(values[p + 1] == values[p] || values[p + 1] == values[p] + 1);
            if values[p] == values[p + 1] {
                mask |= 1 << p;
            }
        }
        Self::from_mask(n, mask)
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim as usize
    }

    pub fn target_dim(&self) -> usize {
        self.source_dim as usize - self.collapse.count_ones() as usize
    }

    pub fn collapse_mask(&self) -> u32 {
        self.collapse
    }

    /// Collapse positions, ascending.
    pub fn collapse(&self) -> Vec<usize> {
        (0..self.source_dim())
            .filter(|&p| self.collapse & (1 << p) != 0)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.collapse == 0
    }

    /// `η(i)`: `i` minus the number of collapse positions below `i`.
    pub fn apply(&self, i: usize) -> usize {
        debug_assert!(i <= self.source_dim());
        i - (self.collapse & ((1u32 << i) - 1)).count_ones() as usize
    }

    pub fn values(&self) -> Vec<u8> {
        (0..=self.source_dim())
            .map(|i| self.apply(i) as u8)
            .collect()
    }

    /// `self ∘ inner`, which first applies `inner`.
    pub fn after(&self, inner: &OrdinalSurjection) -> OrdinalSurjection {
        debug_assert_eq!(inner.target_dim(), self.source_dim());
        let values: Vec<u8> = (0..=inner.source_dim())
            .map(|p| self.apply(inner.apply(p)) as u8)
            .collect();
        Self::from_values(&values)
    }

    /// Factors `self = quotient ∘ σ_C` where `σ_C` collapses exactly `common`.
    /// `common` must be a subset of the collapse set.
    pub(crate) fn divide(&self, common: u32) -> OrdinalSurjection {
        debug_assert_eq!(common & !self.collapse, 0);
        let outer = OrdinalSurjection::from_mask(self.source_dim(), common);
        let mut values = vec![0u8; outer.target_dim() + 1];
        for p in 0..=self.source_dim() {
            values[outer.apply(p)] = self.apply(p) as u8;
        }
        Self::from_values(&values)
    }

    /// All surjections `[source] ↠ [target]`, ordered by collapse mask.
    pub fn all(source: usize, target: usize) -> Vec<OrdinalSurjection> {
        if target > source {
            return Vec::new();
        }
        let k = (source - target) as u32;
        (0u32..(1u32 << source))
            .filter(|m| m.count_ones() == k)
            .map(|m| Self::from_mask(source, m))
            .collect()
    }
}

impl fmt::Display for OrdinalSurjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{{")?;
        for (k, c) in self.collapse().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A monotone map `[m] → [n]` stored as its value table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Monotone {
    pub values: Vec<u8>,
}

impl Monotone {
    /// The coface `δ_i: [n-1] ↪ [n]` skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        Monotone {
            values: (0..n)
                .map(|p| if p < i { p } else { p + 1 } as u8)
                .collect(),
        }
    }

    /// The codegeneracy `σ_i: [n+1] ↠ [n]` hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        Monotone {
            values: (0..=n + 1)
                .map(|p| if p <= i { p } else { p - 1 } as u8)
                .collect(),
        }
    }

    /// Inclusion of the vertex subset `mask` of `[n]` in increasing order.
    pub fn subset(mask: u32) -> Self {
        Monotone {
            values: (0..32u8).filter(|&p| mask & (1 << p) != 0).collect(),
        }
    }
}

/// Epi-mono factorisation of `η ∘ θ` for a surjection `η` and monotone `θ`:
/// returns `(image mask in [target η], surjection onto the image)`.
pub(crate) fn factor(eta: &OrdinalSurjection, theta: &Monotone) -> (u32, OrdinalSurjection) {
    let composite: Vec<u8> = theta
        .values
        .iter()
        .map(|&v| eta.apply(v as usize) as u8)
        .collect();
    let mut mask = 0u32;
    for &c in &composite {
        mask |= 1 << c;
    }
    let rank: Vec<u8> = composite
        .iter()
        .map(|&c| (mask & ((1u32 << c) - 1)).count_ones() as u8)
        .collect();
    (mask, OrdinalSurjection::from_values(&rank))
}

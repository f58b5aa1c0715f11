//! Exact incremental row reduction over sparse rational vectors.
//!
//! [`RowSpace`] maintains an echelonised spanning set of sparse vectors keyed
//! by an arbitrary ordered key type (PBW words, monomial exponents, coroot
//! coordinates...).  All elimination is exact rational arithmetic; pivot
//! choice is the smallest key of the reduced vector, so the result is
//! deterministic and independent of hashing.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::Rat;

/// Adds `coeff * source` to `target`, dropping entries that cancel to zero.
pub fn add_scaled<K: Ord + Clone>(
    target: &mut BTreeMap<K, Rat>,
    source: &BTreeMap<K, Rat>,
    coeff: &Rat,
) {
    if coeff.is_zero() {
        return;
    }
    for (k, v) in source {
        let slot = target.entry(k.clone()).or_insert_with(Rat::zero);
        *slot += v * coeff;
        if slot.is_zero() {
            target.remove(k);
        }
    }
}

/// An exact row space: inserted vectors are reduced against the stored
/// echelon rows; independent residues become new rows (normalised to pivot
/// coefficient 1).
#[derive(Clone, Debug, Default)]
pub struct RowSpace<K: Ord + Clone> {
    rows: Vec<(K, BTreeMap<K, Rat>)>,
}

impl<K: Ord + Clone> RowSpace<K> {
    pub fn new() -> Self {
        RowSpace { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Echelon rows in insertion order, as `(pivot, row)` pairs.
    pub fn rows(&self) -> impl Iterator<Item = (&K, &BTreeMap<K, Rat>)> {
        self.rows.iter().map(|(p, r)| (p, r))
    }

    /// Reduces `vec` against the stored rows; the result has zero
    /// coefficient at every pivot.
    pub fn reduce(&self, mut vec: BTreeMap<K, Rat>) -> BTreeMap<K, Rat> {
        for (pivot, row) in &self.rows {
            if let Some(c) = vec.get(pivot).cloned() {
                add_scaled(&mut vec, row, &-c);
            }
        }
        vec
    }

    /// True when `vec` lies in the current span.
    pub fn contains(&self, vec: BTreeMap<K, Rat>) -> bool {
        self.reduce(vec).is_empty()
    }

    /// Inserts `vec`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, vec: BTreeMap<K, Rat>) -> bool {
        let mut residue = self.reduce(vec);
        let Some((pivot, lead)) = residue.iter().next().map(|(k, v)| (k.clone(), v.clone()))
        else {
            return false;
        };
        let inv = lead.recip();
        for v in residue.values_mut() {
            *v *= &inv;
        }
        debug_assert!(residue.get(&pivot).map(|v| v.is_one()) == Some(true));
        self.rows.push((pivot, residue));
        true
    }
}

/// Converts a dense coordinate slice to a sparse row keyed by position.
pub fn dense_row(coords: &[Rat]) -> BTreeMap<usize, Rat> {
    coords
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

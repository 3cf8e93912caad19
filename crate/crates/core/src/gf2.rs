//! Packed vectors over GF(2) and an incremental reduced row-echelon basis.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("witness tracking is disabled for this basis")]
    WitnessTrackingDisabled,
}

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A vector over GF(2) indexed by edge positions `0..dim`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EdgeVector {
    dim: usize,
    words: Vec<u64>,
}

impl EdgeVector {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, words: vec![0; words_for(dim)] }
    }

    /// The vector whose support is `positions`. Repeated positions cancel.
    ///
    /// # Panics
    /// If a position is `>= dim`.
    pub fn from_support<I: IntoIterator<Item = usize>>(dim: usize, positions: I) -> Self {
        let mut v = Self::zeros(dim);
        for i in positions {
            v.flip(i);
        }
        v
    }

    /// Builds a vector from `0/1` entries.
    pub fn from_bits(bits: &[u8]) -> Self {
        Self::from_support(bits.len(), bits.iter().enumerate().filter(|(_, &b)| b != 0).map(|(i, _)| i))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.dim, "position {i} out of range {}", self.dim);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.dim, "position {i} out of range {}", self.dim);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.dim, "position {i} out of range {}", self.dim);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of set positions.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `weight mod 2`.
    pub fn parity(&self) -> u8 {
        (self.words.iter().fold(0u64, |acc, w| acc ^ w).count_ones() & 1) as u8
    }

    pub fn lowest_set(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Set positions in increasing order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + bit)
            })
        })
    }

    fn check_dim(&self, other: &Self) -> Result<(), Gf2Error> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Gf2Error::DimensionMismatch { expected: self.dim, found: other.dim })
        }
    }

    /// `self + other`: the symmetric difference of supports.
    pub fn add(&self, other: &Self) -> Result<Self, Gf2Error> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<(), Gf2Error> {
        self.check_dim(other)?;
        self.xor_unchecked(other);
        Ok(())
    }

    #[inline]
    fn xor_unchecked(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

/// An incremental basis in reduced row-echelon form.
///
/// The leading position of a row is its lowest set bit. Every insertion that
/// grows the rank clears the new pivot from all other rows, so each pivot is
/// set in exactly one row and a membership test is a single pass.
#[derive(Clone, Debug)]
pub struct Gf2Basis {
    dim: usize,
    rows: Vec<EdgeVector>,
    pivots: Vec<usize>,
    /// `row_of_pivot[p]` is the row whose pivot is `p`, or `usize::MAX`.
    row_of_pivot: Vec<usize>,
    /// When enabled, `combos[r]` marks the inserted vectors (by insertion
    /// number) whose sum is row `r`.
    combos: Option<Vec<EdgeVector>>,
    inserted: usize,
}

impl Gf2Basis {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of_pivot: vec![usize::MAX; dim],
            combos: None,
            inserted: 0,
        }
    }

    /// A basis that also records, for each row, which inserted vectors it
    /// combines, so that [`Gf2Basis::witness`] can answer.
    pub fn with_witnesses(dim: usize) -> Self {
        Self { combos: Some(Vec::new()), ..Self::new(dim) }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[EdgeVector] {
        &self.rows
    }

    /// Number of vectors passed to [`Gf2Basis::insert`] so far.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn check_dim(&self, v: &EdgeVector) -> Result<(), Gf2Error> {
        if v.dim == self.dim {
            Ok(())
        } else {
            Err(Gf2Error::DimensionMismatch { expected: self.dim, found: v.dim })
        }
    }

    /// Reduces `v` in place against the rows; returns the rows used.
    fn reduce(&self, v: &mut EdgeVector, used: Option<&mut Vec<usize>>) {
        let mut used = used;
        for (r, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if v.get(p) {
                v.xor_unchecked(row);
                if let Some(u) = used.as_deref_mut() {
                    u.push(r);
                }
            }
        }
    }

    /// Inserts `v`; returns `true` iff `v` was outside the span (rank grew).
    pub fn insert(&mut self, v: &EdgeVector) -> Result<bool, Gf2Error> {
        self.check_dim(v)?;
        let index = self.inserted;
        self.inserted += 1;
        let mut reduced = v.clone();
        let mut used = Vec::new();
        let tracking = self.combos.is_some();
        self.reduce(&mut reduced, tracking.then_some(&mut used));
        let Some(pivot) = reduced.lowest_set() else {
            return Ok(false);
        };
        let mut combo = EdgeVector::zeros(0);
        if let Some(combos) = &self.combos {
            combo = EdgeVector::zeros(index + 1);
            combo.flip(index);
            for &r in &used {
                xor_prefix(&mut combo, &combos[r]);
            }
        }
        for r in 0..self.rows.len() {
            if self.rows[r].get(pivot) {
                self.rows[r].xor_unchecked(&reduced);
                if let Some(combos) = &mut self.combos {
                    xor_prefix(&mut combos[r], &combo);
                }
            }
        }
        self.row_of_pivot[pivot] = self.rows.len();
        self.rows.push(reduced);
        self.pivots.push(pivot);
        if let Some(combos) = &mut self.combos {
            combos.push(combo);
        }
        Ok(true)
    }

    /// Whether `v` lies in the span of the inserted vectors.
    pub fn in_span(&self, v: &EdgeVector) -> Result<bool, Gf2Error> {
        self.check_dim(v)?;
        let mut reduced = v.clone();
        self.reduce(&mut reduced, None);
        Ok(reduced.is_zero())
    }

    /// If `v` is in the span, the insertion numbers of inserted vectors whose
    /// sum is `v` (sorted); `None` if `v` is not in the span.
    pub fn witness(&self, v: &EdgeVector) -> Result<Option<Vec<usize>>, Gf2Error> {
        self.check_dim(v)?;
        let combos = self.combos.as_ref().ok_or(Gf2Error::WitnessTrackingDisabled)?;
        let mut reduced = v.clone();
        let mut used = Vec::new();
        self.reduce(&mut reduced, Some(&mut used));
        if !reduced.is_zero() {
            return Ok(None);
        }
        let mut total = EdgeVector::zeros(self.inserted);
        for r in used {
            xor_prefix(&mut total, &combos[r]);
        }
        Ok(Some(total.support().collect()))
    }

    /// The row whose leading position is `pivot`, if any.
    pub fn row_with_pivot(&self, pivot: usize) -> Option<&EdgeVector> {
        self.row_of_pivot.get(pivot).and_then(|&r| self.rows.get(r))
    }
}

/// `acc ^= other` where `other` may be shorter than `acc`.
fn xor_prefix(acc: &mut EdgeVector, other: &EdgeVector) {
    if other.dim > acc.dim {
        acc.dim = other.dim;
        acc.words.resize(words_for(other.dim), 0);
    }
    for (a, b) in acc.words.iter_mut().zip(&other.words) {
        *a ^= b;
    }
}

/// GF(2) rank of a list of vectors of equal dimension. An empty list has
/// rank 0.
pub fn rank_of(vectors: &[EdgeVector]) -> Result<usize, Gf2Error> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let mut basis = Gf2Basis::new(first.dim);
    for v in vectors {
        basis.insert(v)?;
        if basis.rank() == basis.dim() {
            // Later vectors still have to agree on the dimension.
            for rest in vectors {
                basis.check_dim(rest)?;
            }
            break;
        }
    }
    Ok(basis.rank())
}

//! Fixed-width entity sets.
//!
//! Every subset of the background set (a state, or the reactant, inhibitor
//! and product sets of a reaction) is stored as a bit vector whose width is
//! the number of entities. Entity `i` is bit `i`, so entity 0 is the least
//! significant bit and the natural ordering of sets is the ascending
//! numeric order of their bit patterns.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EntitySet {
    width: usize,
    words: SmallVec<[u64; 2]>,
}

/// A state of a reaction system is a subset of its background set.
pub type State = EntitySet;

fn words_for(width: usize) -> usize {
    width.div_ceil(WORD)
}

impl EntitySet {
    pub fn empty(width: usize) -> Self {
        EntitySet {
            width,
            words: SmallVec::from_elem(0, words_for(width)),
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    /// Builds a set from entity indices; indices must be below `width`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Result<Self> {
        let mut s = Self::empty(width);
        for i in indices {
            if i >= width {
                return Err(Error::EntityIndex { index: i, len: width });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Builds a set from the low `width` bits of `bits` (extra bits are dropped).
    pub fn from_bits(width: usize, bits: u64) -> Self {
        let mut s = Self::empty(width);
        if let Some(w) = s.words.first_mut() {
            *w = bits;
        }
        s.trim();
        s
    }

    /// The bit pattern as a single word, if the width fits in 64 bits.
    pub fn to_bits(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        let rem = self.width % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.width && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    /// Panics if `i >= width`.
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width, "entity {i} outside width {}", self.width);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.width {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn with(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * WORD + b)
            })
        })
    }

    fn check_width(&self, other: &Self) -> Result<()> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: other.width,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.width, other.width);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a = f(*a, *b);
        }
        out.trim();
        out
    }

    // The set algebra below requires equal widths; mixing widths is a
    // programming error and panics. Checked variants are used at API
    // boundaries where a width comes from user input.

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.width, other.width, "width mismatch");
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.width, other.width, "width mismatch");
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        assert_eq!(self.width, other.width, "width mismatch");
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        assert_eq!(self.width, other.width, "width mismatch");
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.width, other.width, "width mismatch");
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        assert_eq!(self.width, other.width, "width mismatch");
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Width-checked subset test.
    pub fn try_is_subset(&self, other: &Self) -> Result<bool> {
        self.check_width(other)?;
        Ok(self.is_subset(other))
    }
}

impl Ord for EntitySet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.width.cmp(&other.width).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for EntitySet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EntitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

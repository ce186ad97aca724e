//! Index sets over a finite, ordered name space.
//!
//! A [`Subset`] is a bit set keyed by position in a [`Context`](crate::Context)
//! ordering. Trailing zero blocks are always trimmed, so structural equality is
//! set equality.

use smallvec::SmallVec;
use std::fmt;

const BITS: usize = u64::BITS as usize;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    blocks: SmallVec<[u64; 1]>,
}

impl Subset {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The set `{0, 1, .., len - 1}`.
    pub fn full(len: usize) -> Self {
        let mut blocks: SmallVec<[u64; 1]> = SmallVec::new();
        let whole = len / BITS;
        let rest = len % BITS;
        blocks.extend(std::iter::repeat_n(u64::MAX, whole));
        if rest > 0 {
            blocks.push((1u64 << rest) - 1);
        }
        Self { blocks }
    }

    /// Bit `i` of `mask` becomes member `i`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = Self::empty();
        if mask != 0 {
            s.blocks.push(mask);
        }
        s
    }

    pub fn insert(&mut self, index: usize) {
        let (block, bit) = (index / BITS, index % BITS);
        if self.blocks.len() <= block {
            self.blocks.resize(block + 1, 0);
        }
        self.blocks[block] |= 1 << bit;
    }

    pub fn contains(&self, index: usize) -> bool {
        self.blocks
            .get(index / BITS)
            .is_some_and(|b| b & (1 << (index % BITS)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.blocks.len() <= other.blocks.len()
            && self
                .blocks
                .iter()
                .zip(&other.blocks)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let (long, short) = if self.blocks.len() >= other.blocks.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut blocks = long.blocks.clone();
        for (b, s) in blocks.iter_mut().zip(&short.blocks) {
            *b |= s;
        }
        Subset { blocks }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut blocks: SmallVec<[u64; 1]> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & b)
            .collect();
        trim(&mut blocks);
        Subset { blocks }
    }

    pub fn union_with(&mut self, other: &Subset) {
        if self.blocks.len() < other.blocks.len() {
            self.blocks.resize(other.blocks.len(), 0);
        }
        for (b, o) in self.blocks.iter_mut().zip(&other.blocks) {
            *b |= o;
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * BITS + bit)
            })
        })
    }

    /// One past the largest member, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        match self.blocks.last() {
            Some(b) => (self.blocks.len() - 1) * BITS + (BITS - b.leading_zeros() as usize),
            None => 0,
        }
    }
}

fn trim(blocks: &mut SmallVec<[u64; 1]>) {
    while blocks.last() == Some(&0) {
        blocks.pop();
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

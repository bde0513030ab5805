//! Fixed-width vertex bitsets.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

const WORDS: usize = 4;

/// Largest number of vertices a [`VertexSet`] (and therefore a graph) can hold.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A set of vertex indices below [`MAX_VERTICES`], stored as a bitset.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet([u64; WORDS]);

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet([0; WORDS])
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        let mut s = Self::new();
        for (w, word) in s.0.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.0[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter { words: self.0, word: 0 }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + w.trailing_zeros() as usize);
            }
            self.word += 1;
        }
        None
    }
}

macro_rules! bitop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident, |$a:ident, $b:ident| $e:expr) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $method(self, rhs: VertexSet) -> VertexSet {
                let mut out = [0u64; WORDS];
                for i in 0..WORDS {
                    let ($a, $b) = (self.0[i], rhs.0[i]);
                    out[i] = $e;
                }
                VertexSet(out)
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $amethod(&mut self, rhs: VertexSet) {
                *self = $tr::$method(*self, rhs);
            }
        }
    };
}

bitop!(BitAnd, bitand, BitAndAssign, bitand_assign, |a, b| a & b);
bitop!(BitOr, bitor, BitOrAssign, bitor_assign, |a, b| a | b);
bitop!(Sub, sub, SubAssign, sub_assign, |a, b| a & !b);

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_iter() {
        for n in [0, 1, 63, 64, 65, 200, 256] {
            let s = VertexSet::full(n);
            assert_eq!(s.len(), n);
            assert!(s.iter().eq(0..n));
        }
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1, 5, 70, 130].into_iter().collect();
        let b: VertexSet = [5, 130, 255].into_iter().collect();
        assert_eq!((a & b).iter().collect::<Vec<_>>(), vec![5, 130]);
        assert_eq!((a - b).iter().collect::<Vec<_>>(), vec![1, 70]);
        assert_eq!((a | b).len(), 5);
        assert!(a.intersects(&b));
        assert!((a & b).is_subset(&a));
        assert_eq!(b.first(), Some(5));
        assert_eq!(VertexSet::new().first(), None);
    }
}

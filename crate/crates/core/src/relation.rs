//! Square boolean relations stored as packed bit rows.

use std::fmt;

use crate::error::{Error, OrderViolation, Result};
use crate::lattice::Element;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Indices of the set bits of a packed row, ascending.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            }
        })
    })
}

pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Relation {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for x in 0..n {
            r.insert(x, x);
        }
        r
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(n);
        for x in 0..n {
            for y in 0..n {
                if f(x, y) {
                    r.insert(x, y);
                }
            }
        }
        r
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut r = Self::empty(n);
        for &(x, y) in pairs {
            for i in [x, y] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, len: n });
                }
            }
            r.insert(x, y);
        }
        Ok(r)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize, y: usize) {
        self.bits[x * self.words + y / 64] |= 1 << (y % 64);
    }

    /// Packed row of `x`: all `y` with `x R y`.
    #[inline]
    pub fn row(&self, x: usize) -> &[u64] {
        &self.bits[x * self.words..(x + 1) * self.words]
    }

    pub fn transpose(&self) -> Relation {
        let mut t = Self::empty(self.n);
        for x in 0..self.n {
            for y in ones(self.row(x)) {
                t.insert(y, x);
            }
        }
        t
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| ones(self.row(x)).map(move |y| (x, y)))
    }

    pub fn reflexive_transitive_closure(&self) -> Relation {
        let mut r = self.clone();
        for x in 0..self.n {
            r.insert(x, x);
        }
        // Warshall over packed rows
        for k in 0..self.n {
            let row_k = r.row(k).to_vec();
            for i in 0..self.n {
                if r.contains(i, k) {
                    let start = i * r.words;
                    for (w, bits) in row_k.iter().enumerate() {
                        r.bits[start + w] |= bits;
                    }
                }
            }
        }
        r
    }

    fn reflexivity_violation(&self) -> Option<OrderViolation> {
        (0..self.n)
            .find(|&x| !self.contains(x, x))
            .map(OrderViolation::Reflexivity)
    }

    fn transitivity_violation(&self) -> Option<OrderViolation> {
        for x in 0..self.n {
            for y in ones(self.row(x)) {
                if !is_subset(self.row(y), self.row(x)) {
                    let z = ones(self.row(y))
                        .find(|&z| !self.contains(x, z))
                        .expect("non-subset row has a witness");
                    return Some(OrderViolation::Transitivity(x, y, z));
                }
            }
        }
        None
    }

    pub fn check_preorder(&self) -> Result<()> {
        match self
            .reflexivity_violation()
            .or_else(|| self.transitivity_violation())
        {
            Some(v) => Err(Error::NotAPreorder(v)),
            None => Ok(()),
        }
    }

    pub fn check_partial_order(&self) -> Result<()> {
        if let Some(v) = self.reflexivity_violation() {
            return Err(Error::NotAPartialOrder(v));
        }
        for x in 0..self.n {
            for y in ones(self.row(x)) {
                if y != x && self.contains(y, x) {
                    return Err(Error::NotAPartialOrder(OrderViolation::Antisymmetry(
                        x.min(y),
                        x.max(y),
                    )));
                }
            }
        }
        match self.transitivity_violation() {
            Some(v) => Err(Error::NotAPartialOrder(v)),
            None => Ok(()),
        }
    }

    pub(crate) fn element_count_fits(n: usize) -> Result<()> {
        const LIMIT: usize = 1 << 16;
        if n > LIMIT {
            return Err(Error::SizeLimitExceeded {
                requested: n,
                limit: LIMIT,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.pairs().map(|(x, y): (Element, Element)| (x, y)))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_chain_generators() {
        let r = Relation::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let c = r.reflexive_transitive_closure();
        assert!(c.contains(0, 2));
        assert!(c.contains(1, 1));
        assert!(!c.contains(2, 0));
        c.check_partial_order().unwrap();
    }

    #[test]
    fn order_violations_are_named() {
        let r = Relation::from_pairs(2, &[(0, 0)]).unwrap();
        assert_eq!(
            r.check_partial_order(),
            Err(Error::NotAPartialOrder(OrderViolation::Reflexivity(1)))
        );
        let r = Relation::from_pairs(2, &[(0, 0), (1, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(
            r.check_partial_order(),
            Err(Error::NotAPartialOrder(OrderViolation::Antisymmetry(0, 1)))
        );
        r.check_preorder().unwrap();
        let r = Relation::from_pairs(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(
            r.check_partial_order(),
            Err(Error::NotAPartialOrder(OrderViolation::Transitivity(
                0, 1, 2
            )))
        );
    }

    #[test]
    fn wide_rows_span_words() {
        let n = 130;
        let r = Relation::from_fn(n, |x, y| x <= y);
        assert!(r.contains(3, 129));
        assert_eq!(count(r.row(0)), n);
        assert_eq!(ones(r.row(128)).collect::<Vec<_>>(), vec![128, 129]);
        r.check_partial_order().unwrap();
        assert_eq!(r.transpose().transpose(), r);
    }

    #[test]
    fn out_of_range_pair() {
        assert_eq!(
            Relation::from_pairs(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
    }
}

//! Permutations of `{0, …, n-1}`.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// A bijection of `{0, …, n-1}`, stored as its image list: `μ(i) = map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            map: (0..n).collect(),
        }
    }

    /// `i ↦ n-1-i`.
    pub fn reversal(n: usize) -> Self {
        Perm {
            map: (0..n).rev().collect(),
        }
    }

    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &x in &map {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, size: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidInput(format!(
                    "{map:?} is not a permutation: {x} repeats"
                )));
            }
        }
        Ok(Perm { map })
    }

    /// The transposition of `a` and `b` on `n` points.
    pub fn swap(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange {
                index: a.max(b),
                size: n,
            });
        }
        let mut p = Perm::identity(n);
        p.map.swap(a, b);
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "cannot compose permutations of {} and {} points",
                self.len(),
                other.len()
            )));
        }
        Ok(Perm {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x] = i;
        }
        Perm { map: inv }
    }

    /// The permutation matrix `P(μ)` with units in positions `(μ(i), i)`.
    pub fn matrix(&self) -> Result<BitMatrix> {
        let n = self.len();
        let mut p = BitMatrix::zeros(n, n)?;
        for (i, &x) in self.map.iter().enumerate() {
            p.set(x, i, true);
        }
        Ok(p)
    }

    /// All `n!` permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        (0..n).permutations(n).map(|map| Perm { map })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.map.iter().join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::new(vec![0, 2]).is_err());
        assert!(Perm::new(vec![1, 0]).is_ok());
    }

    #[test]
    fn compose_and_inverse() {
        let a = Perm::new(vec![1, 2, 0]).unwrap();
        let b = Perm::new(vec![0, 2, 1]).unwrap();
        let ab = a.compose(&b).unwrap();
        for i in 0..3 {
            assert_eq!(ab.apply(i), a.apply(b.apply(i)));
        }
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn enumerates_factorial_many() {
        assert_eq!(Perm::all(0).count(), 1);
        assert_eq!(Perm::all(4).count(), 24);
        assert!(Perm::all(3).next().unwrap().is_identity());
    }

    #[test]
    fn permutation_matrix_positions() {
        let p = Perm::new(vec![2, 0, 1]).unwrap().matrix().unwrap();
        assert!(p.get(2, 0) && p.get(0, 1) && p.get(1, 2));
        assert_eq!(p.to_string(), "010,001,100");
    }
}

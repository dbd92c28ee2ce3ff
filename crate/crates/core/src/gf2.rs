//! Dense matrices over GF(2) with one machine word per row, together with the
//! exact integer routines (determinants, characteristic polynomials) used to
//! read the same 0/1 matrices over ℤ.
//!
//! Entry `(i, j)` is bit `j` of row `i`. Row and column counts are between 1
//! and [`MAX_DIM`].
//!
//! # Conjugation convention
//!
//! [`BitMatrix::conjugate_by_perm`] returns `P(μ)⁻¹ · M · P(μ)`, whose entry
//! `(i, j)` is `M(μ(i), μ(j))`. It is a right action:
//! `conj(conj(M, μ), ν) = conj(M, μ ∘ ν)` with `(μ ∘ ν)(i) = μ(ν(i))`.
//!
//! # Text form
//!
//! One matrix per line, rows joined by `,`, row `i` written as `n_cols`
//! characters where character `j` is entry `(i, j)`: `110,011,101`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Largest row or column count a [`BitMatrix`] can hold.
pub const MAX_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<u64>,
}

#[inline]
fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// Whether the given rows are linearly independent over GF(2).
///
/// Elimination without row swaps: each row's lowest set bit is its pivot and
/// is cleared from every later row.
#[inline]
pub(crate) fn rows_independent(rows: &mut [u64]) -> bool {
    for i in 0..rows.len() {
        let v = rows[i];
        if v == 0 {
            return false;
        }
        let pivot = v & v.wrapping_neg();
        for r in &mut rows[i + 1..] {
            if *r & pivot != 0 {
                *r ^= v;
            }
        }
    }
    true
}

/// Determinant of the principal submatrix on the index set `subset` (a
/// bitmask), computed without compressing columns: the masked rows are
/// independent iff the `|S| × |S|` submatrix is invertible.
#[inline]
pub(crate) fn principal_minor_bits(rows: &[u64], subset: u64) -> bool {
    let mut buf = [0u64; MAX_DIM];
    let mut k = 0;
    let mut s = subset;
    while s != 0 {
        let i = s.trailing_zeros() as usize;
        buf[k] = rows[i] & subset;
        k += 1;
        s &= s - 1;
    }
    rows_independent(&mut buf[..k])
}

/// First non-empty index set, in increasing bitmask order, whose principal
/// minor vanishes.
#[inline]
pub(crate) fn first_vanishing_minor(rows: &[u64]) -> Option<u64> {
    let n = rows.len();
    // 1×1 minors are the diagonal.
    for (i, &r) in rows.iter().enumerate() {
        if (r >> i) & 1 == 0 {
            return Some(1 << i);
        }
    }
    (1..=low_mask(n)).find(|&s| !principal_minor_bits(rows, s))
}

fn mask_from_subset(subset: &[usize], n: usize) -> Result<u64> {
    if subset.is_empty() {
        return Err(Error::InvalidInput("empty index set".into()));
    }
    let mut mask = 0u64;
    for &i in subset {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, size: n });
        }
        mask |= 1 << i;
    }
    Ok(mask)
}

pub(crate) fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| (mask >> i) & 1 == 1).collect()
}

impl BitMatrix {
    fn check_dims(n_rows: usize, n_cols: usize) -> Result<()> {
        if n_rows == 0 || n_cols == 0 || n_rows > MAX_DIM || n_cols > MAX_DIM {
            return Err(Error::Dimension(format!(
                "{n_rows}×{n_cols} is outside 1..={MAX_DIM} in some dimension"
            )));
        }
        Ok(())
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Result<Self> {
        Self::check_dims(n_rows, n_cols)?;
        Ok(BitMatrix {
            n_rows,
            n_cols,
            rows: vec![0; n_rows],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for (i, r) in m.rows.iter_mut().enumerate() {
            *r = 1 << i;
        }
        Ok(m)
    }

    /// Builds a matrix from bit rows; bits at or above `n_cols` must be clear.
    pub fn from_rows(n_cols: usize, rows: Vec<u64>) -> Result<Self> {
        Self::check_dims(rows.len(), n_cols)?;
        let mask = low_mask(n_cols);
        if let Some(i) = rows.iter().position(|r| r & !mask != 0) {
            return Err(Error::Dimension(format!(
                "row {i} has bits beyond column {n_cols}"
            )));
        }
        Ok(BitMatrix {
            n_rows: rows.len(),
            n_cols,
            rows,
        })
    }

    /// Builds a matrix from nested 0/1 vectors.
    pub fn from_bits(bits: &[Vec<u8>]) -> Result<Self> {
        let n_cols = bits.first().map_or(0, Vec::len);
        let mut rows = Vec::with_capacity(bits.len());
        for (i, row) in bits.iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    row.len()
                )));
            }
            let mut r = 0u64;
            for (j, &b) in row.iter().enumerate() {
                match b {
                    0 => {}
                    1 => r |= 1 << j,
                    _ => return Err(Error::InvalidInput(format!("entry {b} is not a bit"))),
                }
            }
            rows.push(r);
        }
        Self::from_rows(n_cols, rows)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.n_rows && j < self.n_cols,
            "entry ({i},{j}) out of range"
        );
        (self.rows[i] >> j) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        assert!(
            i < self.n_rows && j < self.n_cols,
            "entry ({i},{j}) out of range"
        );
        if bit {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.n_rows)
        } else {
            Err(Error::Dimension(format!(
                "expected a square matrix, got {}×{}",
                self.n_rows, self.n_cols
            )))
        }
    }

    /// Determinant over GF(2): `true` iff the matrix is invertible.
    pub fn det_gf2(&self) -> Result<bool> {
        self.require_square()?;
        let mut rows = self.rows.clone();
        Ok(rows_independent(&mut rows))
    }

    /// Determinant over GF(2) of the principal submatrix on `subset`.
    pub fn principal_minor_gf2(&self, subset: &[usize]) -> Result<bool> {
        let n = self.require_square()?;
        let mask = mask_from_subset(subset, n)?;
        Ok(principal_minor_bits(&self.rows, mask))
    }

    /// Whether all `2ⁿ - 1` principal minors equal 1, i.e. membership in `M(n)`.
    /// Index sets are visited in increasing bitmask order and the scan stops at
    /// the first vanishing minor.
    pub fn all_principal_minors_one(&self) -> Result<bool> {
        self.require_square()?;
        Ok(first_vanishing_minor(&self.rows).is_none())
    }

    /// The first vanishing principal minor's index set, if any.
    pub fn vanishing_principal_minor(&self) -> Result<Option<Vec<usize>>> {
        self.require_square()?;
        Ok(first_vanishing_minor(&self.rows).map(mask_to_indices))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut rows = vec![0u64; self.n_cols];
        for (i, &r) in self.rows.iter().enumerate() {
            let mut bits = r;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                rows[j] |= 1 << i;
                bits &= bits - 1;
            }
        }
        BitMatrix {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            rows,
        }
    }

    /// Inverse over GF(2) by Gauss–Jordan elimination on `(M | E)`.
    pub fn inverse_gf2(&self) -> Result<BitMatrix> {
        let n = self.require_square()?;
        let mut a = self.rows.clone();
        let mut inv: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for col in 0..n {
            let bit = 1u64 << col;
            let pivot = (col..n).find(|&r| a[r] & bit != 0).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r] & bit != 0 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Ok(BitMatrix {
            n_rows: n,
            n_cols: n,
            rows: inv,
        })
    }

    /// Product over GF(2).
    pub fn mul_gf2(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.n_cols != rhs.n_rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}×{} by {}×{}",
                self.n_rows, self.n_cols, rhs.n_rows, rhs.n_cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut acc = 0u64;
                let mut bits = r;
                while bits != 0 {
                    acc ^= rhs.rows[bits.trailing_zeros() as usize];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            n_rows: self.n_rows,
            n_cols: rhs.n_cols,
            rows,
        })
    }

    /// Columns `idx[0], idx[1], …` in that order.
    pub fn select_columns(&self, idx: &[usize]) -> Result<BitMatrix> {
        if let Some(&j) = idx.iter().find(|&&j| j >= self.n_cols) {
            return Err(Error::IndexOutOfRange {
                index: j,
                size: self.n_cols,
            });
        }
        Self::check_dims(self.n_rows, idx.len())?;
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                idx.iter()
                    .enumerate()
                    .fold(0u64, |acc, (k, &j)| acc | (((r >> j) & 1) << k))
            })
            .collect();
        Ok(BitMatrix {
            n_rows: self.n_rows,
            n_cols: idx.len(),
            rows,
        })
    }

    /// `(self | rhs)`.
    pub fn hstack(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.n_rows != rhs.n_rows {
            return Err(Error::Dimension(format!(
                "cannot place {}×{} beside {}×{}",
                self.n_rows, self.n_cols, rhs.n_rows, rhs.n_cols
            )));
        }
        Self::check_dims(self.n_rows, self.n_cols + rhs.n_cols)?;
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(&a, &b)| a | (b << self.n_cols))
            .collect();
        Ok(BitMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols + rhs.n_cols,
            rows,
        })
    }

    /// `P(μ)⁻¹ · M · P(μ)`: entry `(i, j)` of the result is `M(μ(i), μ(j))`.
    pub fn conjugate_by_perm(&self, mu: &Perm) -> Result<BitMatrix> {
        let n = self.require_square()?;
        if mu.len() != n {
            return Err(Error::Dimension(format!(
                "permutation of {} points applied to a {n}×{n} matrix",
                mu.len()
            )));
        }
        Ok(BitMatrix {
            n_rows: n,
            n_cols: n,
            rows: conjugate_rows(&self.rows, mu.as_slice()),
        })
    }

    /// Unit diagonal and nothing below it.
    pub fn is_unipotent_upper_triangular(&self) -> bool {
        self.is_square()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, &r)| r & low_mask(i + 1) == 1 << i)
    }

    /// Row-major packing with entry `(0, 0)` as the most significant bit, so
    /// that integer order agrees with lexicographic order of the text form.
    /// `None` when the matrix has more than 64 entries.
    pub fn to_key(&self) -> Option<u64> {
        let c = self.n_cols;
        if self.n_rows * c > 64 {
            return None;
        }
        Some(self.rows.iter().fold(0u64, |key, &r| {
            let rev = r.reverse_bits() >> (64 - c);
            if c == 64 {
                rev
            } else {
                (key << c) | rev
            }
        }))
    }

    /// Inverse of [`BitMatrix::to_key`].
    pub fn from_key(n_rows: usize, n_cols: usize, key: u64) -> Result<BitMatrix> {
        Self::check_dims(n_rows, n_cols)?;
        if n_rows * n_cols > 64 {
            return Err(Error::Dimension(format!(
                "{n_rows}×{n_cols} does not fit a 64-bit key"
            )));
        }
        let rows = (0..n_rows)
            .map(|i| {
                let shift = (n_rows - 1 - i) * n_cols;
                let rev = (key >> shift) & low_mask(n_cols);
                rev.reverse_bits() >> (64 - n_cols)
            })
            .collect();
        Ok(BitMatrix {
            n_rows,
            n_cols,
            rows,
        })
    }

    fn to_int_rows(&self, subset: &[usize]) -> Vec<Vec<BigInt>> {
        subset
            .iter()
            .map(|&i| {
                subset
                    .iter()
                    .map(|&j| BigInt::from(u8::from(self.get(i, j))))
                    .collect()
            })
            .collect()
    }

    /// Determinant over ℤ of the principal submatrix on `subset`, reading
    /// entries as the integers 0 and 1.
    pub fn principal_minor_int(&self, subset: &[usize]) -> Result<BigInt> {
        let n = self.require_square()?;
        mask_from_subset(subset, n)?;
        Ok(bareiss_det(self.to_int_rows(subset)))
    }

    /// Coefficients of `det(x·E - M)` over ℤ, leading coefficient first.
    pub fn char_poly_int(&self) -> Result<Vec<BigInt>> {
        let n = self.require_square()?;
        let all: Vec<usize> = (0..n).collect();
        Ok(faddeev_leverrier(&self.to_int_rows(&all)))
    }
}

/// Entry `(i, j)` of the result is entry `(μ(i), μ(j))` of the input.
#[inline]
pub(crate) fn conjugate_rows(rows: &[u64], mu: &[usize]) -> Vec<u64> {
    mu.iter()
        .map(|&src| {
            let r = rows[src];
            mu.iter()
                .enumerate()
                .fold(0u64, |acc, (j, &mj)| acc | (((r >> mj) & 1) << j))
        })
        .collect()
}

/// Fraction-free (Bareiss) elimination; every division is exact.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Characteristic polynomial by the Faddeev–LeVerrier recursion; the division
/// by `k` at step `k` is exact for integer matrices.
fn faddeev_leverrier(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mul = |x: &[Vec<BigInt>], y: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &x[i][k] * &y[k][j]).sum())
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![BigInt::one()];
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{k-1}·E
        let mut next = mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[k - 1];
        }
        let am = mul(a, &next);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs.push(-q);
        m = next;
    }
    coeffs
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            for j in 0..self.n_cols {
                f.write_str(if (r >> j) & 1 == 1 { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl FromStr for BitMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .split(',')
            .map(|row| {
                row.chars()
                    .map(|c| match c {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        _ => Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BitMatrix::from_bits(&bits).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> BitMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn determinants() {
        assert!(BitMatrix::identity(3).unwrap().det_gf2().unwrap());
        assert!(!m("11,11").det_gf2().unwrap());
        assert!(m("11,01").det_gf2().unwrap());
        assert!(m("110,011").det_gf2().is_err());
    }

    #[test]
    fn principal_minors() {
        let e = BitMatrix::identity(4).unwrap();
        assert!(e.principal_minor_gf2(&[0, 2, 3]).unwrap());
        assert!(!m("11,11").principal_minor_gf2(&[0, 1]).unwrap());
        // cofactor expansion: 1·(1·1 - 1·0) - 1·(0·1 - 1·1) + 0 = 1 + 1 = 0 mod 2
        assert!(!m("110,011,101").principal_minor_gf2(&[0, 1, 2]).unwrap());
        assert!(m("110,011,101").principal_minor_gf2(&[0, 1]).unwrap());
        assert!(matches!(
            e.principal_minor_gf2(&[4]),
            Err(Error::IndexOutOfRange { index: 4, .. })
        ));
        assert!(e.principal_minor_gf2(&[]).is_err());
    }

    #[test]
    fn exactly_three_two_by_two_matrices_in_m2() {
        let members: Vec<String> = (0..16u64)
            .map(|k| BitMatrix::from_rows(2, vec![k & 3, k >> 2]).unwrap())
            .filter(|b| b.all_principal_minors_one().unwrap())
            .map(|b| b.to_string())
            .collect();
        let mut expected = vec!["10,01", "11,01", "10,11"];
        expected.sort();
        let mut got = members.clone();
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(
            m("11,11").vanishing_principal_minor().unwrap(),
            Some(vec![0, 1])
        );
    }

    #[test]
    fn inverse_and_product() {
        let e = BitMatrix::identity(3).unwrap();
        assert_eq!(e.inverse_gf2().unwrap(), e);
        assert_eq!(m("11,01").inverse_gf2().unwrap(), m("11,01"));
        assert_eq!(m("11,11").inverse_gf2(), Err(Error::Singular));
        let a = m("1011,0110,0100,0001");
        assert_eq!(
            a.mul_gf2(&a.inverse_gf2().unwrap()).unwrap(),
            BitMatrix::identity(4).unwrap()
        );
        assert_eq!(a.mul_gf2(&BitMatrix::identity(4).unwrap()).unwrap(), a);
        assert!(a.mul_gf2(&e).is_err());
    }

    #[test]
    fn column_selection_and_stacking() {
        let a = m("101,011");
        assert_eq!(a.select_columns(&[0, 1, 2]).unwrap(), a);
        assert_eq!(a.select_columns(&[2, 0]).unwrap(), m("11,10"));
        assert!(a.select_columns(&[3]).is_err());
        let lam = BitMatrix::identity(2).unwrap().hstack(&m("11,01")).unwrap();
        assert_eq!(lam.to_string(), "1011,0101");
        assert_eq!(
            lam.select_columns(&[0, 1]).unwrap(),
            BitMatrix::identity(2).unwrap()
        );
    }

    #[test]
    fn conjugation() {
        let swap = Perm::swap(2, 0, 1).unwrap();
        assert_eq!(m("11,01").conjugate_by_perm(&swap).unwrap(), m("10,11"));
        let a = m("110,011,101");
        assert_eq!(a.conjugate_by_perm(&Perm::identity(3)).unwrap(), a);
        // conj(conj(M, μ), ν) = conj(M, μ∘ν)
        for mu in Perm::all(3) {
            for nu in Perm::all(3) {
                let lhs = a
                    .conjugate_by_perm(&mu)
                    .unwrap()
                    .conjugate_by_perm(&nu)
                    .unwrap();
                let rhs = a.conjugate_by_perm(&mu.compose(&nu).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                // agrees with the explicit matrix product P⁻¹ M P
                let p = mu.matrix().unwrap();
                let prod = p
                    .inverse_gf2()
                    .unwrap()
                    .mul_gf2(&a)
                    .unwrap()
                    .mul_gf2(&p)
                    .unwrap();
                assert_eq!(a.conjugate_by_perm(&mu).unwrap(), prod);
            }
        }
    }

    #[test]
    fn integer_minors_and_char_poly() {
        let e = BitMatrix::identity(3).unwrap();
        for s in [vec![0], vec![1, 2], vec![0, 1, 2]] {
            assert_eq!(e.principal_minor_int(&s).unwrap(), BigInt::one());
        }
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(e.char_poly_int().unwrap(), ints(&[1, -3, 3, -1]));
        assert_eq!(m("11,01").char_poly_int().unwrap(), ints(&[1, -2, 1]));
        assert_eq!(
            m("11,11").principal_minor_int(&[0, 1]).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            m("110,011,101").principal_minor_int(&[0, 1, 2]).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            m("011,101,110").principal_minor_int(&[0, 1, 2]).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(m("11,11").char_poly_int().unwrap(), ints(&[1, -2, 0]));
    }

    #[test]
    fn keys_follow_text_order() {
        let a = m("10,11");
        let b = m("11,01");
        assert!(a.to_key().unwrap() < b.to_key().unwrap());
        assert!(a.to_string() < b.to_string());
        assert_eq!(BitMatrix::from_key(2, 2, b.to_key().unwrap()).unwrap(), b);
        assert_eq!(m("1").to_key(), Some(1));
    }

    #[test]
    fn text_form_errors() {
        assert!("10,1".parse::<BitMatrix>().is_err());
        assert!("1x".parse::<BitMatrix>().is_err());
        assert!("".parse::<BitMatrix>().is_err());
        assert_eq!(m("100,010,001"), BitMatrix::identity(3).unwrap());
    }

    #[test]
    fn unipotent_check() {
        assert!(m("11,01").is_unipotent_upper_triangular());
        assert!(!m("10,11").is_unipotent_upper_triangular());
        assert!(!m("01,01").is_unipotent_upper_triangular());
    }
}

//! Reduced matrices over products of simplices and the map `ψ` to DAGs.

use std::ops::Range;

use num_bigint::BigUint;

use super::{check_shape, PolytopeSpec, ReducedMatrix};
use crate::caps::Caps;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::gf2::{first_vanishing_minor, BitMatrix};
use crate::parallel::Workers;

/// Row layout shared by the product routines.
#[derive(Debug, Clone)]
struct Blocks {
    dims: Vec<usize>,
    offsets: Vec<usize>,
    row_factor: Vec<usize>,
}

impl Blocks {
    fn new(spec: &PolytopeSpec) -> Self {
        Blocks {
            dims: spec.factor_dims(),
            offsets: spec.row_offsets(),
            row_factor: spec.row_factors(),
        }
    }

    /// First selection `(k₁, …, k_l)` whose scalar `l × l` matrix has a
    /// vanishing principal minor. Row `j` of that matrix is row `k_j` of
    /// block row `j`.
    fn first_singular_selection(&self, rows: &[u64]) -> Option<Vec<usize>> {
        let l = self.dims.len();
        let mut pick = vec![0usize; l];
        let mut scalar = vec![0u64; l];
        loop {
            for j in 0..l {
                scalar[j] = rows[self.offsets[j] + pick[j]];
            }
            if first_vanishing_minor(&scalar).is_some() {
                return Some(pick);
            }
            let mut j = 0;
            loop {
                if j == l {
                    return None;
                }
                pick[j] += 1;
                if pick[j] < self.dims[j] {
                    break;
                }
                pick[j] = 0;
                j += 1;
            }
        }
    }
}

/// Whether every scalar matrix `Λ_{k₁…k_l}` built from `Λ*` (shape `n × l`)
/// has all principal minors equal to 1.
pub fn nonsingular_product_check(mat: &BitMatrix, spec: &PolytopeSpec) -> Result<bool> {
    spec.validate()?;
    check_shape(mat, spec.dim(), spec.factor_count(), "reduced matrix")?;
    Ok(Blocks::new(spec)
        .first_singular_selection(mat.rows())
        .is_none())
}

/// `ψ(Λ*)`: edge `(i, j)`, `i ≠ j`, iff the vector block `(i, j)` is nonzero.
/// Valid input always yields an acyclic digraph.
pub fn psi(reduced: &ReducedMatrix) -> Digraph {
    let spec = reduced.spec();
    let l = spec.factor_count();
    let mut g = Digraph::empty(l).expect("factor count within bounds");
    for (&row, i) in reduced.matrix().rows().iter().zip(spec.row_factors()) {
        let mut bits = row & !(1 << i);
        while bits != 0 {
            g.add_edge(i, bits.trailing_zeros() as usize)
                .expect("indices in range");
            bits &= bits - 1;
        }
    }
    debug_assert!(g.is_acyclic());
    g
}

/// Number of free bits per candidate: every entry outside the diagonal
/// blocks, `n · (l - 1)`.
pub fn product_free_bits(spec: &PolytopeSpec) -> usize {
    spec.dim() * (spec.factor_count() - 1)
}

/// Valid reduced matrices among candidates in an index range.
///
/// Diagonal blocks are fixed to all-ones vectors, which every valid matrix
/// has (they are 1×1 minors of the scalar matrices). Candidate `k` puts bits
/// `(l-1)·r .. (l-1)·(r+1)` of `k` into row `r`, skipping the column of the
/// row's own factor. Every candidate is checked in full.
#[derive(Debug, Clone)]
pub struct ProductRange {
    spec: PolytopeSpec,
    blocks: Blocks,
    candidates: Range<u64>,
}

impl Iterator for ProductRange {
    type Item = ReducedMatrix;

    fn next(&mut self) -> Option<ReducedMatrix> {
        let l = self.blocks.dims.len();
        let n = self.blocks.row_factor.len();
        let mut rows = vec![0u64; n];
        for k in self.candidates.by_ref() {
            fill_candidate(&self.blocks.row_factor, l, k, &mut rows);
            if self.blocks.first_singular_selection(&rows).is_none() {
                let mat = BitMatrix::from_rows(l, rows).expect("shape within bounds");
                return Some(ReducedMatrix::new_unchecked(self.spec.clone(), mat));
            }
        }
        None
    }
}

#[inline]
fn fill_candidate(row_factor: &[usize], l: usize, k: u64, rows: &mut [u64]) {
    let w = l - 1;
    let chunk_mask = (1u64 << w) - 1;
    for (r, (row, &f)) in rows.iter_mut().zip(row_factor).enumerate() {
        let chunk = (k >> (w * r)) & chunk_mask;
        let low = chunk & ((1u64 << f) - 1);
        let high = (chunk >> f) << (f + 1);
        *row = low | (1 << f) | high;
    }
}

fn candidate_total(spec: &PolytopeSpec, caps: &Caps) -> Result<u64> {
    spec.validate()?;
    let bits = product_free_bits(spec);
    Caps::check("free candidate bits", bits, caps.product_free_bits.min(63))?;
    Ok(1u64 << bits)
}

/// All valid reduced matrices over `spec`, in increasing candidate order.
pub fn enumerate_reduced_product(spec: &PolytopeSpec, caps: &Caps) -> Result<ProductRange> {
    let total = candidate_total(spec, caps)?;
    product_candidates_in_range(spec, 0..total)
}

pub fn product_candidates_in_range(
    spec: &PolytopeSpec,
    candidates: Range<u64>,
) -> Result<ProductRange> {
    spec.validate()?;
    let bits = product_free_bits(spec);
    if bits >= 64 || candidates.end > 1u64 << bits {
        return Err(Error::InvalidInput(format!(
            "candidate range {candidates:?} exceeds 2^{bits}"
        )));
    }
    Ok(ProductRange {
        spec: spec.clone(),
        blocks: Blocks::new(spec),
        candidates,
    })
}

/// Number of valid reduced matrices, i.e. D-J classes, by exhaustive search.
pub fn count_reduced_product(
    spec: &PolytopeSpec,
    caps: &Caps,
    workers: &Workers,
) -> Result<BigUint> {
    let total = candidate_total(spec, caps)?;
    let plan = workers.plan(total);
    let count = workers.try_map_reduce(
        &plan,
        |r| Ok(product_candidates_in_range(spec, r)?.count() as u64),
        0,
        |a, b| a + b,
    )?;
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(d: &[usize]) -> PolytopeSpec {
        PolytopeSpec::simplex_product(d.to_vec()).unwrap()
    }

    #[test]
    fn cube_case_is_the_principal_minor_test() {
        let cube = PolytopeSpec::cube(3).unwrap();
        for k in 0..512u64 {
            let m = BitMatrix::from_rows(3, vec![k & 7, (k >> 3) & 7, k >> 6]).unwrap();
            assert_eq!(
                nonsingular_product_check(&m, &cube).unwrap(),
                m.all_principal_minors_one().unwrap()
            );
        }
    }

    #[test]
    fn counts_over_small_products() {
        let caps = Caps::default();
        assert_eq!(
            enumerate_reduced_product(&product(&[1, 1]), &caps)
                .unwrap()
                .count(),
            3
        );
        assert_eq!(
            enumerate_reduced_product(&product(&[1, 2]), &caps)
                .unwrap()
                .count(),
            5
        );
        assert_eq!(
            enumerate_reduced_product(&product(&[2, 2]), &caps)
                .unwrap()
                .count(),
            7
        );
        assert_eq!(
            enumerate_reduced_product(&product(&[3]), &caps)
                .unwrap()
                .count(),
            1
        );
    }

    #[test]
    fn exhaustive_filter_agrees_on_prism() {
        // all 2^6 candidates of shape 3×2 over Δ¹×Δ²
        let spec = product(&[1, 2]);
        let passing = (0..64u64)
            .filter(|&k| {
                let m = BitMatrix::from_rows(2, vec![k & 3, (k >> 2) & 3, k >> 4]).unwrap();
                nonsingular_product_check(&m, &spec).unwrap()
            })
            .count();
        assert_eq!(passing, 5);
    }

    #[test]
    fn psi_examples() {
        let spec = product(&[1, 2]);
        let diag = ReducedMatrix::new(spec.clone(), "10,01,01".parse().unwrap()).unwrap();
        assert_eq!(psi(&diag), Digraph::empty(2).unwrap());
        let lower = ReducedMatrix::new(spec, "10,11,01".parse().unwrap()).unwrap();
        assert_eq!(psi(&lower), Digraph::from_edges(2, &[(1, 0)]).unwrap());
        let cube = PolytopeSpec::cube(3).unwrap();
        for b in crate::cover::enumerate_mn(3, &Caps::default()).unwrap() {
            let red = ReducedMatrix::new(cube.clone(), b.clone()).unwrap();
            assert_eq!(psi(&red), crate::cover::phi_inv(&b).unwrap());
        }
    }

    #[test]
    fn shape_and_cap_errors() {
        let spec = product(&[1, 2]);
        assert!(nonsingular_product_check(&BitMatrix::identity(2).unwrap(), &spec).is_err());
        let tight = Caps {
            product_free_bits: 2,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_reduced_product(&spec, &tight),
            Err(Error::CapExceeded { .. })
        ));
    }
}

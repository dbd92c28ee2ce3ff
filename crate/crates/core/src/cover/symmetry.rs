//! The facet-symmetry group `Aut(F(Iⁿ))` and brute-force orbit counts over
//! all characteristic matrices of the cube.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use num_bigint::BigUint;

use super::{rows_characteristic, CharMatrix, PolytopeSpec};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::parallel::Workers;
use crate::perm::Perm;

/// A signed permutation `μ · χ₁^{e₁} ⋯ χₙ^{eₙ}` acting on the `2n` facets.
///
/// As a map of facets, `χᵢ` swaps `Fᵢ` and `F_{n+i}`, and `μ` sends the pair
/// `p` to the pair `μ(p)`; the reflections act first. Facet column
/// `p + s·n` (side `s ∈ {0, 1}`) goes to `μ(p) + (s ⊕ e_p)·n`. The product
/// `g · h` is the composite facet map `g ∘ h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeSymmetry {
    perm: Perm,
    flips: u64,
}

impl CubeSymmetry {
    pub fn identity(n: usize) -> Self {
        CubeSymmetry {
            perm: Perm::identity(n),
            flips: 0,
        }
    }

    /// `flips` bit `p` is the reflection exponent `e_p`.
    pub fn new(perm: Perm, flips: u64) -> Result<Self> {
        let n = perm.len();
        if n > 32 || (n < 64 && flips >> n != 0) {
            return Err(Error::InvalidInput(format!(
                "reflection mask {flips:#b} has bits beyond {n} facet pairs"
            )));
        }
        Ok(CubeSymmetry { perm, flips })
    }

    /// The reflection `χ_i` alone (`i` counted from 0).
    pub fn reflection(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, size: n });
        }
        CubeSymmetry::new(Perm::identity(n), 1 << i)
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn flips(&self) -> u64 {
        self.flips
    }

    pub fn reflection_count(&self) -> usize {
        self.flips.count_ones() as usize
    }

    /// Image of facet column `c`.
    #[inline]
    pub fn facet_image(&self, c: usize) -> usize {
        let n = self.dim();
        let (p, s) = (c % n, c / n);
        let flip = ((self.flips >> p) & 1) as usize;
        self.perm.apply(p) + (s ^ flip) * n
    }

    /// `self · other`, the facet map `self ∘ other`.
    pub fn compose(&self, other: &CubeSymmetry) -> Result<CubeSymmetry> {
        let perm = self.perm.compose(&other.perm)?;
        let n = self.dim();
        let flips = (0..n).fold(other.flips, |acc, p| {
            acc ^ (((self.flips >> other.perm.apply(p)) & 1) << p)
        });
        Ok(CubeSymmetry { perm, flips })
    }

    pub fn inverse(&self) -> CubeSymmetry {
        let perm = self.perm.inverse();
        // (μ, e)⁻¹ = (μ⁻¹, e') with e'_p = e_{μ⁻¹(p)}
        let flips = (0..self.dim()).fold(0u64, |acc, p| {
            acc | (((self.flips >> perm.apply(p)) & 1) << p)
        });
        CubeSymmetry { perm, flips }
    }

    /// All `2ⁿ · n!` elements, permutation-major.
    pub fn all(n: usize) -> Vec<CubeSymmetry> {
        Perm::all(n)
            .flat_map(|perm| {
                (0..1u64 << n).map(move |flips| CubeSymmetry {
                    perm: perm.clone(),
                    flips,
                })
            })
            .collect()
    }

    /// `column_map()[c]` is the facet column whose label moves to column `c`.
    fn column_map(&self) -> Vec<usize> {
        (0..2 * self.dim()).map(|c| self.facet_image(c)).collect()
    }
}

impl fmt::Display for CubeSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}·χ^{:0width$b}",
            self.perm,
            self.flips,
            width = self.dim().max(1)
        )
    }
}

#[inline]
fn permute_columns(rows: &[u64], map: &[usize]) -> Vec<u64> {
    rows.iter()
        .map(|&r| {
            map.iter()
                .enumerate()
                .fold(0u64, |acc, (c, &src)| acc | (((r >> src) & 1) << c))
        })
        .collect()
}

/// `λ ↦ λ ∘ h`: column `c` of the result is column `h(c)` of `Λ`. This is a
/// right action, `apply(apply(Λ, g), h) = apply(Λ, g · h)`.
pub fn symmetry_apply(lambda: &CharMatrix, g: &CubeSymmetry) -> Result<CharMatrix> {
    let n = match lambda.spec() {
        PolytopeSpec::Cube(n) => *n,
        other => {
            return Err(Error::InvalidInput(format!(
                "cube symmetries do not act on {other}"
            )))
        }
    };
    if g.dim() != n {
        return Err(Error::Dimension(format!(
            "symmetry of I^{} applied over I^{n}",
            g.dim()
        )));
    }
    let rows = permute_columns(lambda.matrix().rows(), &g.column_map());
    let mat = BitMatrix::from_rows(2 * n, rows)?;
    Ok(CharMatrix::new_unchecked(lambda.spec().clone(), mat))
}

/// Candidate `k` of the `2^(2n²)` cube matrices: row `i` is bits
/// `2n·i .. 2n·(i+1)` of `k`.
#[inline]
fn candidate_rows(n: usize, k: u64, rows: &mut [u64]) {
    let w = 2 * n;
    for (i, r) in rows.iter_mut().enumerate() {
        *r = (k >> (w * i)) & ((1u64 << w) - 1);
    }
}

fn cube_candidate_count(n: usize, caps: &Caps) -> Result<u64> {
    Caps::check("cube dimension", n, caps.cube_dim)?;
    let bits = 2 * n * n;
    if bits >= 64 {
        return Err(Error::Dimension(format!(
            "2^{bits} candidates do not fit a counter"
        )));
    }
    Ok(1u64 << bits)
}

fn valid_in_range(n: usize, range: Range<u64>) -> Vec<Vec<u64>> {
    let masks = PolytopeSpec::Cube(n).vertex_masks();
    let mut rows = vec![0u64; n];
    let mut out = Vec::new();
    for k in range {
        candidate_rows(n, k, &mut rows);
        if rows_characteristic(&rows, &masks).is_none() {
            out.push(rows.clone());
        }
    }
    out
}

/// All characteristic matrices over `Iⁿ`, by filtering every candidate.
pub fn cube_characteristic_matrices(
    n: usize,
    caps: &Caps,
    workers: &Workers,
) -> Result<Vec<CharMatrix>> {
    let total = cube_candidate_count(n, caps)?;
    if n == 0 {
        return Err(Error::Dimension("I⁰ has no facets".into()));
    }
    let spec = PolytopeSpec::Cube(n);
    let plan = workers.plan(total);
    let rows = workers.map_reduce(
        &plan,
        |r| valid_in_range(n, r),
        Vec::new(),
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    rows.into_iter()
        .map(|r| {
            Ok(CharMatrix::new_unchecked(
                spec.clone(),
                BitMatrix::from_rows(2 * n, r)?,
            ))
        })
        .collect()
}

/// `|cf(Iⁿ)|` by exhaustive filtering.
pub fn count_cube_characteristic(n: usize, caps: &Caps, workers: &Workers) -> Result<BigUint> {
    let total = cube_candidate_count(n, caps)?;
    if n == 0 {
        return Ok(BigUint::from(1u8));
    }
    let masks = PolytopeSpec::Cube(n).vertex_masks();
    let plan = workers.plan(total);
    let count = workers.map_reduce(
        &plan,
        |range| {
            let mut rows = vec![0u64; n];
            range
                .filter(|&k| {
                    candidate_rows(n, k, &mut rows);
                    rows_characteristic(&rows, &masks).is_none()
                })
                .count() as u64
        },
        0,
        |a, b| a + b,
    );
    Ok(BigUint::from(count))
}

/// `|cf(Iⁿ)^g|`: characteristic matrices fixed by `g`, by exhaustive search
/// over all candidates. Over `I⁰` the single empty function is fixed.
pub fn fixed_set_size(
    n: usize,
    g: &CubeSymmetry,
    caps: &Caps,
    workers: &Workers,
) -> Result<BigUint> {
    let total = cube_candidate_count(n, caps)?;
    if g.dim() != n {
        return Err(Error::Dimension(format!(
            "symmetry of I^{} counted over I^{n}",
            g.dim()
        )));
    }
    if n == 0 {
        return Ok(BigUint::from(1u8));
    }
    let masks = PolytopeSpec::Cube(n).vertex_masks();
    let map = g.column_map();
    let plan = workers.plan(total);
    let count = workers.map_reduce(
        &plan,
        |range| {
            let mut rows = vec![0u64; n];
            range
                .filter(|&k| {
                    candidate_rows(n, k, &mut rows);
                    permute_columns(&rows, &map) == rows
                        && rows_characteristic(&rows, &masks).is_none()
                })
                .count() as u64
        },
        0,
        |a, b| a + b,
    );
    Ok(BigUint::from(count))
}

/// Fixed-set sizes for every group element, in [`CubeSymmetry::all`] order.
/// Enumerates `cf(Iⁿ)` once and tests each member against each element.
pub fn fixed_set_sizes(
    n: usize,
    caps: &Caps,
    workers: &Workers,
) -> Result<Vec<(CubeSymmetry, BigUint)>> {
    cube_candidate_count(n, caps)?;
    let group = CubeSymmetry::all(n);
    if n == 0 {
        return Ok(group.into_iter().map(|g| (g, BigUint::from(1u8))).collect());
    }
    let valid = cube_characteristic_matrices(n, caps, workers)?;
    Ok(group
        .into_iter()
        .map(|g| {
            let map = g.column_map();
            let fixed = valid
                .iter()
                .filter(|l| permute_columns(l.matrix().rows(), &map) == l.matrix().rows())
                .count();
            (g, BigUint::from(fixed))
        })
        .collect())
}

/// Orbits of `cf(Iⁿ)` under `Aut(F(Iⁿ))`, by collecting the least key of
/// each orbit.
pub fn orbit_count_equivariant_bruteforce(
    n: usize,
    caps: &Caps,
    workers: &Workers,
) -> Result<BigUint> {
    cube_candidate_count(n, caps)?;
    if n == 0 {
        return Ok(BigUint::from(1u8));
    }
    let maps: Vec<Vec<usize>> = CubeSymmetry::all(n)
        .iter()
        .map(CubeSymmetry::column_map)
        .collect();
    let valid = cube_characteristic_matrices(n, caps, workers)?;
    let plan = workers.plan(valid.len() as u64);
    let keys = workers.map_reduce(
        &plan,
        |range| {
            valid[range.start as usize..range.end as usize]
                .iter()
                .map(|l| {
                    maps.iter()
                        .map(|map| {
                            let rows = permute_columns(l.matrix().rows(), map);
                            BitMatrix::from_rows(2 * n, rows)
                                .expect("same shape")
                                .to_key()
                                .expect("2n² ≤ 64")
                        })
                        .min()
                        .expect("group is non-empty")
                })
                .collect::<BTreeSet<u64>>()
        },
        BTreeSet::new(),
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    Ok(BigUint::from(keys.len()))
}

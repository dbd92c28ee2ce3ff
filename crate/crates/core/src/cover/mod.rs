//! Characteristic matrices over the cube `Iⁿ` and over products of simplices.
//!
//! # Facet order
//!
//! For `Cube(n)` column `j < n` is facet `F_{j+1}` and column `n + j` is the
//! opposite facet `F_{n+j+1}`.
//!
//! For `SimplexProduct(n₁, …, n_l)` the first `n` columns hold the facets
//! `f₁ⁱ, …, f_{nᵢ}ⁱ` grouped by factor, and the trailing `l` columns hold the
//! omitted facets `f₀¹, …, f₀ˡ`. The first `n` facets therefore meet in a
//! vertex. A cube is the product of `n` intervals and gets the same layout.
//!
//! Row `r` of a reduced matrix over a product belongs to the factor whose
//! coordinate block contains `r`; block `(i, j)` of the vector matrix is the
//! column-`j` slice of the rows of factor `i`, a vector in `ℤ₂^{nᵢ}`.

mod cube;
mod product;
mod symmetry;

use std::fmt;

pub use cube::{
    count_mn, enumerate_mn, lemma_normal_form, mn_in_range, phi, phi_inv,
    sn_conjugation_orbit_count, MnRange, NormalForm,
};
pub use product::{
    count_reduced_product, enumerate_reduced_product, nonsingular_product_check,
    product_candidates_in_range, product_free_bits, psi, ProductRange,
};
pub use symmetry::{
    count_cube_characteristic, cube_characteristic_matrices, fixed_set_size, fixed_set_sizes,
    orbit_count_equivariant_bruteforce, symmetry_apply, CubeSymmetry,
};

use crate::error::{Error, Result};
use crate::gf2::{rows_independent, BitMatrix, MAX_DIM};

/// `Cube(n)` or `SimplexProduct(n₁, …, n_l)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PolytopeSpec {
    Cube(usize),
    SimplexProduct(Vec<usize>),
}

impl PolytopeSpec {
    pub fn cube(n: usize) -> Result<Self> {
        let spec = PolytopeSpec::Cube(n);
        spec.validate()?;
        Ok(spec)
    }

    pub fn simplex_product(dims: Vec<usize>) -> Result<Self> {
        let spec = PolytopeSpec::SimplexProduct(dims);
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PolytopeSpec::Cube(0) => Err(Error::InvalidInput("cube dimension must be ≥ 1".into())),
            PolytopeSpec::SimplexProduct(d) if d.is_empty() => Err(Error::InvalidInput(
                "a product needs at least one factor".into(),
            )),
            PolytopeSpec::SimplexProduct(d) if d.contains(&0) => {
                Err(Error::InvalidInput("simplex dimensions must be ≥ 1".into()))
            }
            _ if self.facet_count() > MAX_DIM => Err(Error::Dimension(format!(
                "{} facets exceed the {MAX_DIM}-column limit",
                self.facet_count()
            ))),
            _ => Ok(()),
        }
    }

    /// Dimension `n`.
    pub fn dim(&self) -> usize {
        match self {
            PolytopeSpec::Cube(n) => *n,
            PolytopeSpec::SimplexProduct(d) => d.iter().sum(),
        }
    }

    /// Simplex dimensions of the factors; `[1; n]` for the cube.
    pub fn factor_dims(&self) -> Vec<usize> {
        match self {
            PolytopeSpec::Cube(n) => vec![1; *n],
            PolytopeSpec::SimplexProduct(d) => d.clone(),
        }
    }

    /// Number of factors `l`.
    pub fn factor_count(&self) -> usize {
        match self {
            PolytopeSpec::Cube(n) => *n,
            PolytopeSpec::SimplexProduct(d) => d.len(),
        }
    }

    /// Facet count `m = n + l`.
    pub fn facet_count(&self) -> usize {
        self.dim() + self.factor_count()
    }

    /// For each row of a reduced matrix, the factor owning it.
    pub fn row_factors(&self) -> Vec<usize> {
        self.factor_dims()
            .iter()
            .enumerate()
            .flat_map(|(i, &d)| std::iter::repeat_n(i, d))
            .collect()
    }

    /// First row of each factor's coordinate block.
    pub fn row_offsets(&self) -> Vec<usize> {
        self.factor_dims()
            .iter()
            .scan(0, |acc, &d| {
                let start = *acc;
                *acc += d;
                Some(start)
            })
            .collect()
    }

    /// Column masks of the vertex facet sets; see [`vertices`].
    pub fn vertex_masks(&self) -> Vec<u64> {
        let n = self.dim();
        let dims = self.factor_dims();
        let offsets = self.row_offsets();
        // per factor: the facet columns, f₀ first
        let factor_cols: Vec<Vec<usize>> = dims
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                std::iter::once(n + i)
                    .chain(offsets[i]..offsets[i] + d)
                    .collect()
            })
            .collect();
        let full: Vec<u64> = factor_cols
            .iter()
            .map(|cols| cols.iter().fold(0u64, |m, &c| m | (1 << c)))
            .collect();
        let mut masks = Vec::new();
        let mut omitted = vec![0usize; dims.len()];
        loop {
            masks.push(
                omitted
                    .iter()
                    .enumerate()
                    .fold(0u64, |m, (i, &o)| m | (full[i] & !(1 << factor_cols[i][o]))),
            );
            // odometer, factor 0 fastest
            let mut i = 0;
            loop {
                if i == dims.len() {
                    return masks;
                }
                omitted[i] += 1;
                if omitted[i] <= dims[i] {
                    break;
                }
                omitted[i] = 0;
                i += 1;
            }
        }
    }
}

impl fmt::Display for PolytopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeSpec::Cube(n) => write!(f, "cube({n})"),
            PolytopeSpec::SimplexProduct(d) => {
                let parts: Vec<String> = d.iter().map(ToString::to_string).collect();
                write!(f, "simplices({})", parts.join(","))
            }
        }
    }
}

/// Facet index sets of the vertices: each is an `n`-set of columns whose
/// facets meet. The first entry is `{0, …, n-1}`.
///
/// `Cube(n)` has the `2ⁿ` sets `{ε(1), …, ε(n)}` with `ε(t) ∈ {t, n+t}`;
/// a product has `Π (nᵢ + 1)` sets, each omitting one facet per factor.
pub fn vertices(spec: &PolytopeSpec) -> Vec<Vec<usize>> {
    spec.vertex_masks()
        .into_iter()
        .map(crate::gf2::mask_to_indices)
        .collect()
}

fn check_shape(mat: &BitMatrix, rows: usize, cols: usize, what: &str) -> Result<()> {
    if mat.n_rows() != rows || mat.n_cols() != cols {
        return Err(Error::Dimension(format!(
            "{what} must be {rows}×{cols}, got {}×{}",
            mat.n_rows(),
            mat.n_cols()
        )));
    }
    Ok(())
}

/// Rows restricted to the vertex columns are independent at every vertex.
#[inline]
pub(crate) fn rows_characteristic(rows: &[u64], vertex_masks: &[u64]) -> Option<usize> {
    let mut buf = [0u64; MAX_DIM];
    let k = rows.len();
    vertex_masks.iter().position(|&v| {
        for (b, &r) in buf.iter_mut().zip(rows) {
            *b = r & v;
        }
        !rows_independent(&mut buf[..k])
    })
}

/// Non-singularity: the columns at every vertex form a basis of `ℤ₂ⁿ`.
pub fn is_characteristic(mat: &BitMatrix, spec: &PolytopeSpec) -> Result<bool> {
    spec.validate()?;
    check_shape(mat, spec.dim(), spec.facet_count(), "characteristic matrix")?;
    Ok(rows_characteristic(mat.rows(), &spec.vertex_masks()).is_none())
}

/// A validated characteristic matrix `Λ = (A | B)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharMatrix {
    spec: PolytopeSpec,
    mat: BitMatrix,
}

impl CharMatrix {
    pub fn new(spec: PolytopeSpec, mat: BitMatrix) -> Result<Self> {
        spec.validate()?;
        check_shape(
            &mat,
            spec.dim(),
            spec.facet_count(),
            "characteristic matrix",
        )?;
        let masks = spec.vertex_masks();
        if let Some(v) = rows_characteristic(mat.rows(), &masks) {
            return Err(Error::NotCharacteristic(format!(
                "columns {:?} of {mat} are not a basis",
                crate::gf2::mask_to_indices(masks[v])
            )));
        }
        Ok(CharMatrix { spec, mat })
    }

    pub(crate) fn new_unchecked(spec: PolytopeSpec, mat: BitMatrix) -> Self {
        debug_assert!(is_characteristic(&mat, &spec).unwrap_or(false));
        CharMatrix { spec, mat }
    }

    pub fn spec(&self) -> &PolytopeSpec {
        &self.spec
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.mat
    }

    /// The refined form's reduced submatrix `Λ* = A⁻¹B`.
    pub fn refine(&self) -> ReducedMatrix {
        refine(self)
    }
}

/// `Λ ↦ A⁻¹B`. `A` (the first `n` columns) is invertible because those facets
/// meet in a vertex; the result is the same for every `σΛ`, `σ ∈ GL(n, ℤ₂)`.
pub fn refine(lambda: &CharMatrix) -> ReducedMatrix {
    let n = lambda.spec.dim();
    let m = lambda.spec.facet_count();
    let a: Vec<usize> = (0..n).collect();
    let b: Vec<usize> = (n..m).collect();
    let a = lambda.mat.select_columns(&a).expect("first n columns");
    let b = lambda.mat.select_columns(&b).expect("trailing columns");
    let a_inv = a.inverse_gf2().expect("first n facets meet in a vertex");
    let reduced = a_inv.mul_gf2(&b).expect("shapes agree");
    ReducedMatrix::new_unchecked(lambda.spec.clone(), reduced)
}

/// A reduced submatrix `Λ*` (shape `n × l`) of a valid refined form `(E | Λ*)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedMatrix {
    spec: PolytopeSpec,
    mat: BitMatrix,
}

impl ReducedMatrix {
    pub fn new(spec: PolytopeSpec, mat: BitMatrix) -> Result<Self> {
        spec.validate()?;
        check_shape(&mat, spec.dim(), spec.factor_count(), "reduced matrix")?;
        match &spec {
            PolytopeSpec::Cube(n) => {
                if let Some(subset) = mat.vanishing_principal_minor()? {
                    return Err(Error::NotInMn { n: *n, subset });
                }
            }
            PolytopeSpec::SimplexProduct(_) => {
                if !nonsingular_product_check(&mat, &spec)? {
                    return Err(Error::NotCharacteristic(format!(
                        "{mat} fails the principal-minor test over {spec}"
                    )));
                }
            }
        }
        Ok(ReducedMatrix { spec, mat })
    }

    pub(crate) fn new_unchecked(spec: PolytopeSpec, mat: BitMatrix) -> Self {
        ReducedMatrix { spec, mat }
    }

    pub fn spec(&self) -> &PolytopeSpec {
        &self.spec
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.mat
    }

    /// The refined form `(E | Λ*)`.
    pub fn refined_form(&self) -> CharMatrix {
        let n = self.spec.dim();
        let full = BitMatrix::identity(n)
            .and_then(|e| e.hstack(&self.mat))
            .expect("shape checked on construction");
        CharMatrix::new_unchecked(self.spec.clone(), full)
    }
}

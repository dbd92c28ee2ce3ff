//! `M(n)`, the bijection with labeled DAGs, and the normal forms of
//! matrices whose proper principal minors are all 1.

use std::collections::BTreeSet;
use std::ops::Range;

use num_bigint::BigUint;

use crate::caps::Caps;
use crate::digraph::{edge_mask_count, Digraph, MASK_NODES};
use crate::error::{Error, Result};
use crate::gf2::{conjugate_rows, principal_minor_bits, BitMatrix};
use crate::parallel::Workers;
use crate::perm::Perm;
use crate::search::{RowFilter, RowSearch};

/// Members of `M(n)` whose off-diagonal patterns fall in a range.
///
/// The diagonal is fixed to ones (the 1×1 minors) and the off-diagonal
/// pattern uses the digraph edge-mask order, so candidate `k` here is
/// `E` plus the adjacency matrix of the digraph with edge mask `k`. Rows are
/// placed from the bottom up and a row is kept only if every principal minor
/// on the rows placed so far is 1.
#[derive(Debug, Clone)]
pub struct MnRange {
    search: RowSearch<TrailingMinors>,
}

/// Principal minors on index sets `S ⊆ {k..n}` with `k ∈ S`.
#[derive(Debug, Clone, Copy)]
struct TrailingMinors;

impl RowFilter for TrailingMinors {
    fn accept(&self, rows: &[u64], k: usize) -> bool {
        let n = rows.len();
        let mut full = [0u64; MASK_NODES];
        for j in k..n {
            full[j] = rows[j] | 1 << j;
        }
        (0u64..1 << (n - 1 - k))
            .all(|upper| principal_minor_bits(&full[..n], (upper << (k + 1)) | 1 << k))
    }
}

impl Iterator for MnRange {
    type Item = BitMatrix;

    fn next(&mut self) -> Option<BitMatrix> {
        let rows = self.search.next_rows()?;
        let full = rows.iter().enumerate().map(|(i, r)| r | 1 << i).collect();
        Some(BitMatrix::from_rows(rows.len(), full).expect("n within bounds"))
    }
}

/// Every member of `M(n)` once, by increasing off-diagonal pattern.
pub fn enumerate_mn(n: usize, caps: &Caps) -> Result<MnRange> {
    Caps::check("M(n) size", n, caps.mn_size.min(MASK_NODES))?;
    mn_in_range(n, 0..edge_mask_count(n)?)
}

pub fn mn_in_range(n: usize, patterns: Range<u64>) -> Result<MnRange> {
    if n == 0 {
        return Err(Error::Dimension("M(0) has no matrices to enumerate".into()));
    }
    let total = edge_mask_count(n)?;
    if patterns.end > total {
        return Err(Error::InvalidInput(format!(
            "pattern range {patterns:?} exceeds 0..{total}"
        )));
    }
    Ok(MnRange {
        search: RowSearch::new(n, patterns, TrailingMinors),
    })
}

/// `|M(n)|` by exhaustive search.
pub fn count_mn(n: usize, caps: &Caps, workers: &Workers) -> Result<u64> {
    Caps::check("M(n) size", n, caps.mn_size.min(MASK_NODES))?;
    let plan = workers.plan(edge_mask_count(n)?);
    workers.try_map_reduce(
        &plan,
        |r| Ok(mn_in_range(n, r)?.count() as u64),
        0,
        |a, b| a + b,
    )
}

/// `φ(G) = E + A(G)`, defined on acyclic digraphs.
pub fn phi(g: &Digraph) -> Result<BitMatrix> {
    g.topo_order()?;
    let n = g.node_count();
    let mut b = g
        .adjacency()
        .ok_or_else(|| Error::Dimension("φ needs at least one node".into()))?;
    for i in 0..n {
        b.set(i, i, true);
    }
    Ok(b)
}

/// `φ⁻¹(B)`: the off-diagonal ones of a member of `M(n)`, read as edges.
pub fn phi_inv(b: &BitMatrix) -> Result<Digraph> {
    if let Some(subset) = b.vanishing_principal_minor()? {
        return Err(Error::NotInMn {
            n: b.n_rows(),
            subset,
        });
    }
    Digraph::from_off_diagonal(b)
}

/// Outcome of normalizing a matrix whose proper principal minors are all 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalForm {
    /// `det = 1`: conjugating by `μ` gives a unipotent upper triangular matrix.
    Unipotent(Perm),
    /// `det = 0`: conjugating by `μ` gives ones on the diagonal, on the
    /// superdiagonal and in the corner `(n-1, 0)`, zeros elsewhere.
    CycleForm(Perm),
}

impl NormalForm {
    pub fn perm(&self) -> &Perm {
        match self {
            NormalForm::Unipotent(p) | NormalForm::CycleForm(p) => p,
        }
    }
}

/// The cyclic normal form on `n ≥ 2` points.
pub(crate) fn is_cycle_form(m: &BitMatrix) -> bool {
    let n = m.n_rows();
    m.is_square()
        && n >= 2
        && m.rows()
            .iter()
            .enumerate()
            .all(|(i, &r)| r == (1 << i) | (1 << ((i + 1) % n)))
}

/// Normal form of a square matrix all of whose proper principal minors are 1.
///
/// With `det = 1` the matrix lies in `M(n)`, its off-diagonal digraph is
/// acyclic and a topological order triangularizes it. With `det = 0` every
/// proper induced subdigraph is acyclic while the whole digraph is not, which
/// forces a chordless Hamiltonian cycle; `μ` walks that cycle from node 0.
pub fn lemma_normal_form(a: &BitMatrix) -> Result<NormalForm> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "expected a square matrix, got {}×{}",
            a.n_rows(),
            a.n_cols()
        )));
    }
    let n = a.n_rows();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let rows = a.rows();
    if let Some(bad) = (1..full).find(|&s| !principal_minor_bits(rows, s)) {
        return Err(Error::InvalidInput(format!(
            "proper principal minor on {:?} vanishes",
            crate::gf2::mask_to_indices(bad)
        )));
    }
    let g = Digraph::from_off_diagonal(a)?;
    if principal_minor_bits(rows, full) {
        let mu = g.topo_order()?;
        debug_assert!(a.conjugate_by_perm(&mu)?.is_unipotent_upper_triangular());
        return Ok(NormalForm::Unipotent(mu));
    }
    if n == 1 {
        return Err(Error::InvalidInput(
            "the 1×1 zero matrix has no cyclic normal form".into(),
        ));
    }
    let mut order = Vec::with_capacity(n);
    let mut v = 0usize;
    for _ in 0..n {
        order.push(v);
        let succ = g.out_rows()[v];
        if succ.count_ones() != 1 {
            return Err(Error::Inconsistent(format!(
                "node {v} has out-degree {} in a minimal cyclic digraph",
                succ.count_ones()
            )));
        }
        v = succ.trailing_zeros() as usize;
    }
    let mu = Perm::new(order)?;
    if !is_cycle_form(&a.conjugate_by_perm(&mu)?) {
        return Err(Error::Inconsistent(format!(
            "{a} did not conjugate to the cycle form"
        )));
    }
    Ok(NormalForm::CycleForm(mu))
}

/// Orbits of `M(n)` under `S_n` conjugation, counted by collecting the
/// least key of every orbit. `M(0)` has the empty matrix as its one orbit.
pub fn sn_conjugation_orbit_count(n: usize, caps: &Caps, workers: &Workers) -> Result<BigUint> {
    Caps::check("M(n) size", n, caps.mn_size.min(MASK_NODES))?;
    if n == 0 {
        return Ok(BigUint::from(1u8));
    }
    let perms: Vec<Vec<usize>> = Perm::all(n).map(|p| p.as_slice().to_vec()).collect();
    let plan = workers.plan(edge_mask_count(n)?);
    let keys = workers.try_map_reduce(
        &plan,
        |r| {
            Ok(mn_in_range(n, r)?
                .map(|b| {
                    perms
                        .iter()
                        .map(|mu| {
                            let c = BitMatrix::from_rows(n, conjugate_rows(b.rows(), mu))
                                .expect("same shape");
                            c.to_key().expect("n ≤ 8")
                        })
                        .min()
                        .expect("at least one permutation")
                })
                .collect::<BTreeSet<u64>>())
        },
        BTreeSet::new(),
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    Ok(BigUint::from(keys.len()))
}

//! Labeled simple digraphs, acyclicity, DAG enumeration and unlabeled counts.
//!
//! # Edge masks
//!
//! A digraph on `n ≤ 8` nodes is encoded as an `n(n-1)`-bit mask. Ordered
//! pairs `(i, j)` with `i ≠ j` are numbered row-major with the diagonal
//! skipped: pair `(i, j)` is bit `i·(n-1) + j` when `j < i`, and bit
//! `i·(n-1) + j - 1` when `j > i`. Enumeration visits masks in increasing
//! order.
//!
//! # Text form
//!
//! `<n> <mask>` with the mask in lowercase hexadecimal, one digraph per line.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::parallel::Workers;
use crate::perm::Perm;
use crate::search::{Acyclic, RowSearch};

/// Largest node count with an edge-mask encoding.
pub const MASK_NODES: usize = 8;

/// Node count a [`Digraph`] can hold.
pub const MAX_NODES: usize = 64;

/// A simple labeled digraph: no self-loops, at most one edge per ordered pair.
/// Out-neighbours of node `i` are the set bits of `out[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

#[inline]
fn node_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Number of edge masks on `n` nodes, `2^(n(n-1))`.
pub fn edge_mask_count(n: usize) -> Result<u64> {
    if n > MASK_NODES {
        return Err(Error::Dimension(format!(
            "edge masks are defined for at most {MASK_NODES} nodes"
        )));
    }
    let bits = n * n.saturating_sub(1);
    Ok(if bits == 64 { u64::MAX } else { 1u64 << bits })
}

#[inline]
#[cfg(test)]
pub(crate) fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    i * (n - 1) + if j < i { j } else { j - 1 }
}

/// Out-neighbour rows of the digraph with the given edge mask (`n ≤ 8`).
#[inline]
pub(crate) fn out_rows_from_mask(n: usize, mask: u64, out: &mut [u64]) {
    // Row i holds n-1 consecutive bits; re-insert the skipped diagonal slot.
    let w = n.saturating_sub(1);
    for (i, row) in out.iter_mut().enumerate().take(n) {
        let chunk = (mask >> (i * w)) & node_mask(w);
        let low = chunk & node_mask(i);
        let high = (chunk >> i) << (i + 1);
        *row = low | high;
    }
}

#[inline]
pub(crate) fn mask_from_out_rows(out: &[u64]) -> u64 {
    let n = out.len();
    let w = n.saturating_sub(1);
    out.iter().enumerate().fold(0u64, |acc, (i, &r)| {
        let low = r & node_mask(i);
        let high = r >> (i + 1);
        acc | ((low | (high << i)) << (i * w))
    })
}

/// Source elimination on out-neighbour rows: `true` iff no directed cycle.
#[inline]
pub(crate) fn rows_acyclic(out: &[u64]) -> bool {
    let mut remaining = node_mask(out.len());
    while remaining != 0 {
        let mut hit = 0u64;
        let mut r = remaining;
        while r != 0 {
            hit |= out[r.trailing_zeros() as usize];
            r &= r - 1;
        }
        let sources = remaining & !hit;
        if sources == 0 {
            return false;
        }
        remaining &= !sources;
    }
    true
}

impl Digraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_NODES {
            return Err(Error::Dimension(format!(
                "{n} nodes exceed the limit of {MAX_NODES}"
            )));
        }
        Ok(Digraph { n, out: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Digraph::empty(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        let count = edge_mask_count(n)?;
        if count != u64::MAX && mask >= count {
            return Err(Error::InvalidInput(format!(
                "edge mask {mask:#x} has bits beyond the {} pairs of {n} nodes",
                n * n.saturating_sub(1)
            )));
        }
        let mut out = vec![0; n];
        out_rows_from_mask(n, mask, &mut out);
        Ok(Digraph { n, out })
    }

    /// Reads off-diagonal ones of a square matrix as edges; the diagonal is ignored.
    pub fn from_off_diagonal(b: &BitMatrix) -> Result<Self> {
        if !b.is_square() {
            return Err(Error::Dimension(format!(
                "expected a square matrix, got {}×{}",
                b.n_rows(),
                b.n_cols()
            )));
        }
        let out = b
            .rows()
            .iter()
            .enumerate()
            .map(|(i, &r)| r & !(1u64 << i))
            .collect();
        Ok(Digraph { n: b.n_rows(), out })
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    size: self.n,
                });
            }
        }
        if i == j {
            return Err(Error::InvalidInput(format!("self-loop at node {i}")));
        }
        self.out[i] |= 1 << j;
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && (self.out[i] >> j) & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (i, &r) in self.out.iter().enumerate() {
            let mut bits = r;
            while bits != 0 {
                edges.push((i, bits.trailing_zeros() as usize));
                bits &= bits - 1;
            }
        }
        edges
    }

    /// Out-neighbour bit rows.
    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }

    /// Edge mask in the documented pair order (`n ≤ 8`).
    pub fn edge_mask(&self) -> Result<u64> {
        edge_mask_count(self.n)?;
        Ok(mask_from_out_rows(&self.out))
    }

    /// The vertex adjacency matrix `A(G)` over GF(2); `None` for `n = 0`.
    pub fn adjacency(&self) -> Option<BitMatrix> {
        BitMatrix::from_rows(self.n, self.out.clone()).ok()
    }

    pub fn is_acyclic(&self) -> bool {
        rows_acyclic(&self.out)
    }

    /// A permutation `μ` listing the nodes in topological order, `μ(k)` being
    /// the `k`-th node removed by source elimination. The smallest available
    /// source is always removed first.
    ///
    /// Then `conjugate_by_perm(E + A(G), μ)` is unipotent upper triangular,
    /// and `relabel(G, μ⁻¹)` has every edge going from a lower to a higher
    /// index.
    pub fn topo_order(&self) -> Result<Perm> {
        let mut remaining = node_mask(self.n);
        let mut order = Vec::with_capacity(self.n);
        while remaining != 0 {
            let mut hit = 0u64;
            let mut r = remaining;
            while r != 0 {
                hit |= self.out[r.trailing_zeros() as usize];
                r &= r - 1;
            }
            let sources = remaining & !hit;
            if sources == 0 {
                return Err(Error::Cyclic {
                    cycle: self.witness_cycle(remaining),
                });
            }
            let v = sources.trailing_zeros() as usize;
            order.push(v);
            remaining &= !(1 << v);
        }
        Perm::new(order)
    }

    /// A directed cycle inside `within`, a node set where every node has a
    /// predecessor in the set. Walks predecessors until a node repeats.
    fn witness_cycle(&self, within: u64) -> Vec<usize> {
        let pred = |v: usize| -> usize {
            (0..self.n)
                .find(|&u| (within >> u) & 1 == 1 && (self.out[u] >> v) & 1 == 1)
                .expect("every remaining node has a predecessor")
        };
        let mut walk = vec![within.trailing_zeros() as usize];
        loop {
            let p = pred(*walk.last().unwrap());
            if let Some(pos) = walk.iter().position(|&x| x == p) {
                let mut cycle = walk[pos..].to_vec();
                cycle.reverse();
                return cycle;
            }
            walk.push(p);
        }
    }

    /// `outdeg(v_i) = |{j : (i, j) ∈ E}|` for every node.
    pub fn outdegrees(&self) -> Vec<usize> {
        self.out.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn indegrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (_, j) in self.edges() {
            deg[j] += 1;
        }
        deg
    }

    /// Maps edge `(i, j)` to `(μ(i), μ(j))`.
    pub fn relabel(&self, mu: &Perm) -> Result<Digraph> {
        if mu.len() != self.n {
            return Err(Error::Dimension(format!(
                "permutation of {} points applied to a digraph on {} nodes",
                mu.len(),
                self.n
            )));
        }
        let mut out = vec![0u64; self.n];
        for (i, j) in self.edges() {
            out[mu.apply(i)] |= 1 << mu.apply(j);
        }
        Ok(Digraph { n: self.n, out })
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.edge_mask() {
            Ok(mask) => write!(f, "{} {:x}", self.n, mask),
            Err(_) => write!(f, "{} {:?}", self.n, self.edges()),
        }
    }
}

impl FromStr for Digraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, mask) = s
            .trim()
            .split_once(' ')
            .ok_or_else(|| Error::Parse(format!("expected \"<n> <hex mask>\", got {s:?}")))?;
        let n: usize = n
            .parse()
            .map_err(|e| Error::Parse(format!("node count {n:?}: {e}")))?;
        let mask = u64::from_str_radix(mask, 16)
            .map_err(|e| Error::Parse(format!("edge mask {mask:?}: {e}")))?;
        Digraph::from_mask(n, mask)
    }
}

/// Labeled DAGs whose edge masks lie in a range, in increasing mask order.
#[derive(Debug, Clone)]
pub struct DagRange {
    search: RowSearch<Acyclic>,
}

impl Iterator for DagRange {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        let rows = self.search.next_rows()?;
        Some(Digraph {
            n: rows.len(),
            out: rows.to_vec(),
        })
    }
}

/// Every labeled DAG on `n` nodes exactly once, by increasing edge mask.
pub fn enumerate_dags(n: usize, caps: &Caps) -> Result<DagRange> {
    Caps::check("DAG node count", n, caps.dag_nodes)?;
    dags_in_range(n, 0..edge_mask_count(n)?)
}

/// The DAGs whose edge masks fall in `masks`; disjoint ranges give disjoint
/// parts of the enumeration.
pub fn dags_in_range(n: usize, masks: Range<u64>) -> Result<DagRange> {
    let total = edge_mask_count(n)?;
    if masks.end > total {
        return Err(Error::InvalidInput(format!(
            "mask range {masks:?} exceeds 0..{total}"
        )));
    }
    Ok(DagRange {
        search: RowSearch::new(n, masks, Acyclic::default()),
    })
}

/// Number of labeled DAGs on `n` nodes by exhaustive search.
pub fn count_dags(n: usize, caps: &Caps, workers: &Workers) -> Result<u64> {
    Caps::check("DAG node count", n, caps.dag_nodes)?;
    let plan = workers.plan(edge_mask_count(n)?);
    workers.try_map_reduce(
        &plan,
        |r| Ok(dags_in_range(n, r)?.count() as u64),
        0,
        |a, b| a + b,
    )
}

/// Lexicographically least adjacency-matrix serialization over all `n!`
/// relabelings. Stored as the row-major `n²`-bit integer with entry `(0, 0)`
/// most significant, so integer order is string order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: u64,
}

impl CanonicalForm {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.n * self.n;
        for k in (0..len).rev() {
            f.write_str(if (self.bits >> k) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Precomputed relabelings for brute-force canonicalization on `n` nodes.
///
/// For every permutation `μ`, row `i` of the relabeled adjacency matrix is
/// row `μ(i)` of the original with its columns permuted the same way; the
/// column permutation is tabulated per byte of a row.
pub(crate) struct Canonizer {
    n: usize,
    perms: Vec<Vec<usize>>,
    // tables[p][b] = row byte b with columns moved by perm p, reversed to the
    // most-significant-first layout of the key.
    tables: Vec<[u8; 256]>,
}

impl Canonizer {
    pub(crate) fn new(n: usize) -> Self {
        debug_assert!(n <= MASK_NODES);
        let perms: Vec<Vec<usize>> = Perm::all(n).map(|p| p.as_slice().to_vec()).collect();
        let tables = perms
            .iter()
            .map(|mu| {
                let mut t = [0u8; 256];
                for (b, slot) in t.iter_mut().enumerate() {
                    let mut v = 0u8;
                    for (j, &mj) in mu.iter().enumerate() {
                        if (b >> mj) & 1 == 1 {
                            v |= 1 << (n - 1 - j);
                        }
                    }
                    *slot = v;
                }
                t
            })
            .collect();
        Canonizer { n, perms, tables }
    }

    /// Minimal key over all relabelings, abandoning a relabeling as soon as
    /// its leading rows exceed the best so far.
    pub(crate) fn canonical_bits(&self, out: &[u64]) -> u64 {
        let n = self.n;
        if n == 0 {
            return 0;
        }
        let mut best = u64::MAX;
        for (mu, table) in self.perms.iter().zip(&self.tables) {
            let mut key = 0u64;
            let mut rest = n;
            let mut pruned = false;
            for &src in mu {
                rest -= 1;
                key = (key << n) | u64::from(table[out[src] as usize]);
                // compare against the same-length prefix of the best key
                let prefix = if rest * n >= 64 {
                    0
                } else {
                    best >> (rest * n)
                };
                if key > prefix {
                    pruned = true;
                    break;
                }
            }
            if !pruned && key < best {
                best = key;
            }
        }
        best
    }
}

/// Canonical form of `g` under relabeling (`n ≤` the DAG node cap).
pub fn canonical_form(g: &Digraph, caps: &Caps) -> Result<CanonicalForm> {
    Caps::check(
        "canonicalization node count",
        g.n,
        caps.dag_nodes.min(MASK_NODES),
    )?;
    let bits = Canonizer::new(g.n).canonical_bits(&g.out);
    Ok(CanonicalForm { n: g.n, bits })
}

/// Number of DAGs on `n` unlabeled nodes: distinct canonical forms over all
/// labeled DAGs, merged from per-partition sets.
pub fn count_unlabeled_dags(n: usize, caps: &Caps, workers: &Workers) -> Result<BigUint> {
    Caps::check("DAG node count", n, caps.dag_nodes.min(MASK_NODES))?;
    let canon = Canonizer::new(n);
    let plan = workers.plan(edge_mask_count(n)?);
    let forms = workers.try_map_reduce(
        &plan,
        |r| {
            Ok(dags_in_range(n, r)?
                .map(|g| canon.canonical_bits(&g.out))
                .collect::<BTreeSet<u64>>())
        },
        BTreeSet::new(),
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    Ok(BigUint::from(forms.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_round_trip() {
        for n in 0..=4 {
            for mask in 0..edge_mask_count(n).unwrap() {
                let g = Digraph::from_mask(n, mask).unwrap();
                assert_eq!(g.edge_mask().unwrap(), mask);
                for (i, j) in g.edges() {
                    assert_ne!(i, j);
                    assert_eq!((mask >> pair_bit(n, i, j)) & 1, 1);
                }
            }
        }
        assert!(Digraph::from_mask(2, 4).is_err());
    }

    #[test]
    fn acyclicity() {
        assert!(Digraph::empty(4).unwrap().is_acyclic());
        assert!(!Digraph::from_edges(2, &[(0, 1), (1, 0)])
            .unwrap()
            .is_acyclic());
        let dags = (0..64)
            .filter(|&m| Digraph::from_mask(3, m).unwrap().is_acyclic())
            .count();
        assert_eq!(dags, 25);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        let mut g = Digraph::empty(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
    }

    #[test]
    fn topo_order_examples() {
        assert!(Digraph::empty(4)
            .unwrap()
            .topo_order()
            .unwrap()
            .is_identity());
        let path = Digraph::from_edges(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(path.topo_order().unwrap(), Perm::reversal(3));
        // smallest source first
        let g = Digraph::from_edges(3, &[(2, 0)]).unwrap();
        assert_eq!(g.topo_order().unwrap().as_slice(), &[1, 2, 0]);
    }

    #[test]
    fn topo_order_reports_a_real_cycle() {
        let g = Digraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap();
        match g.topo_order() {
            Err(Error::Cyclic { cycle }) => {
                assert!(!cycle.is_empty());
                for k in 0..cycle.len() {
                    assert!(g.has_edge(cycle[k], cycle[(k + 1) % cycle.len()]));
                }
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn enumeration_counts() {
        let caps = Caps::default();
        let one: Vec<_> = enumerate_dags(1, &caps).unwrap().collect();
        assert_eq!(one, vec![Digraph::empty(1).unwrap()]);
        assert_eq!(enumerate_dags(2, &caps).unwrap().count(), 3);
        assert_eq!(enumerate_dags(4, &caps).unwrap().count(), 543);
        assert_eq!(enumerate_dags(0, &caps).unwrap().count(), 1);
        assert!(matches!(
            enumerate_dags(6, &caps),
            Err(Error::CapExceeded { .. })
        ));
        let masks: Vec<u64> = enumerate_dags(3, &caps)
            .unwrap()
            .map(|g| g.edge_mask().unwrap())
            .collect();
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn degrees_and_relabel() {
        assert_eq!(Digraph::empty(3).unwrap().outdegrees(), vec![0, 0, 0]);
        let star = Digraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.outdegrees(), vec![3, 0, 0, 0]);
        let mu = Perm::new(vec![2, 0, 3, 1]).unwrap();
        let moved = star.relabel(&mu).unwrap();
        assert_eq!(moved.outdegrees().iter().sum::<usize>(), 3);
        assert_eq!(moved.outdegrees(), vec![0, 0, 3, 0]);
        assert!(moved.has_edge(2, 0) && moved.has_edge(2, 3) && moved.has_edge(2, 1));
    }

    #[test]
    fn canonical_forms() {
        let caps = Caps::default();
        let e = canonical_form(&Digraph::empty(3).unwrap(), &caps).unwrap();
        assert_eq!(e.to_string(), "000000000");
        let a = canonical_form(&Digraph::from_edges(2, &[(0, 1)]).unwrap(), &caps).unwrap();
        let b = canonical_form(&Digraph::from_edges(2, &[(1, 0)]).unwrap(), &caps).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "0010");
        let forms: BTreeSet<_> = enumerate_dags(3, &caps)
            .unwrap()
            .map(|g| canonical_form(&g, &caps).unwrap())
            .collect();
        assert_eq!(forms.len(), 6);
    }

    #[test]
    fn unlabeled_counts() {
        let caps = Caps::default();
        let w = Workers::sequential();
        let got: Vec<BigUint> = (0..=4)
            .map(|n| count_unlabeled_dags(n, &caps, &w).unwrap())
            .collect();
        let want: Vec<BigUint> = [1u32, 1, 2, 6, 31].iter().map(|&x| x.into()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn text_form() {
        let g = Digraph::from_edges(3, &[(0, 1), (2, 0)]).unwrap();
        let s = g.to_string();
        assert_eq!(s, format!("3 {:x}", g.edge_mask().unwrap()));
        assert_eq!(s.parse::<Digraph>().unwrap(), g);
        assert!("3".parse::<Digraph>().is_err());
        assert!("3 zz".parse::<Digraph>().is_err());
    }
}

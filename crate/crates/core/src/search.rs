//! Depth-first search over digraph edge masks, one out-row at a time.
//!
//! Row `i` of an edge mask occupies bits `i(n-1) .. (i+1)(n-1)`, so fixing
//! rows from `n-1` down to `0`, each in increasing order, visits masks in
//! increasing numeric order. A filter sees row `k` once rows `k+1..n` are
//! fixed and may reject it; rejected rows prune their whole subtree.

use std::ops::Range;

/// Decides whether row `k` may follow the already fixed rows `k+1..n`.
/// Only rows `k..n` are meaningful when either method is called.
pub(crate) trait RowFilter {
    /// Called once per visit to level `k`, before any row there is tried.
    fn enter(&mut self, _rows: &[u64], _k: usize) {}
    fn accept(&self, rows: &[u64], k: usize) -> bool;
}

#[inline]
fn low(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

#[derive(Debug, Clone)]
pub(crate) struct RowSearch<F> {
    n: usize,
    w: usize,
    lo: Vec<u64>,
    hi: u64,
    chunk: Vec<u64>,
    tight: Vec<bool>,
    rows: Vec<u64>,
    level: usize,
    resume: bool,
    done: bool,
    filter: F,
}

impl<F: RowFilter> RowSearch<F> {
    /// Accepted masks in `masks`, in increasing order; `n ≤ 8`.
    pub(crate) fn new(n: usize, masks: Range<u64>, filter: F) -> Self {
        let w = n.saturating_sub(1);
        let lo = (0..n).map(|i| (masks.start >> (i * w)) & low(w)).collect();
        let mut s = RowSearch {
            n,
            w,
            lo,
            hi: masks.end,
            chunk: vec![0; n],
            tight: vec![true; n],
            rows: vec![0; n],
            level: n.saturating_sub(1),
            resume: false,
            done: masks.start >= masks.end,
            filter,
        };
        if n > 0 {
            s.chunk[n - 1] = s.lo[n - 1];
            s.filter.enter(&s.rows, n - 1);
        }
        s
    }

    fn expand(&self, k: usize, c: u64) -> u64 {
        (c & low(k)) | ((c >> k) << (k + 1))
    }

    /// The next accepted assignment of out-rows.
    pub(crate) fn next_rows(&mut self) -> Option<&[u64]> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            // the single empty digraph, mask 0
            self.done = true;
            return Some(&self.rows);
        }
        if self.resume {
            self.resume = false;
            self.chunk[0] += 1;
        }
        let limit = 1u64 << self.w;
        loop {
            let k = self.level;
            let prefix = (k + 1..self.n).fold(0u64, |acc, j| acc | (self.chunk[j] << (j * self.w)));
            let mut found = false;
            while self.chunk[k] < limit {
                let c = self.chunk[k];
                if prefix | (c << (k * self.w)) >= self.hi {
                    self.done = true;
                    return None;
                }
                self.rows[k] = self.expand(k, c);
                if self.filter.accept(&self.rows, k) {
                    found = true;
                    break;
                }
                self.chunk[k] += 1;
            }
            if found {
                if k == 0 {
                    self.resume = true;
                    return Some(&self.rows);
                }
                let t = self.tight[k] && self.chunk[k] == self.lo[k];
                self.level = k - 1;
                self.tight[k - 1] = t;
                self.chunk[k - 1] = if t { self.lo[k - 1] } else { 0 };
                self.filter.enter(&self.rows, k - 1);
            } else {
                if k + 1 == self.n {
                    self.done = true;
                    return None;
                }
                self.level = k + 1;
                self.chunk[k + 1] += 1;
            }
        }
    }
}

/// No directed cycle among nodes `k..n`.
#[derive(Debug, Clone, Default)]
pub(crate) struct Acyclic {
    forbidden: [u64; crate::digraph::MASK_NODES],
}

impl RowFilter for Acyclic {
    fn enter(&mut self, rows: &[u64], k: usize) {
        // nodes above k that already reach k
        let n = rows.len();
        let mut reach = 1u64 << k;
        loop {
            let mut grown = reach;
            for (j, &r) in rows.iter().enumerate().take(n).skip(k + 1) {
                if r & reach != 0 {
                    grown |= 1 << j;
                }
            }
            if grown == reach {
                break;
            }
            reach = grown;
        }
        self.forbidden[k] = reach & !(1 << k);
    }

    fn accept(&self, rows: &[u64], k: usize) -> bool {
        rows[k] & self.forbidden[k] == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Everything;

    impl RowFilter for Everything {
        fn accept(&self, _: &[u64], _: usize) -> bool {
            true
        }
    }

    fn masks<F: RowFilter>(mut s: RowSearch<F>, n: usize) -> Vec<u64> {
        let mut out = Vec::new();
        while let Some(rows) = s.next_rows() {
            out.push(crate::digraph::mask_from_out_rows(&rows[..n]));
        }
        out
    }

    #[test]
    fn unfiltered_search_visits_every_mask_in_order() {
        for n in 0..=3usize {
            let total = 1u64 << (n * n.saturating_sub(1));
            assert_eq!(
                masks(RowSearch::new(n, 0..total, Everything), n),
                (0..total).collect::<Vec<_>>()
            );
            for (a, b) in [(0, 1), (3, 17), (5, 6), (7, 7), (1, total)] {
                if b <= total {
                    let got = masks(RowSearch::new(n, a..b, Everything), n);
                    assert_eq!(got, (a.min(b)..b).collect::<Vec<_>>(), "n={n} {a}..{b}");
                }
            }
        }
    }

    #[test]
    fn acyclic_search_matches_filtering() {
        for n in 1..=5usize {
            let total = 1u64 << (n * (n - 1));
            let mut rows = vec![0; n];
            let expected: Vec<u64> = (0..total)
                .filter(|&m| {
                    crate::digraph::out_rows_from_mask(n, m, &mut rows);
                    crate::digraph::rows_acyclic(&rows)
                })
                .collect();
            assert_eq!(
                masks(RowSearch::new(n, 0..total, Acyclic::default()), n),
                expected
            );
            for cut in [1, total / 3, total / 2 + 5] {
                let mut joined = masks(RowSearch::new(n, 0..cut, Acyclic::default()), n);
                joined.extend(masks(RowSearch::new(n, cut..total, Acyclic::default()), n));
                assert_eq!(joined, expected);
            }
        }
    }
}

//! Slow, obviously-correct reference implementations used as test oracles.
//! Nothing here calls into the library's linear algebra.

#![allow(dead_code)]

/// Dense 0/1 matrix, row-major.
pub type Dense = Vec<Vec<u8>>;

/// Entry `(i, j)` is bit `i * n + j` of `code`.
pub fn dense_from_code(n: usize, code: u64) -> Dense {
    (0..n)
        .map(|i| (0..n).map(|j| ((code >> (i * n + j)) & 1) as u8).collect())
        .collect()
}

/// Row strings in the library's text format: `"110,011,101"`.
pub fn dense_to_text(m: &Dense) -> String {
    m.iter()
        .map(|r| r.iter().map(|&b| char::from(b'0' + b)).collect::<String>())
        .collect::<Vec<_>>()
        .join(",")
}

/// All permutations of `0..n` by Heap's algorithm, with signs.
pub fn signed_perms(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn heap(k: usize, a: &mut Vec<usize>, sign: &mut i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k <= 1 {
            out.push((a.clone(), *sign));
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, a, sign, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            *sign = -*sign;
        }
        heap(k - 1, a, sign, out);
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    let mut sign = 1;
    heap(n, &mut a, &mut sign, &mut out);
    out
}

/// Leibniz expansion over the integers.
pub fn leibniz_det(m: &[Vec<i64>]) -> i64 {
    signed_perms(m.len())
        .iter()
        .map(|(p, s)| s * p.iter().enumerate().map(|(i, &j)| m[i][j]).product::<i64>())
        .sum()
}

pub fn principal_submatrix(m: &Dense, subset: &[usize]) -> Vec<Vec<i64>> {
    subset
        .iter()
        .map(|&i| subset.iter().map(|&j| i64::from(m[i][j])).collect())
        .collect()
}

/// Every nonempty subset of `0..n`, as sorted index lists.
pub fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    (1u32..1 << n)
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

/// Integer principal minors, one per nonempty subset.
pub fn integer_principal_minors(m: &Dense) -> Vec<i64> {
    nonempty_subsets(m.len())
        .iter()
        .map(|s| leibniz_det(&principal_submatrix(m, s)))
        .collect()
}

pub fn all_minors_one_mod2(m: &Dense) -> bool {
    integer_principal_minors(m)
        .iter()
        .all(|d| d.rem_euclid(2) == 1)
}

/// Rank over GF(2) by textbook row reduction.
pub fn rank_gf2(m: &Dense) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] == 1) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[c] == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A digraph (adjacency, no loops) is acyclic iff its adjacency matrix is nilpotent.
pub fn is_acyclic_by_nilpotency(adj: &Dense) -> bool {
    let n = adj.len();
    let mul = |a: &Dense, b: &Dense| -> Dense {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| u8::from((0..n).any(|k| a[i][k] == 1 && b[k][j] == 1)))
                    .collect()
            })
            .collect()
    };
    let mut p = adj.clone();
    for _ in 1..n {
        p = mul(&p, adj);
    }
    n == 0 || p.iter().all(|r| r.iter().all(|&x| x == 0))
}

/// Number of labeled DAGs, by testing every loopless digraph.
pub fn count_dags_by_nilpotency(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len())
        .filter(|&mask| {
            let mut adj = vec![vec![0u8; n]; n];
            for (b, &(i, j)) in pairs.iter().enumerate() {
                adj[i][j] = (mask >> b & 1) as u8;
            }
            is_acyclic_by_nilpotency(&adj)
        })
        .count() as u64
}

/// Facet dimensions, `F_i` then `F_i'`, for the cube: column `i` and `n + i`.
/// A vertex of `Iⁿ` picks one facet from each opposite pair.
pub fn cube_vertices(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .map(|s| {
            (0..n)
                .map(|i| if s >> i & 1 == 0 { i } else { n + i })
                .collect()
        })
        .collect()
}

/// Vertices of `Δ^{d_1} × … × Δ^{d_l}` in the column layout: factor `i` owns
/// `d_i` columns in the leading block (in factor order) and the trailing
/// column `n + i`; a vertex omits exactly one facet of each factor.
pub fn product_vertices(dims: &[usize]) -> Vec<Vec<usize>> {
    let n: usize = dims.iter().sum();
    let mut facets_of = Vec::new();
    let mut offset = 0;
    for (i, &d) in dims.iter().enumerate() {
        let mut f: Vec<usize> = (offset..offset + d).collect();
        f.push(n + i);
        facets_of.push(f);
        offset += d;
    }
    let mut out = vec![Vec::new()];
    for facets in &facets_of {
        let mut next = Vec::new();
        for partial in &out {
            for &omit in facets {
                let mut v = partial.clone();
                v.extend(facets.iter().copied().filter(|&f| f != omit));
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// `λ` (rows = coordinates, columns = facets) is characteristic when the
/// columns at every vertex have full rank.
pub fn vertex_rank_check(lambda: &Dense, vertices: &[Vec<usize>]) -> bool {
    let n = lambda.len();
    vertices.iter().all(|v| {
        let sub: Dense = (0..n)
            .map(|r| v.iter().map(|&c| lambda[r][c]).collect())
            .collect();
        rank_gf2(&sub) == n
    })
}

/// `(E | star)`.
pub fn with_identity(star: &Dense) -> Dense {
    let n = star.len();
    (0..n)
        .map(|i| {
            let mut row: Vec<u8> = (0..n).map(|j| u8::from(i == j)).collect();
            row.extend_from_slice(&star[i]);
            row
        })
        .collect()
}

/// Exact `R_n` by inclusion–exclusion on the set of sources, in `u128`.
pub fn labeled_dags_u128(n: usize) -> u128 {
    let mut binom = vec![vec![0u128; n + 1]; n + 1];
    for i in 0..=n {
        binom[i][0] = 1;
        for k in 1..=i {
            binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
        }
    }
    let mut r = vec![0i128; n + 1];
    r[0] = 1;
    for m in 1..=n {
        let mut acc = 0i128;
        for k in 1..=m {
            let term = binom[m][k] as i128 * (1i128 << (k * (m - k))) * r[m - k];
            acc += if k % 2 == 1 { term } else { -term };
        }
        r[m] = acc;
    }
    r[n] as u128
}

/// All compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

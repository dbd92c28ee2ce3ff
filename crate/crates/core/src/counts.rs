//! Closed-form and recurrence counts, all in exact integer arithmetic.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::digraph::{count_unlabeled_dags, enumerate_dags};
use crate::error::{Error, Result};
use crate::parallel::Workers;

/// Exact nonnegative count.
pub type BigCount = BigUint;

/// Labeled acyclic digraphs `R_n`, `n = 0..7` (Robinson; Stanley).
pub const LABELED_DAG_TABLE: [u64; 8] = [1, 1, 3, 25, 543, 29281, 3781503, 1138779265];

/// `Z₂ⁿ`-equivariant homeomorphism classes of small covers over `Iⁿ`,
/// `n = 0..5`.
pub const EQUIVARIANT_CLASS_TABLE: [u64; 6] = [1, 1, 6, 259, 87360, 236240088];

/// Acyclic digraphs on `n` unlabeled nodes, `n = 0..7` (Robinson). This is
/// an upper bound for the weakly equivariant homeomorphism classes over `Iⁿ`.
pub const UNLABELED_DAG_TABLE: [u64; 8] = [1, 1, 2, 6, 31, 302, 5984, 243668];

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

static R_MEMO: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();

/// `R_n = Σ_{k=1}^{n} (-1)^{k+1} C(n,k) 2^{k(n-k)} R_{n-k}`, `R₀ = 1`.
///
/// Values are memoized process-wide; readers share the table and a single
/// writer extends it.
pub fn r_labeled(n: usize) -> BigCount {
    let memo = R_MEMO.get_or_init(|| RwLock::new(vec![BigUint::one()]));
    if let Some(v) = memo.read().expect("memo lock").get(n) {
        return v.clone();
    }
    let mut table = memo.write().expect("memo lock");
    while table.len() <= n {
        let m = table.len();
        let mut acc = BigInt::zero();
        for k in 1..=m {
            let term = BigInt::from(binomial(m, k) * pow2(k * (m - k)) * &table[m - k]);
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let value = acc
            .to_biguint()
            .expect("the recurrence yields nonnegative counts");
        table.push(value);
    }
    table[n].clone()
}

/// `|GL(n, Z₂)| = Π_{i=0}^{n-1} (2ⁿ - 2ⁱ)`.
pub fn gl2_order(n: usize) -> BigCount {
    (0..n).fold(BigUint::one(), |acc, i| acc * (pow2(n) - pow2(i)))
}

/// `|cf(Iⁿ)^g|` for `g` a product of `k` reflections and no permutation:
/// `|GL(n, Z₂)| · 2^{k(n-k)} · R_{n-k}`.
///
/// A fixed `λ` has reduced submatrix `[[E_k, S], [0, T]]` with `S` arbitrary
/// and `T ∈ M(n-k)`. Elements with a nontrivial permutation fix nothing.
pub fn reflection_fixed_count(n: usize, k: usize) -> BigCount {
    assert!(k <= n, "{k} reflections on I^{n}");
    gl2_order(n) * pow2(k * (n - k)) * r_labeled(n - k)
}

/// `Q_n = Σ_k C(n,k) 2^{k(n-k)} R_k · |GL(n, Z₂)| / (2ⁿ n!)`.
pub fn q_equivariant(n: usize) -> Result<BigCount> {
    let sum: BigUint = (0..=n)
        .map(|k| binomial(n, k) * pow2(k * (n - k)) * r_labeled(k))
        .sum();
    let numerator = sum * gl2_order(n);
    let group = pow2(n) * factorial(n);
    let (q, r) = numerator.div_rem(&group);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!(
            "Burnside numerator {numerator} is not divisible by |Aut| = {group}"
        )));
    }
    Ok(q)
}

/// `(1/|G|) Σ_g |X^g|`, refusing a non-integral average.
pub fn burnside(fixed_sizes: &[BigCount], group_order: &BigCount) -> Result<BigCount> {
    if group_order.is_zero() {
        return Err(Error::InvalidInput("group order must be ≥ 1".into()));
    }
    let sum: BigUint = fixed_sizes.iter().sum();
    let (q, r) = sum.div_rem(group_order);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!(
            "fixed-point total {sum} is not divisible by the group order {group_order}"
        )));
    }
    Ok(q)
}

/// `♯DJ(Π Δ^{nᵢ}) = Σ_{G ∈ 𝒢_l} Π_i (2^{nᵢ} - 1)^{outdeg(vᵢ)}`, summed over the
/// labeled DAGs on `l` nodes.
pub fn dj_product(dims: &[usize], caps: &Caps) -> Result<BigCount> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidInput(
            "a product needs factors of dimension ≥ 1".into(),
        ));
    }
    let weights: Vec<BigUint> = dims.iter().map(|&d| pow2(d) - 1u8).collect();
    let mut total = BigUint::zero();
    for g in enumerate_dags(dims.len(), caps)? {
        total += g
            .outdegrees()
            .iter()
            .zip(&weights)
            .fold(BigUint::one(), |acc, (&deg, w)| acc * w.pow(deg as u32));
    }
    Ok(total)
}

/// Two factors: `1 + (2^{n₁} - 1) + (2^{n₂} - 1)`.
pub fn dj_two_factor_closed_form(n1: usize, n2: usize) -> BigCount {
    BigUint::one() + (pow2(n1) - 1u8) + (pow2(n2) - 1u8)
}

/// Three factors, with `xᵢ = 2^{nᵢ} - 1`:
/// `1 + 2s + s² + e₂ + s·p₂ - p₃`, where `s = Σxᵢ`, `e₂ = Σ_{i<j} xᵢxⱼ`,
/// `p₂ = Σxᵢ²`, `p₃ = Σxᵢ³`.
pub fn dj_three_factor_closed_form(n1: usize, n2: usize, n3: usize) -> BigCount {
    let x: Vec<BigInt> = [n1, n2, n3]
        .iter()
        .map(|&d| BigInt::from(pow2(d)) - 1)
        .collect();
    let s: BigInt = x.iter().sum();
    let e2 = &x[0] * &x[1] + &x[1] * &x[2] + &x[2] * &x[0];
    let p2: BigInt = x.iter().map(|v| v * v).sum();
    let p3: BigInt = x.iter().map(|v| v * v * v).sum();
    let value: BigInt = BigInt::one() + &s * 2 + &s * &s + e2 + &s * p2 - p3;
    value
        .to_biguint()
        .expect("the polynomial is positive at xᵢ ≥ 1")
}

/// How [`t_upper_bound`] obtains its value.
#[derive(Debug, Clone, Copy)]
pub enum BoundSource<'a> {
    /// Only the stored table.
    Table,
    /// Canonical-form enumeration, checked against the table when tabulated.
    Computed {
        caps: &'a Caps,
        workers: &'a Workers,
    },
}

/// Number of acyclic digraphs on `n` unlabeled nodes, the upper bound for the
/// weakly equivariant homeomorphism classes of small covers over `Iⁿ`.
pub fn t_upper_bound(n: usize, source: BoundSource<'_>) -> Result<BigCount> {
    let table = UNLABELED_DAG_TABLE.get(n).map(|&v| BigUint::from(v));
    match source {
        BoundSource::Table => table.ok_or_else(|| {
            Error::InvalidInput(format!(
                "no stored value for n = {n}; the table covers n ≤ {}",
                UNLABELED_DAG_TABLE.len() - 1
            ))
        }),
        BoundSource::Computed { caps, workers } => {
            let computed = count_unlabeled_dags(n, caps, workers)?;
            if let Some(t) = table {
                if t != computed {
                    return Err(Error::Inconsistent(format!(
                        "computed {computed} unlabeled DAGs on {n} nodes, table says {t}"
                    )));
                }
            }
            Ok(computed)
        }
    }
}

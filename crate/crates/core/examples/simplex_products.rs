// D-J classes over products of simplices: the DAG-sum formula, exhaustive
// search over reduced matrices, and the fibers of `ψ`.
//
// `cargo run --example simplex_products -- 2,1,2`

use std::collections::BTreeMap;

use smallcover::{counts, cover, Caps, Digraph, PolytopeSpec, Result, Workers};

pub fn run(dims: &[usize]) -> Result<()> {
    let caps = Caps::default();
    let spec = PolytopeSpec::simplex_product(dims.to_vec())?;
    let formula = counts::dj_product(dims, &caps)?;
    let search = cover::count_reduced_product(&spec, &caps, &Workers::sequential())?;
    println!("{spec}: formula {formula}, exhaustive {search}");
    if let [a, b, c] = dims {
        println!(
            "three-factor closed form: {}",
            counts::dj_three_factor_closed_form(*a, *b, *c)
        );
    }

    let mut fibers: BTreeMap<Digraph, u64> = BTreeMap::new();
    for m in cover::enumerate_reduced_product(&spec, &caps)? {
        *fibers.entry(cover::psi(&m)).or_default() += 1;
    }
    for (g, size) in &fibers {
        println!("  psi^-1 of {:?}: {size}", g.edges());
    }

    for (a, b) in [(1, 1), (1, 2), (2, 2), (3, 5)] {
        println!(
            "simplices({a},{b}): {}",
            counts::dj_two_factor_closed_form(a, b)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let dims: Vec<usize> = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2,1,2".into())
        .split(',')
        .map(|s| s.trim().parse().unwrap_or(1))
        .collect();
    run(&dims)
}

// Equivariant classes over the cube: fixed points of every facet
// symmetry, Burnside's average, and the closed form.
//
// `cargo run --example equivariant_burnside`

use num_bigint::BigUint;
use smallcover::{counts, cover, Caps, CubeSymmetry, Result, Workers};

pub fn run() -> Result<()> {
    let caps = Caps::default();
    let workers = Workers::sequential();
    let n = 3;
    let fixed = cover::fixed_set_sizes(n, &caps, &workers)?;
    println!(
        "|cf(I^{n})| = {}",
        cover::count_cube_characteristic(n, &caps, &workers)?
    );
    for (g, size) in fixed.iter().filter(|(g, _)| g.perm().is_identity()) {
        let k = g.reflection_count();
        println!(
            "  g = {g:<14} fixes {size:>5}   (closed form {})",
            counts::reflection_fixed_count(n, k)
        );
    }
    let moving = fixed
        .iter()
        .filter(|(g, s)| !g.perm().is_identity() && *s != BigUint::ZERO)
        .count();
    println!("  elements with μ ≠ id and a nonzero fixed set: {moving}");

    let sizes: Vec<BigUint> = fixed.into_iter().map(|(_, s)| s).collect();
    let order = BigUint::from(CubeSymmetry::all(n).len());
    println!("Burnside: {} orbits", counts::burnside(&sizes, &order)?);
    println!(
        "brute-force orbits: {}",
        cover::orbit_count_equivariant_bruteforce(n, &caps, &workers)?
    );
    for m in 0..=6 {
        println!("Q_{m} = {}", counts::q_equivariant(m)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}

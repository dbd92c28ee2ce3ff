// Unlabeled DAGs by canonical forms, and the same count as `S_n`
// conjugation orbits on `M(n)`.
//
// `cargo run --release --example unlabeled_bound`

use smallcover::counts::{self, BoundSource};
use smallcover::digraph::{self, canonical_form};
use smallcover::{cover, Caps, Digraph, Perm, Result, Workers};

pub fn run() -> Result<()> {
    let caps = Caps::default();
    let workers = Workers::sequential();
    let path = Digraph::from_edges(3, &[(0, 1), (1, 2)])?;
    let relabeled = path.relabel(&Perm::new(vec![2, 0, 1])?)?;
    println!("{:?} and {:?}", path.edges(), relabeled.edges());
    println!(
        "  canonical forms {} / {}",
        canonical_form(&path, &caps)?,
        canonical_form(&relabeled, &caps)?
    );

    for n in 0..=5 {
        let dags = digraph::count_unlabeled_dags(n, &caps, &workers)?;
        let orbits = cover::sn_conjugation_orbit_count(n, &caps, &workers)?;
        println!("n = {n}: {dags} unlabeled DAGs, {orbits} conjugation orbits on M(n)");
    }
    for n in 6..=7 {
        println!(
            "n = {n}: stored bound {}",
            counts::t_upper_bound(n, BoundSource::Table)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}

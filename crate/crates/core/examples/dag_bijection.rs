// Labeled DAGs and `M(n)` through `B(G) = E + A(G)`, and the two normal
// forms for matrices whose proper principal minors are all 1.
//
// `cargo run --example dag_bijection -- 4`

use std::collections::BTreeSet;

use smallcover::cover::{self, NormalForm};
use smallcover::{counts, digraph, BitMatrix, Caps, Digraph, Result};

pub fn run(n: usize) -> Result<()> {
    let caps = Caps::default();
    let dags: Vec<Digraph> = digraph::enumerate_dags(n, &caps)?.collect();
    let mn: BTreeSet<BitMatrix> = cover::enumerate_mn(n, &caps)?.collect();
    let image: BTreeSet<BitMatrix> = dags.iter().map(cover::phi).collect::<Result<_>>()?;
    println!(
        "n = {n}: {} DAGs, |M(n)| = {}, R_n = {}",
        dags.len(),
        mn.len(),
        counts::r_labeled(n)
    );
    println!("phi is a bijection onto M(n): {}", image == mn);

    let g = Digraph::from_edges(3, &[(2, 0), (0, 1), (2, 1)])?;
    let b = cover::phi(&g)?;
    let mu = g.topo_order()?;
    println!("\nG = {:?}, B(G) = {b}", g.edges());
    println!(
        "topological order {mu} conjugates B(G) to {}",
        b.conjugate_by_perm(&mu)?
    );

    let cyc: BitMatrix = "101,110,011".parse()?;
    match cover::lemma_normal_form(&cyc)? {
        NormalForm::CycleForm(mu) => {
            println!(
                "\n{cyc} has det 0; {mu} brings it to {}",
                cyc.conjugate_by_perm(&mu)?
            )
        }
        NormalForm::Unipotent(mu) => println!("\n{cyc} is unipotent under {mu}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let n = std::env::args()
        .nth(1)
        .map_or(Ok(4), |s| s.parse())
        .unwrap_or(4);
    run(n)
}

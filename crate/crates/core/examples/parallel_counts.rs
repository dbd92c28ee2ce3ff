// Partitioned exhaustive counts on a worker pool. Results are folded in
// partition order, so any job count gives the same answer.
//
// `cargo run --release --example parallel_counts -- 4`

use smallcover::{cover, digraph, Caps, PartitionPlan, Result, Workers};

pub fn run(jobs: usize) -> Result<()> {
    let caps = Caps::default();
    let workers = Workers::new(jobs)?;
    println!("{} worker(s)", workers.jobs());
    for n in 1..=5 {
        let dags = digraph::count_dags(n, &caps, &workers)?;
        let mn = cover::count_mn(n, &caps, &workers)?;
        println!("n = {n}: {dags} DAGs, |M(n)| = {mn}");
    }

    // a hand-built plan over the n = 4 edge masks
    let total = digraph::edge_mask_count(4)?;
    let plan = PartitionPlan::new(total, 5);
    let per_part: Vec<u64> = plan
        .ranges()
        .iter()
        .map(|r| digraph::dags_in_range(4, r.clone()).map(|it| it.count() as u64))
        .collect::<Result<_>>()?;
    println!(
        "n = 4 split into {} ranges: {per_part:?}",
        plan.ranges().len()
    );
    let summed = workers.try_map_reduce(
        &plan,
        |r| Ok(digraph::dags_in_range(4, r)?.count() as u64),
        0,
        |a, b| a + b,
    )?;
    println!("  total {summed}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let jobs = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    run(jobs)
}

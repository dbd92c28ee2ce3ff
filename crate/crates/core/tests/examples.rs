//! Every example compiles as part of this test and runs to completion.

macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(gf2_minors, "gf2_minors.rs");
example!(dag_bijection, "dag_bijection.rs");
example!(equivariant_burnside, "equivariant_burnside.rs");
example!(simplex_products, "simplex_products.rs");
example!(unlabeled_bound, "unlabeled_bound.rs");
example!(parallel_counts, "parallel_counts.rs");
example!(dumps_and_cli, "dumps_and_cli.rs");

#[test]
fn examples_run() {
    gf2_minors::run().unwrap();
    dag_bijection::run(4).unwrap();
    equivariant_burnside::run().unwrap();
    simplex_products::run(&[2, 1, 2]).unwrap();
    unlabeled_bound::run().unwrap();
    parallel_counts::run(3).unwrap();
    dumps_and_cli::run().unwrap();
}

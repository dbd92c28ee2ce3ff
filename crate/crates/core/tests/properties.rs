use num_bigint::BigInt;
use proptest::prelude::*;
use smallcover::cover::{self, CharMatrix};
use smallcover::digraph::canonical_form;
use smallcover::BitMatrix;
use smallcover::{Caps, CubeSymmetry, Digraph, Perm, PolytopeSpec, ReducedMatrix};

fn square(max: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(0u64..1 << n, n)
            .prop_map(move |rows| BitMatrix::from_rows(n, rows).unwrap())
    })
}

fn perm_of(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::new(v).unwrap())
}

fn matrix_and_perm(max: usize) -> impl Strategy<Value = (BitMatrix, Perm)> {
    square(max).prop_flat_map(|m| {
        let n = m.n_rows();
        (Just(m), perm_of(n))
    })
}

fn dag(max: usize) -> impl Strategy<Value = Digraph> {
    // random upper-triangular edges, then a random relabeling
    (1..=max).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            perm_of(n),
        )
            .prop_map(move |(bits, p)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if bits[k] {
                            edges.push((p.apply(i), p.apply(j)));
                        }
                        k += 1;
                    }
                }
                Digraph::from_edges(n, &edges).unwrap()
            })
    })
}

fn symmetry_of(n: usize) -> impl Strategy<Value = CubeSymmetry> {
    (perm_of(n), 0u64..1 << n).prop_map(|(p, e)| CubeSymmetry::new(p, e).unwrap())
}

proptest! {
    #[test]
    fn gf2_minors_are_integer_minors_mod_2(m in square(7), subset_bits in 1u32..128) {
        let n = m.n_rows();
        let subset: Vec<usize> = (0..n).filter(|&i| subset_bits >> i & 1 == 1).collect();
        prop_assume!(!subset.is_empty());
        let int = m.principal_minor_int(&subset).unwrap();
        let parity = int.magnitude().bit(0);
        prop_assert_eq!(m.principal_minor_gf2(&subset).unwrap(), parity);
    }

    #[test]
    fn conjugation_preserves_minor_multiset_and_char_poly((m, p) in matrix_and_perm(7)) {
        let c = m.conjugate_by_perm(&p).unwrap();
        prop_assert_eq!(c.all_principal_minors_one().unwrap(), m.all_principal_minors_one().unwrap());
        prop_assert_eq!(c.det_gf2().unwrap(), m.det_gf2().unwrap());
        prop_assert_eq!(c.char_poly_int().unwrap(), m.char_poly_int().unwrap());
    }

    #[test]
    fn conjugation_composes((m, p) in matrix_and_perm(6), seed in any::<u64>()) {
        let n = m.n_rows();
        let count = (1..=n).product::<usize>() as u64;
        let q = Perm::all(n).nth((seed % count) as usize).unwrap();
        let twice = m.conjugate_by_perm(&p).unwrap().conjugate_by_perm(&q).unwrap();
        prop_assert_eq!(twice, m.conjugate_by_perm(&p.compose(&q).unwrap()).unwrap());
    }

    #[test]
    fn inverse_is_two_sided(m in square(8)) {
        match m.inverse_gf2() {
            Ok(inv) => {
                let e = BitMatrix::identity(m.n_rows()).unwrap();
                prop_assert_eq!(&m.mul_gf2(&inv).unwrap(), &e);
                prop_assert_eq!(&inv.mul_gf2(&m).unwrap(), &e);
                prop_assert!(m.det_gf2().unwrap());
            }
            Err(_) => prop_assert!(!m.det_gf2().unwrap()),
        }
    }

    #[test]
    fn text_and_key_round_trip(m in square(8)) {
        let parsed: BitMatrix = m.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &m);
        let n = m.n_rows();
        prop_assert_eq!(BitMatrix::from_key(n, n, m.to_key().unwrap()).unwrap(), m);
    }

    #[test]
    fn dags_map_into_mn_and_back(g in dag(7)) {
        prop_assert!(g.is_acyclic());
        let b = cover::phi(&g).unwrap();
        prop_assert!(b.all_principal_minors_one().unwrap());
        prop_assert_eq!(&cover::phi_inv(&b).unwrap(), &g);
        let mu = g.topo_order().unwrap();
        prop_assert!(b.conjugate_by_perm(&mu).unwrap().is_unipotent_upper_triangular());
    }

    #[test]
    fn char_poly_of_mn_is_a_power_of_x_minus_1(g in dag(6)) {
        let n = g.node_count();
        let b = cover::phi(&g).unwrap();
        let expected: Vec<BigInt> = (0..=n).map(|k| {
            let c = BigInt::from(smallcover::counts::binomial(n, k));
            if k % 2 == 0 { c } else { -c }
        }).collect();
        prop_assert_eq!(b.char_poly_int().unwrap(), expected);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(g in dag(6), seed in any::<u64>()) {
        let n = g.node_count();
        let all: Vec<Perm> = Perm::all(n).collect();
        let p = &all[(seed % all.len() as u64) as usize];
        let caps = Caps::long_runs();
        let h = g.relabel(p).unwrap();
        prop_assert_eq!(canonical_form(&g, &caps).unwrap(), canonical_form(&h, &caps).unwrap());
        prop_assert_eq!(h.relabel(&p.inverse()).unwrap(), g);
    }

    #[test]
    fn digraph_text_and_mask_round_trip(g in dag(8)) {
        let parsed: Digraph = g.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &g);
        let mask = g.edge_mask().unwrap();
        prop_assert_eq!(Digraph::from_mask(g.node_count(), mask).unwrap(), g);
    }

    #[test]
    fn symmetry_group_law(g in symmetry_of(4), h in symmetry_of(4), k in symmetry_of(4)) {
        let gh_k = g.compose(&h).unwrap().compose(&k).unwrap();
        let g_hk = g.compose(&h.compose(&k).unwrap()).unwrap();
        prop_assert_eq!(&gh_k, &g_hk);
        prop_assert_eq!(g.compose(&g.inverse()).unwrap(), CubeSymmetry::identity(4));
        for c in 0..8 {
            prop_assert_eq!(g.compose(&h).unwrap().facet_image(c), g.facet_image(h.facet_image(c)));
        }
    }

    #[test]
    fn symmetries_preserve_characteristic_matrices(g in dag(4), seed in any::<u64>()) {
        let n = g.node_count();
        let star = cover::phi(&g).unwrap();
        let spec = PolytopeSpec::cube(n).unwrap();
        let lambda = ReducedMatrix::new(spec, star).unwrap().refined_form();
        let all = CubeSymmetry::all(n);
        let sym = &all[(seed % all.len() as u64) as usize];
        let moved: CharMatrix = cover::symmetry_apply(&lambda, sym).unwrap();
        prop_assert!(cover::is_characteristic(moved.matrix(), moved.spec()).unwrap());
        let refined = moved.refine();
        prop_assert!(refined.matrix().all_principal_minors_one().unwrap());
    }

    #[test]
    fn product_members_pass_the_vertex_test(dims in prop::collection::vec(1usize..=2, 2..=3), pick in any::<prop::sample::Index>()) {
        let spec = PolytopeSpec::simplex_product(dims.clone()).unwrap();
        let members: Vec<ReducedMatrix> = cover::enumerate_reduced_product(&spec, &Caps::default()).unwrap().collect();
        let m = &members[pick.index(members.len())];
        let n = spec.dim();
        let full = BitMatrix::identity(n).unwrap().hstack(m.matrix()).unwrap();
        prop_assert!(cover::is_characteristic(&full, &spec).unwrap());
        prop_assert!(cover::psi(m).is_acyclic());
    }
}

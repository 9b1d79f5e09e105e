mod common;

use chromzero::bounds::cstar_graph;
use chromzero::chromatic::chromatic_polynomial;
use chromzero::graph::{canonical_form, neighborhood_profile, Graph};
use chromzero::polymer::penrose_report;
use chromzero::roots::polynomial_roots;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        prop::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn profile_is_label_free((g, perm) in relabelled(8)) {
        prop_assume!(g.edge_count() > 0);
        prop_assert_eq!(neighborhood_profile(&g).unwrap(), neighborhood_profile(&g.relabel(&perm)).unwrap());
    }

    #[test]
    fn canonical_form_is_label_free((g, perm) in relabelled(8)) {
        prop_assert_eq!(canonical_form(&g, None), canonical_form(&g.relabel(&perm), None));
    }

    #[test]
    fn deletion_contraction_identity(g in graph(8), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let whole = chromatic_polynomial(&g).unwrap();
        let split = &chromatic_polynomial(&g.without_edge(u, v)).unwrap()
            - &chromatic_polynomial(&g.contract_edge(u, v)).unwrap();
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn chromatic_polynomial_shape(g in graph(8)) {
        let p = chromatic_polynomial(&g).unwrap();
        prop_assert_eq!(p.degree(), Some(g.vertex_count()));
        prop_assert!(p.is_monic() && p.signs_alternate());
        prop_assert_eq!(-p.coeff(g.vertex_count() - 1), num_bigint::BigInt::from(g.edge_count()));
    }

    #[test]
    fn penrose_count_is_root_free((g, perm) in relabelled(6)) {
        prop_assume!(g.is_connected());
        let a = penrose_report(&g).unwrap();
        let b = penrose_report(&g.relabel(&perm)).unwrap();
        prop_assert_eq!(a.penrose_count, b.penrose_count);
        prop_assert!(a.identity_holds(g.vertex_count()) && a.chain_holds());
    }

    #[test]
    fn roots_stay_inside_the_graph_bound(g in graph(8)) {
        prop_assume!(g.edge_count() > 0);
        let report = cstar_graph(&g).unwrap();
        prop_assert!(report.ordering_holds());
        let roots = polynomial_roots(&chromatic_polynomial(&g).unwrap(), 1e-10).unwrap();
        prop_assert!(roots.max_modulus < report.reference_bound());
    }
}

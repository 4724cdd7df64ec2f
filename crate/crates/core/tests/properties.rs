mod common;

use caw_core::{
    closure_of_graph, coherent_closure, count_automorphisms, decompose_caw, edge_level_partition, format,
    is_regular_equivalent, predicted_aut_order, quotient_graph, schemes_isomorphic, twin_relation,
    CoherentConfiguration, Decomposition, Graph, RelationSet,
};
use common::{arc_model, graph_from_mask, reducible_arc_model};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9, any::<u64>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

fn small_scheme() -> impl Strategy<Value = CoherentConfiguration> {
    (1usize..=5, any::<u64>()).prop_map(|(n, mask)| closure_of_graph(&graph_from_mask(n, mask)))
}

fn association_factor() -> impl Strategy<Value = CoherentConfiguration> {
    prop_oneof![
        (2usize..=4).prop_map(|n| CoherentConfiguration::rank2(n).unwrap()),
        (3usize..=5).prop_map(|n| CoherentConfiguration::dihedral(n).unwrap()),
        Just(closure_of_graph(&Graph::petersen())),
    ]
}

fn elementary_params() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..=12, 0usize..=5, 1usize..=4)
        .prop_filter("2k+1 < m, m*r <= 24", |&(m, k, r)| 2 * k + 1 < m && m * r <= 24)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn twin_classes_are_modules(g in small_graph()) {
        let twins = twin_relation(&g);
        for class in twins.classes() {
            for &u in class {
                for &v in class {
                    prop_assert!(u == v || g.adjacent(u, v));
                }
                for w in 0..g.n() {
                    if !class.contains(&w) {
                        prop_assert_eq!(g.adjacent(u, w), g.adjacent(class[0], w));
                    }
                }
            }
        }
        let q = quotient_graph(&g, &twins).unwrap();
        prop_assert_eq!(twin_relation(&q).len(), q.n());
    }

    #[test]
    fn edge_levels_partition_edges_into_unions_of_colors(g in small_graph()) {
        let levels = edge_level_partition(&g);
        let mut all: Vec<(usize, usize)> = levels.values().flatten().copied().collect();
        all.sort_unstable();
        let total = all.len();
        all.dedup();
        prop_assert_eq!(all.len(), total);
        prop_assert_eq!(all, g.edges());

        let cfg = closure_of_graph(&g);
        for (&level, edges) in &levels {
            for &(u, v) in edges {
                let c = cfg.color(u, v);
                for x in 0..g.n() {
                    for y in 0..g.n() {
                        if cfg.color(x, y) == c {
                            prop_assert!(g.adjacent(x, y));
                            prop_assert_eq!(g.common_neighbors(x, y), level);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closure_is_coherent_idempotent_and_monotone(g in small_graph(), extra in any::<u64>()) {
        let cfg = closure_of_graph(&g);
        prop_assert_eq!(cfg.verify(), Ok(()));
        let n = g.n();

        let mut own = RelationSet::new(n);
        for c in 0..cfg.rank() {
            own.push(cfg.colors().iter().map(|&x| x == c).collect()).unwrap();
        }
        prop_assert_eq!(&coherent_closure(&own).unwrap(), &cfg);

        let mut more = RelationSet::new(n);
        more.push((0..n * n).map(|i| g.adjacent(i / n, i % n)).collect()).unwrap();
        more.push((0..n * n).map(|i| extra >> (i % 64) & 1 == 1).collect()).unwrap();
        let finer = coherent_closure(&more).unwrap();
        prop_assert!(CoherentConfiguration::is_fusion_of(&cfg, &finer).unwrap());
    }

    #[test]
    fn wreath_products_are_coherent(inner in small_scheme(), outer in small_scheme()) {
        let w = CoherentConfiguration::wreath_product(&inner, &outer);
        prop_assert_eq!(w.verify(), Ok(()));
        prop_assert_eq!(w.n(), inner.n() * outer.n());
        let sizes: usize = (0..w.rank()).map(|c| w.color_size(c)).sum();
        prop_assert_eq!(sizes, w.n() * w.n());
        if inner.is_association() && outer.is_association() {
            prop_assert!(w.is_association());
            prop_assert_eq!(w.rank(), inner.rank() + outer.rank() - 1);
            let valencies: usize = (0..w.rank()).map(|c| w.valency(c)).sum();
            prop_assert_eq!(valencies, w.n());
        }
    }

    #[test]
    fn pairing_symmetry(s in small_scheme()) {
        let rank = s.rank();
        for r in 0..rank {
            for t in 0..rank {
                for u in 0..rank {
                    prop_assert_eq!(
                        s.intersection_number(r, u, t).unwrap(),
                        s.intersection_number(s.pairing(u), s.pairing(r), s.pairing(t)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn wreath_factors_are_recovered(inner in association_factor(), outer in association_factor()) {
        prop_assume!(inner.n() * outer.n() <= 30);
        let w = CoherentConfiguration::wreath_product(&inner, &outer);
        let fibers = w
            .equivalences(32)
            .unwrap()
            .into_iter()
            .find(|e| e.partition().classes().iter().all(|c| c.len() == inner.n())
                && e.partition().classes()[0] == (0..inner.n()).collect::<Vec<_>>());
        let fibers = fibers.expect("fiber equivalence");
        let restricted = w.restriction(&fibers.partition().classes()[0]).unwrap();
        prop_assert!(!matches!(schemes_isomorphic(&restricted, &inner), caw_core::Verdict::NotIsomorphic));
        let quotient = w.quotient(&fibers).unwrap();
        prop_assert!(!matches!(schemes_isomorphic(&quotient, &outer), caw_core::Verdict::NotIsomorphic));
    }

    #[test]
    fn graph_format_round_trip(g in small_graph()) {
        let text = format::write_graph(&g);
        let back = format::parse_graph(&text).unwrap();
        prop_assert_eq!(format::write_graph(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn scheme_format_round_trip(s in small_scheme()) {
        let text = format::write_scheme(&s);
        prop_assert_eq!(format::parse_scheme(&text).unwrap(), s);
    }

    #[test]
    fn arc_format_round_trip(seed in any::<u64>(), n in 2usize..=10) {
        let f = arc_model(seed, n);
        let text = format::write_arc_model(&f);
        prop_assert_eq!(format::parse_arc_model(&text).unwrap(), f);
    }

    #[test]
    fn reduce_preserves_graph(seed in any::<u64>()) {
        let f = reducible_arc_model(seed, 10);
        let g = f.intersection_graph();
        prop_assert!(caw_core::check_neighborhood_condition(&g).holds());
        let reduced = f.reduce().unwrap();
        prop_assert_eq!(&reduced.arc_function().intersection_graph(), &g);
        prop_assert!(reduced.degree_check());
        // regular and twin-free, hence elementary with k = |f(v)| - 1
        let w = caw_core::is_elementary_caw(&g).expect("elementary");
        prop_assert!(reduced.arc_function().arcs().iter().all(|a| a.size == w.k + 1));
    }

    #[test]
    fn expansion_keeps_graph(seed in any::<u64>(), n in 2usize..=10, steps in 1usize..=3) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let f = caw_core::ArcFunction::random(n, &mut rng);
        let mut e = f.clone();
        for _ in 0..steps {
            e = e.random_expansion(&mut rng);
        }
        prop_assert_eq!(e.intersection_graph(), f.intersection_graph());
    }

    #[test]
    fn regularity_matches_neighborhood_condition(seed in any::<u64>(), n in 2usize..=10) {
        let g = arc_model(seed, n).intersection_graph();
        prop_assume!(g.edge_count() > 0 && twin_relation(&g).len() == g.n());
        prop_assert!(is_regular_equivalent(&g).is_ok());
    }

    #[test]
    fn association_arc_graphs_decompose(seed in any::<u64>(), n in 2usize..=8) {
        let g = arc_model(seed, n).intersection_graph();
        let association = closure_of_graph(&g).is_association();
        let d = decompose_caw(&g);
        prop_assert_eq!(association, d.is_ok());
        if let Ok(d) = d {
            prop_assert!(d.verify(&g));
        }
    }

    #[test]
    fn decomposition_round_trip((m, k, r) in elementary_params(), shuffle in any::<u64>()) {
        let model = Decomposition { m, k, r, relabeling: Vec::new() }.model_graph().unwrap();
        let n = model.n();
        // deterministic shuffle from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = shuffle;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let g = model.relabel(&perm).unwrap();
        let d = decompose_caw(&g).unwrap();
        prop_assert_eq!((d.m, d.k, d.r), (m, k, r));
        prop_assert!(d.verify(&g));
    }

    #[test]
    fn automorphisms_match_prediction((m, k, r) in elementary_params()) {
        prop_assume!(m * r <= 12);
        let g = Decomposition { m, k, r, relabeling: Vec::new() }.model_graph().unwrap();
        let d = decompose_caw(&g).unwrap();
        prop_assert_eq!(
            count_automorphisms(&g, 12).unwrap(),
            predicted_aut_order(d.m, d.k, d.r).unwrap()
        );
    }
}

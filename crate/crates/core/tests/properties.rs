use edgescm::decide::{is_cm, is_sequentially_cm, scm_with_budget, sufficient_scm};
use edgescm::harness::campaign::{evaluate, hypothesis, t37_sides, Tally};
use edgescm::homology::{has_linear_resolution, FieldSpec};
use edgescm::monomial::dual_component;
use edgescm::quotients::{
    dual_degree_range, find_order, graph_has_dlq, search_oracle, verify_order, whisker_order, DlqCache,
};
use edgescm::harness::TheoremId;
use edgescm::{Graph, VarSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VarSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), 0..(1u64 << n)).prop_map(|(g, bits)| (g, VarSet::from_bits(bits)))
    })
}

fn with_isolated(g: &Graph, extra: usize) -> Graph {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    Graph::from_edges(n + extra, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isolated_vertices_do_not_change_dlq(g in graph(6), extra in 1usize..3) {
        prop_assert_eq!(graph_has_dlq(&g), graph_has_dlq(&with_isolated(&g, extra)));
    }

    #[test]
    fn dlq_components_have_linear_resolutions(g in graph(6)) {
        for d in dual_degree_range(&g) {
            let component = dual_component(&g, d);
            if let Some(q) = find_order(&component) {
                prop_assert!(verify_order(&q).unwrap());
                for f in [FieldSpec::GF2, FieldSpec::Rationals] {
                    prop_assert!(has_linear_resolution(&component, f).unwrap());
                }
            }
        }
    }

    #[test]
    fn whisker_order_verifies_when_sub_orders_exist(h in graph(7), base_seed in any::<usize>()) {
        let n = h.vertex_count();
        let base = base_seed % n;
        let (k, map) = h.add_whiskers(VarSet::singleton(base)).unwrap();
        let tip = map.tips().first().unwrap();
        for d in dual_degree_range(&k) {
            let mut missing = false;
            let mut oracle = |k: &Graph, within: VarSet, e: usize| {
                let r = search_oracle(k, within, e);
                missing |= r.is_none();
                r
            };
            let q = whisker_order(&k, tip, d, &mut oracle).unwrap();
            if !missing {
                prop_assert!(verify_order(&q).unwrap(), "degree {} of {:?}", d, k);
            }
        }
    }

    #[test]
    fn whiskered_dlq_equivalence(pair in graph_and_set(6)) {
        let (g, s) = pair;
        let (w, _) = g.add_whiskers(s).unwrap();
        let mut cache = DlqCache::new();
        let (lhs, rhs) = t37_sides(&g, s, &w, &mut cache);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn whisker_lemma_by_enumeration(pair in graph_and_set(6)) {
        let (g, s) = pair;
        prop_assume!(!s.is_empty() && g.vertex_count() + s.len() <= 9);
        let (w, map) = g.add_whiskers(s).unwrap();
        let tips = map.tips();
        let (last_base, last_tip) = (s.last().unwrap(), tips.last().unwrap());
        prop_assert_eq!(map.tip_of(last_base), Some(last_tip));
        let mut cache = DlqCache::new();
        let allowed = w.vertices().without(last_tip).without(last_base);
        let hypothesis = cache.all_induced_have_dlq(&w, tips.without(last_tip), allowed);
        if hypothesis {
            prop_assert!(cache.all_induced_have_dlq(&w, tips, w.vertices()));
        }
    }

    #[test]
    fn certificate_and_homology_paths_agree(g in graph(7)) {
        let searched = is_sequentially_cm(&g, FieldSpec::GF2);
        let homology_only = scm_with_budget(&g, FieldSpec::GF2, 0);
        prop_assert_eq!(searched.value, homology_only.value);
    }

    #[test]
    fn cm_implies_scm_and_unmixed(g in graph(7)) {
        let cm = is_cm(&g, FieldSpec::GF2);
        if cm.value {
            prop_assert!(is_sequentially_cm(&g, FieldSpec::GF2).value);
            prop_assert!(g.is_unmixed());
        }
    }

    #[test]
    fn sufficient_conditions_imply_scm(pair in graph_and_set(7)) {
        let (g, s) = pair;
        if sufficient_scm(&g, s).unwrap().is_some() {
            let (w, _) = g.add_whiskers(s).unwrap();
            prop_assert!(is_sequentially_cm(&w, FieldSpec::GF2).value);
        }
    }
}

fn cycle_with_extra(k: usize, extra_edges: &[(usize, usize)], extra: usize) -> (Graph, VarSet) {
    let n = k + extra;
    let mut g = Graph::new(n).unwrap();
    for i in 0..k {
        g.add_edge(i, (i + 1) % k).unwrap();
    }
    for &(u, v) in extra_edges {
        if u != v && !g.has_edge(u % n, v % n) && (u % n >= k || v % n >= k) {
            g.add_edge(u % n, v % n).unwrap();
        }
    }
    (g, (k..n).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn long_cycle_remainders_stay_non_scm(
        k in prop::sample::select(vec![4usize, 6, 7]),
        extra in 0usize..3,
        edges in proptest::collection::vec((0usize..10, 0usize..10), 0..6),
    ) {
        let (g, s) = cycle_with_extra(k, &edges, extra);
        prop_assume!(hypothesis(TheoremId::C42, &g, s, FieldSpec::GF2));
        let mut tally = Tally::default();
        let mut cache = DlqCache::new();
        let r = evaluate(TheoremId::C42, &g, s, &[FieldSpec::GF2, FieldSpec::Rationals], &mut tally, &mut cache);
        prop_assert!(r.is_ok(), "{:?}", r);
        prop_assert_eq!(tally.lift_checks, 2);
    }
}

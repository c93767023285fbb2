use k4bip_core::cut::bipartize;
use k4bip_core::edgelist;
use k4bip_core::generators::{
    blowup, contiguous_classes, random_k4free_process, random_tripartite,
};
use k4bip_core::oracle::exact_max_cut;
use k4bip_core::rational::{int, ratio};
use k4bip_core::regularity::{hfree_bipartize, Mode, Partition};
use k4bip_core::rng::SeededRng;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bipartize_never_beats_the_oracle(n in 2usize..15, seed in any::<u64>()) {
        let g = random_k4free_process(n, None, seed);
        let (cert, report) = bipartize(&g).unwrap();
        let oracle = exact_max_cut(&g, 20).unwrap();
        prop_assert!(cert.verify(&g));
        prop_assert!(cert.len() >= oracle.min_deletions);
        prop_assert!(9 * cert.len() <= n * n);
        prop_assert!(report.violations().is_empty());
    }

    #[test]
    fn analysis_survives_edge_list_round_trip(n in 3usize..25, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_tripartite(n, p, seed).unwrap();
        let h = edgelist::parse(&edgelist::write(&g)).unwrap();
        prop_assert_eq!(&g, &h);
        let (a, _) = bipartize(&g).unwrap();
        let (b, _) = bipartize(&h).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn relabeling_preserves_deletion_count_on_extremal_graphs(t in 1usize..5, seed in any::<u64>()) {
        let g = k4bip_core::generators::complete_multipartite(&[t, t, t]);
        let mut perm: Vec<usize> = (0..3 * t).collect();
        SeededRng::new(seed).shuffle(&mut perm);
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(bipartize(&h).unwrap().0.len(), t * t);
    }

    #[test]
    fn blowups_lift_the_base_certificate(k in 1usize..7, t in 1usize..4, seed in any::<u64>()) {
        let base = random_k4free_process(k, None, seed);
        let g = blowup(&base, t).unwrap();
        let p = Partition::new(contiguous_classes(&vec![t; k]), ratio(1, 10), ratio(1, 2));
        let r = hfree_bipartize(&g, &p, Mode::Exact).unwrap();
        let (base_cert, _) = bipartize(&base).unwrap();
        prop_assert_eq!(r.reduced_edges, base.edges());
        prop_assert_eq!(r.certificate.len(), base_cert.len() * t * t);
        prop_assert!(r.certificate.verify(&g));
        prop_assert!(int(r.certificate.len()) <= r.accounting_bound);
    }
}

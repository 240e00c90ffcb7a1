use proptest::prelude::*;

use oriented_diameter::hardness::{partition_dp, PartitionInstance};
use oriented_diameter::io::{parse_graph, write_graph};
use oriented_diameter::oriented::{directed_diameter, is_strong};
use oriented_diameter::planar_orient::{improved_bound, improved_orient};
use oriented_diameter::schnyder::{best_realizer, initial_orient};
use oriented_diameter::separator::cycle_separator;
use oriented_diameter::PlaneGraph;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_and_text_roundtrip(n in 4usize..120, seed in any::<u64>()) {
        let g = PlaneGraph::random_triangulation(n, seed).unwrap();
        prop_assert_eq!(g.edge_count(), 3 * n - 6);
        prop_assert_eq!(g.face_count(), 2 * n - 4);
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn realizer_is_valid(n in 4usize..150, seed in any::<u64>()) {
        let g = PlaneGraph::random_triangulation(n, seed).unwrap();
        let (r, report) = best_realizer(&g).unwrap();
        prop_assert!(r.validate(&g).is_ok());
        prop_assert!(report.identity_holds);
    }

    #[test]
    fn initial_meets_its_bound(n in 4usize..150, seed in any::<u64>()) {
        let g = PlaneGraph::random_triangulation(n, seed).unwrap();
        let init = initial_orient(&g).unwrap();
        let d = directed_diameter(&g, &init.orientation).unwrap().expect("strong");
        prop_assert!(d <= init.bound);
    }

    #[test]
    fn separator_is_balanced(n in 4usize..300, seed in any::<u64>()) {
        let g = PlaneGraph::random_triangulation(n, seed).unwrap();
        let s = cycle_separator(&g).unwrap();
        prop_assert!(s.is_balanced());
        prop_assert_eq!(s.len() + s.inside.len() + s.outside.len(), n);
    }

    #[test]
    fn improved_is_strong_and_bounded(n in 4usize..300, seed in any::<u64>()) {
        let g = PlaneGraph::random_triangulation(n, seed).unwrap();
        let o = improved_orient(&g).unwrap();
        prop_assert!(is_strong(&g, &o).unwrap());
        let d = directed_diameter(&g, &o).unwrap().unwrap();
        prop_assert!(d <= improved_bound(n, 6.0));
    }

    #[test]
    fn partition_dp_splits_evenly(values in prop::collection::vec(1u64..20, 1..10)) {
        let inst = PartitionInstance::new(values.clone()).unwrap();
        if let Some((a, b)) = partition_dp(&inst).unwrap() {
            let sa: u64 = a.iter().map(|&i| values[i]).sum();
            let sb: u64 = b.iter().map(|&i| values[i]).sum();
            prop_assert_eq!(sa, sb);
            prop_assert_eq!(a.len() + b.len(), values.len());
        } else {
            let total: u64 = values.iter().sum();
            let hit = (0u32..1 << values.len()).any(|mask| {
                let s: u64 = (0..values.len()).filter(|i| mask >> i & 1 == 1).map(|i| values[i]).sum();
                2 * s == total
            });
            prop_assert!(!hit);
        }
    }
}

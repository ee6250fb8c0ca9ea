use proptest::prelude::*;
use ribbon::bijections::{phi, phi_inverse, WeakComposition};
use ribbon::tableaux::{enumerate_bst, enumerate_syt_tuples, littlewood_inverse, littlewood_map};
use ribbon::{Partition, PartitionTuple};

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_size, 0..=max_size).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&x| {
            total += x;
            total <= max_size
        });
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn core_and_quotient_determine_the_partition(l in partition(24), k in 1usize..6) {
        let core = l.k_core(k).unwrap();
        let q = l.k_quotient(k).unwrap();
        prop_assert_eq!(core.size() + k * q.size(), l.size());
        if core.is_empty() {
            prop_assert_eq!(Partition::from_quotient(&q, k).unwrap(), l);
        }
    }

    #[test]
    fn removing_strips_keeps_the_core(l in partition(16), k in 1usize..5) {
        let core = l.k_core(k).unwrap();
        for (_, inner) in l.removable_strips(k).unwrap() {
            prop_assert_eq!(inner.k_core(k).unwrap(), core.clone());
        }
    }

    #[test]
    fn littlewood_round_trip(l in partition(10), k in 1usize..4) {
        for b in enumerate_bst(&l, k).take(40) {
            let t = littlewood_map(&b).unwrap();
            prop_assert_eq!(littlewood_inverse(&t, k).unwrap(), b);
        }
    }

    #[test]
    fn phi_round_trip(
        shapes in prop::collection::vec(partition(3), 1..4),
        weights in prop::collection::vec(0usize..4, 9),
    ) {
        let shapes = PartitionTuple::new(shapes);
        let n = shapes.size();
        prop_assume!(n > 0);
        let alpha = WeakComposition::new(weights[..n - 1].to_vec());
        for t in enumerate_syt_tuples(&shapes).take(20) {
            let s = phi(&alpha, &t).unwrap();
            let (a, u) = phi_inverse(&s).unwrap();
            prop_assert_eq!(&a, &alpha);
            prop_assert_eq!(u, t);
        }
    }
}

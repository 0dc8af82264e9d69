//! Randomized invariants over the whole public surface, cross-checked
//! against the brute-force oracles in `common`.

mod common;

use altperm_core::{
    avoids, contains_pattern, corank_forward, corank_inverse, corank_profile,
    corank_target_pattern, count_avoiders, count_avoiders_partitioned, is_alternating,
    lis_length, rank_profile, west_forward, west_inverse, west_target_pattern, Pattern,
    Permutation,
};
use proptest::prelude::*;

fn small_permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|values| Permutation::new(values).expect("shuffled identity"))
    })
}

fn small_pattern(max_k: usize) -> impl Strategy<Value = Pattern> {
    (1..=max_k).prop_flat_map(|k| {
        Just((1..=k as u32).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|values| Pattern::new(values).expect("shuffled identity"))
    })
}

proptest! {
    #[test]
    fn reverse_complement_is_an_involution(p in small_permutation(9)) {
        prop_assert_eq!(p.reverse_complement().reverse_complement(), p);
    }

    #[test]
    fn rank_corank_and_lis_agree(p in small_permutation(9)) {
        let lis = lis_length(&p);
        prop_assert_eq!(rank_profile(&p).max_rank(), lis);
        prop_assert_eq!(corank_profile(&p).max_corank(), lis);
        prop_assert_eq!(common::lis_by_dp(&p), lis);
    }

    #[test]
    fn equal_rank_classes_decrease_left_to_right(p in small_permutation(9)) {
        let ranks = rank_profile(&p);
        for r in 1..=ranks.max_rank() {
            let class: Vec<u32> = ranks.positions_with_rank(r).map(|i| p.values()[i]).collect();
            prop_assert!(
                class.windows(2).all(|w| w[0] > w[1]),
                "rank-{} class not decreasing in {}", r, p
            );
        }
        let coranks = corank_profile(&p);
        for r in 1..=coranks.max_corank() {
            let class: Vec<u32> = coranks.positions_with_corank(r).map(|i| p.values()[i]).collect();
            prop_assert!(
                class.windows(2).all(|w| w[0] > w[1]),
                "co-rank-{} class not decreasing in {}", r, p
            );
        }
    }

    #[test]
    fn corank_mirrors_rank_of_reverse_complement(p in small_permutation(9)) {
        let n = p.len();
        let coranks = corank_profile(&p);
        let rc_ranks = rank_profile(&p.reverse_complement());
        for i in 0..n {
            prop_assert_eq!(coranks.coranks()[i], rc_ranks.ranks()[n - 1 - i]);
        }
    }

    #[test]
    fn increasing_avoidance_equals_rank_bound(p in small_permutation(8), k in 2usize..=6) {
        prop_assert_eq!(
            avoids(&p, &Pattern::increasing(k)),
            rank_profile(&p).max_rank() <= k - 1
        );
    }

    #[test]
    fn alternation_means_ascents_exactly_at_odd_positions(p in small_permutation(9)) {
        let ascents: Vec<usize> = p
            .values()
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1])
            .map(|(i, _)| i + 1)
            .collect();
        let odd_positions: Vec<usize> = (1..p.len()).filter(|i| i % 2 == 1).collect();
        prop_assert_eq!(is_alternating(&p), ascents == odd_positions);
    }

    #[test]
    fn containment_matches_subset_oracle(p in small_permutation(7), q in small_pattern(4)) {
        prop_assert_eq!(contains_pattern(&p, &q), common::contains_by_subsets(&p, &q));
    }

    #[test]
    fn rank_map_round_trips_and_traces_consistently(p in small_permutation(8), k in 3usize..=5) {
        if avoids(&p, &Pattern::increasing(k)) {
            let (image, trace) = west_forward(&p, k).unwrap();
            prop_assert!(avoids(&image, &west_target_pattern(k)));
            prop_assert_eq!(&west_inverse(&image, k).unwrap().0, &p);
            // the trace's positions and values describe the same multiset in
            // source and image
            let mut source_values: Vec<u32> = trace
                .moved_positions()
                .iter()
                .map(|&pos| p.values()[pos - 1])
                .collect();
            source_values.sort_unstable();
            prop_assert_eq!(source_values.as_slice(), trace.moved_values());
            for &(pos, v) in trace.assignments() {
                prop_assert_eq!(image.values()[pos - 1], v);
            }
        }
    }

    #[test]
    fn corank_map_round_trips(p in small_permutation(8), k in 3usize..=5) {
        if avoids(&p, &Pattern::increasing(k)) {
            let (image, _) = corank_forward(&p, k).unwrap();
            prop_assert!(avoids(&image, &corank_target_pattern(k)));
            prop_assert_eq!(corank_inverse(&image, k).unwrap().0, p);
        }
    }

    #[test]
    fn minima_preserving_classic_map_is_the_k3_case(p in small_permutation(8)) {
        if avoids(&p, &Pattern::increasing(3)) {
            prop_assert_eq!(west_forward(&p, 3).unwrap().0, common::simion_schmidt(&p));
        }
    }

    #[test]
    fn display_and_parse_round_trip(p in small_permutation(12)) {
        let rendered = p.to_string();
        prop_assert_eq!(rendered.parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn partitioned_counting_is_deterministic(
        n in 0usize..=6,
        q in small_pattern(4),
        alternating in any::<bool>(),
        jobs in 1usize..=4,
    ) {
        let sequential = count_avoiders(n, &q, alternating).unwrap();
        let partitioned = count_avoiders_partitioned(n, &q, alternating, jobs).unwrap();
        prop_assert_eq!(sequential, partitioned);
    }
}

#[test]
fn library_stream_agrees_with_insertion_generation() {
    for n in 0..=6 {
        let mut by_insertion = common::permutations_by_insertion(n);
        by_insertion.sort();
        let by_stream: Vec<Permutation> = altperm_core::iterate_permutations(n).collect();
        assert_eq!(by_stream, by_insertion, "generation mismatch at n={n}");
    }
}

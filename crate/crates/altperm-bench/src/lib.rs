//! Deterministic input builders shared by the benchmark targets.
//!
//! Benchmarks need large instances that provably satisfy each routine's
//! preconditions without paying for an exhaustive search, so the builders
//! here construct them directly.

use altperm_core::Permutation;

/// Builds a length-`n` permutation whose longest increasing run is exactly
/// `min(k - 1, n)`, so it avoids the increasing pattern of length `k`.
///
/// Values are dealt into `k - 1` descending runs placed round-robin across
/// the positions: run 0 holds the largest block of values, run 1 the next
/// block, and so on. Two entries of one run can never ascend, and an ascent
/// between runs always climbs to a strictly higher block, so an increasing
/// subsequence uses each run at most once. The interleaving also realises a
/// run-per-block ascent, which keeps the top rank populated and gives the
/// bijections real work to do.
pub fn round_robin_avoider(n: usize, k: usize) -> Permutation {
    assert!(k >= 2, "need at least one descending run");
    let runs = k - 1;
    let mut values = vec![0u32; n];
    let mut next = n as u32;
    for run in 0..runs.min(n.max(1)) {
        let mut position = run;
        while position < n {
            values[position] = next;
            next -= 1;
            position += runs;
        }
    }
    Permutation::new(values).expect("round-robin construction is a permutation")
}

/// Builds the zigzag `1 3 2 5 4 7 6 ...`, an alternating permutation of any
/// length: the identity with each adjacent pair after the first entry
/// swapped.
pub fn zigzag_alternating(n: usize) -> Permutation {
    let mut values: Vec<u32> = (1..=n as u32).collect();
    let mut i = 1;
    while i + 1 < n {
        values.swap(i, i + 1);
        i += 2;
    }
    Permutation::new(values).expect("zigzag construction is a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use altperm_core::{avoids, is_alternating, lis_length, Pattern};

    #[test]
    fn round_robin_inputs_avoid_their_pattern_tightly() {
        for (n, k) in [(30, 3), (50, 4), (41, 6)] {
            let p = round_robin_avoider(n, k);
            assert!(avoids(&p, &Pattern::increasing(k)), "n={n} k={k}");
            assert_eq!(lis_length(&p), k - 1, "n={n} k={k}");
        }
    }

    #[test]
    fn short_round_robin_inputs_are_still_valid() {
        assert_eq!(round_robin_avoider(0, 3).len(), 0);
        assert_eq!(round_robin_avoider(1, 3).len(), 1);
        assert_eq!(round_robin_avoider(2, 5).len(), 2);
    }

    #[test]
    fn zigzag_inputs_alternate_at_every_length() {
        for n in 1..=12 {
            assert!(is_alternating(&zigzag_alternating(n)), "n={n}");
        }
        assert_eq!(zigzag_alternating(7).to_string(), "1325476");
    }
}

//! Rank and co-rank profiles.
//!
//! The rank of an entry is the length of the longest increasing subsequence
//! ending at that entry; the co-rank is the length of the longest increasing
//! subsequence starting there. Both profiles come from a single patience-style
//! sweep in `O(n log n)`: the sweep keeps, for each length, the best tail (or
//! head) seen so far, and the binary-search insertion slot of each entry is
//! exactly its rank.

use crate::perm::Permutation;

/// Per-position ranks, aligned with [`Permutation::values`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    ranks: Vec<usize>,
}

impl RankProfile {
    /// Slice aligned with the permutation's values (index `i` is position `i+1`).
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Largest rank present; equals the length of the longest increasing
    /// subsequence. Zero for the empty permutation.
    pub fn max_rank(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    /// 0-based positions holding entries of rank exactly `r`.
    pub fn positions_with_rank(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(move |&(_, &rank)| rank == r)
            .map(|(i, _)| i)
    }
}

/// Per-position co-ranks, aligned with [`Permutation::values`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorankProfile {
    coranks: Vec<usize>,
}

impl CorankProfile {
    pub fn coranks(&self) -> &[usize] {
        &self.coranks
    }

    pub fn max_corank(&self) -> usize {
        self.coranks.iter().copied().max().unwrap_or(0)
    }

    pub fn positions_with_corank(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.coranks
            .iter()
            .enumerate()
            .filter(move |&(_, &c)| c == r)
            .map(|(i, _)| i)
    }
}

pub fn rank_profile(p: &Permutation) -> RankProfile {
    let mut tails: Vec<u32> = Vec::new();
    let mut ranks = Vec::with_capacity(p.len());
    for &v in p.values() {
        // first tail >= v; v extends the longest run with tail < v
        let slot = tails.partition_point(|&t| t < v);
        if slot == tails.len() {
            tails.push(v);
        } else {
            tails[slot] = v;
        }
        ranks.push(slot + 1);
    }
    RankProfile { ranks }
}

pub fn corank_profile(p: &Permutation) -> CorankProfile {
    // Right-to-left sweep; heads[j] is the largest value starting an
    // increasing run of length j+1 within the processed suffix.
    let mut heads: Vec<u32> = Vec::new();
    let mut coranks = vec![0; p.len()];
    for (i, &v) in p.values().iter().enumerate().rev() {
        let slot = heads.partition_point(|&h| h > v);
        if slot == heads.len() {
            heads.push(v);
        } else {
            heads[slot] = v;
        }
        coranks[i] = slot + 1;
    }
    CorankProfile { coranks }
}

/// Length of the longest (strictly) increasing subsequence.
pub fn lis_length(p: &Permutation) -> usize {
    lis_length_of(p.values())
}

pub(crate) fn lis_length_of(values: &[u32]) -> usize {
    let mut tails: Vec<u32> = Vec::new();
    for &v in values {
        let slot = tails.partition_point(|&t| t < v);
        if slot == tails.len() {
            tails.push(v);
        } else {
            tails[slot] = v;
        }
    }
    tails.len()
}

/// 0-based indices of some strictly increasing subsequence of length exactly
/// `target`, or `None` if the sequence has no increasing run that long.
///
/// Same sweep as [`rank_profile`] plus predecessor links; reconstruction
/// happens at the first moment an entry reaches rank `target`.
pub(crate) fn increasing_run_indices(values: &[u32], target: usize) -> Option<Vec<usize>> {
    if target == 0 {
        return Some(Vec::new());
    }
    let mut tails: Vec<u32> = Vec::new();
    let mut tail_idx: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; values.len()];
    for (i, &v) in values.iter().enumerate() {
        let slot = tails.partition_point(|&t| t < v);
        if slot == tails.len() {
            tails.push(v);
            tail_idx.push(i);
        } else {
            tails[slot] = v;
            tail_idx[slot] = i;
        }
        if slot > 0 {
            prev[i] = tail_idx[slot - 1];
        }
        if slot + 1 == target {
            let mut run = Vec::with_capacity(target);
            let mut j = i;
            loop {
                run.push(j);
                if prev[j] == usize::MAX {
                    break;
                }
                j = prev[j];
            }
            run.reverse();
            debug_assert_eq!(run.len(), target);
            return Some(run);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rank_profile_golden() {
        // entries 3, 2, 1 have rank one; 5 and 4 rank two; 6 rank three; 7 rank four
        assert_eq!(rank_profile(&perm("3526174")).ranks(), &[1, 2, 1, 3, 1, 4, 2]);
    }

    #[test]
    fn rank_profile_decreasing_is_all_ones() {
        assert_eq!(rank_profile(&perm("321")).ranks(), &[1, 1, 1]);
    }

    #[test]
    fn rank_three_entries_of_47581623() {
        let p = perm("47581623");
        let profile = rank_profile(&p);
        let rank3: Vec<u32> = profile
            .positions_with_rank(3)
            .map(|i| p.values()[i])
            .collect();
        assert_eq!(rank3, vec![8, 6, 3]);
    }

    #[test]
    fn corank_profile_examples() {
        assert_eq!(corank_profile(&perm("2413")).coranks(), &[2, 1, 2, 1]);
        assert_eq!(corank_profile(&perm("321")).coranks(), &[1, 1, 1]);
        // identity: suffix of the full run at every position
        assert_eq!(
            corank_profile(&Permutation::identity(5)).coranks(),
            &[5, 4, 3, 2, 1]
        );
    }

    #[test]
    fn lis_examples() {
        assert_eq!(lis_length(&Permutation::identity(6)), 6);
        assert_eq!(lis_length(&perm("321")), 1);
        assert_eq!(lis_length(&perm("2537164")), 3);
        assert_eq!(lis_length(&Permutation::new(vec![]).unwrap()), 0);
    }

    #[test]
    fn increasing_run_reconstruction() {
        let p = perm("2537164");
        let run = increasing_run_indices(p.values(), 3).unwrap();
        assert_eq!(run.len(), 3);
        assert!(run.windows(2).all(|w| w[0] < w[1]));
        assert!(run
            .windows(2)
            .all(|w| p.values()[w[0]] < p.values()[w[1]]));
        assert_eq!(increasing_run_indices(p.values(), 4), None);
    }
}

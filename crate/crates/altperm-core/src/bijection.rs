//! Rank- and co-rank-rearrangement bijections between pattern-avoidance
//! classes.
//!
//! Both forward maps share one scheme: entries of low rank (or co-rank) stay
//! put, and the remaining entries are lifted out and re-dealt into the same
//! positions under a greedy rule keyed to the nearest kept entry. The inverse
//! maps re-deal the lifted values in decreasing order. Each call returns the
//! image together with a [`BijectionTrace`] recording exactly which positions
//! and values were touched, in fill order.

use std::collections::BTreeSet;

use crate::pattern::find_occurrence;
use crate::perm::{Pattern, Permutation};
use crate::rank::{corank_profile, rank_profile};

/// Which positions and values a bijection rearranged, and in what order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionTrace {
    moved_positions: Vec<usize>,
    moved_values: Vec<u32>,
    assignments: Vec<(usize, u32)>,
}

impl BijectionTrace {
    /// 1-based positions whose entries were re-dealt, ascending.
    pub fn moved_positions(&self) -> &[usize] {
        &self.moved_positions
    }

    /// Values re-dealt among those positions, ascending.
    pub fn moved_values(&self) -> &[u32] {
        &self.moved_values
    }

    /// `(position, value)` pairs in the order the rule filled them.
    pub fn assignments(&self) -> &[(usize, u32)] {
        &self.assignments
    }

    fn from_assignments(assignments: Vec<(usize, u32)>) -> Self {
        let mut moved_positions: Vec<usize> = assignments.iter().map(|&(p, _)| p).collect();
        moved_positions.sort_unstable();
        let mut moved_values: Vec<u32> = assignments.iter().map(|&(_, v)| v).collect();
        moved_values.sort_unstable();
        BijectionTrace {
            moved_positions,
            moved_values,
            assignments,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BijectionError {
    #[error("k must be at least 3 (got {k})")]
    KTooSmall { k: usize },
    /// The input lies outside the map's domain: it contains the pattern the
    /// domain must avoid, witnessed by `occurrence` (1-based positions).
    #[error("input contains the forbidden pattern {pattern} at positions {occurrence:?}")]
    ForbiddenPattern {
        pattern: Pattern,
        occurrence: Vec<usize>,
    },
}

/// The length-`k` pattern `1 2 ⋯ (k−2) k (k−1)`: increasing except the last
/// two entries are swapped. Images of [`west_forward`] avoid it.
///
/// Panics if `k < 3`.
pub fn west_target_pattern(k: usize) -> Pattern {
    assert!(k >= 3, "target patterns need k >= 3");
    let mut v: Vec<u32> = (1..=k as u32 - 2).collect();
    v.push(k as u32);
    v.push(k as u32 - 1);
    Pattern::new(v).expect("constructed values are a permutation")
}

/// The length-`k` pattern `2 1 3 4 ⋯ k`: increasing except the first two
/// entries are swapped. Images of [`corank_forward`] avoid it.
///
/// Panics if `k < 3`.
pub fn corank_target_pattern(k: usize) -> Pattern {
    assert!(k >= 3, "target patterns need k >= 3");
    let mut v = vec![2u32, 1];
    v.extend(3..=k as u32);
    Pattern::new(v).expect("constructed values are a permutation")
}

fn ensure_k(k: usize) -> Result<(), BijectionError> {
    if k < 3 {
        Err(BijectionError::KTooSmall { k })
    } else {
        Ok(())
    }
}

fn ensure_avoids(p: &Permutation, pattern: Pattern) -> Result<(), BijectionError> {
    match find_occurrence(p, &pattern) {
        None => Ok(()),
        Some(occurrence) => Err(BijectionError::ForbiddenPattern {
            pattern,
            occurrence,
        }),
    }
}

/// Rank-rearrangement map from `12⋯k`-avoiders onto `12⋯k(k−1)`-avoiders.
///
/// Entries of rank ≤ k−2 keep their positions and values. The positions that
/// held rank-(k−1) entries are refilled left to right; each receives the
/// smallest still-unused moved value exceeding the closest rank-(k−2) entry on
/// its left.
pub fn west_forward(
    p: &Permutation,
    k: usize,
) -> Result<(Permutation, BijectionTrace), BijectionError> {
    ensure_k(k)?;
    ensure_avoids(p, Pattern::increasing(k))?;

    let profile = rank_profile(p);
    let ranks = profile.ranks();
    let mut pool: BTreeSet<u32> = profile
        .positions_with_rank(k - 1)
        .map(|i| p.values()[i])
        .collect();
    let mut out = p.values().to_vec();
    let mut assignments = Vec::with_capacity(pool.len());
    // most recent rank-(k-2) value seen; kept entries never move, so reading
    // it from `out` equals reading it from the source
    let mut floor: Option<u32> = None;
    for i in 0..out.len() {
        if ranks[i] == k - 2 {
            floor = Some(out[i]);
        } else if ranks[i] == k - 1 {
            let f = floor.expect("a rank-(k-1) entry has a rank-(k-2) entry on its left");
            let chosen = *pool
                .range(f + 1..)
                .next()
                .expect("some unused moved value exceeds the left anchor");
            pool.remove(&chosen);
            out[i] = chosen;
            assignments.push((i + 1, chosen));
        }
    }
    Ok((
        Permutation::from_validated(out),
        BijectionTrace::from_assignments(assignments),
    ))
}

/// Inverse of [`west_forward`]: from `12⋯k(k−1)`-avoiders back onto
/// `12⋯k`-avoiders.
///
/// Entries of rank ≤ k−2 stay fixed; the remaining entries (rank ≥ k−1) are
/// dealt back into the vacated positions in decreasing order.
pub fn west_inverse(
    q: &Permutation,
    k: usize,
) -> Result<(Permutation, BijectionTrace), BijectionError> {
    ensure_k(k)?;
    ensure_avoids(q, west_target_pattern(k))?;

    let profile = rank_profile(q);
    let slots: Vec<usize> = profile
        .ranks()
        .iter()
        .enumerate()
        .filter(|&(_, &r)| r >= k - 1)
        .map(|(i, _)| i)
        .collect();
    deal_decreasing(q, &slots)
}

/// Co-rank-rearrangement map from `12⋯k`-avoiders onto `213⋯k`-avoiders.
///
/// Entries of co-rank ≤ k−2 keep their positions and values. The positions
/// that held co-rank-(k−1) entries are refilled right to left; each receives
/// the largest still-unused moved value smaller than the closest co-rank-(k−2)
/// entry on its right.
pub fn corank_forward(
    p: &Permutation,
    k: usize,
) -> Result<(Permutation, BijectionTrace), BijectionError> {
    ensure_k(k)?;
    ensure_avoids(p, Pattern::increasing(k))?;

    let profile = corank_profile(p);
    let coranks = profile.coranks();
    let mut pool: BTreeSet<u32> = profile
        .positions_with_corank(k - 1)
        .map(|i| p.values()[i])
        .collect();
    let mut out = p.values().to_vec();
    let mut assignments = Vec::with_capacity(pool.len());
    let mut ceiling: Option<u32> = None;
    for i in (0..out.len()).rev() {
        if coranks[i] == k - 2 {
            ceiling = Some(out[i]);
        } else if coranks[i] == k - 1 {
            let c = ceiling.expect("a co-rank-(k-1) entry has a co-rank-(k-2) entry on its right");
            let chosen = *pool
                .range(..c)
                .next_back()
                .expect("some unused moved value is below the right anchor");
            pool.remove(&chosen);
            out[i] = chosen;
            assignments.push((i + 1, chosen));
        }
    }
    Ok((
        Permutation::from_validated(out),
        BijectionTrace::from_assignments(assignments),
    ))
}

/// Inverse of [`corank_forward`]: from `213⋯k`-avoiders back onto
/// `12⋯k`-avoiders.
///
/// Entries of co-rank ≤ k−2 stay fixed; the remaining entries (co-rank ≥ k−1)
/// are dealt back into the vacated positions in decreasing order.
pub fn corank_inverse(
    q: &Permutation,
    k: usize,
) -> Result<(Permutation, BijectionTrace), BijectionError> {
    ensure_k(k)?;
    ensure_avoids(q, corank_target_pattern(k))?;

    let profile = corank_profile(q);
    let slots: Vec<usize> = profile
        .coranks()
        .iter()
        .enumerate()
        .filter(|&(_, &r)| r >= k - 1)
        .map(|(i, _)| i)
        .collect();
    deal_decreasing(q, &slots)
}

/// Refill `slots` (ascending 0-based positions) with their own values sorted
/// decreasingly — the shared inverse rule.
fn deal_decreasing(
    q: &Permutation,
    slots: &[usize],
) -> Result<(Permutation, BijectionTrace), BijectionError> {
    let mut values: Vec<u32> = slots.iter().map(|&i| q.values()[i]).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = q.values().to_vec();
    let mut assignments = Vec::with_capacity(slots.len());
    for (&slot, &v) in slots.iter().zip(&values) {
        out[slot] = v;
        assignments.push((slot + 1, v));
    }
    Ok((
        Permutation::from_validated(out),
        BijectionTrace::from_assignments(assignments),
    ))
}

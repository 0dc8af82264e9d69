//! Brute-force oracles, deliberately independent of the library's
//! algorithms, for cross-checking at small sizes.

#![allow(dead_code)]

use std::collections::BTreeSet;

use altperm_core::{Pattern, Permutation};

/// Containment decided the slow way: try every index subset of the pattern's
/// size and test order-isomorphism pair by pair.
pub fn contains_by_subsets(p: &Permutation, q: &Pattern) -> bool {
    let values = p.values();
    let pat = q.values();
    if pat.is_empty() {
        return true;
    }
    if pat.len() > values.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pat.len());
    any_subset_isomorphic(values, pat, 0, &mut chosen)
}

fn any_subset_isomorphic(
    values: &[u32],
    pat: &[u32],
    start: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == pat.len() {
        return is_order_isomorphic(values, pat, chosen);
    }
    let needed = pat.len() - chosen.len();
    let last_start = values.len() - needed;
    for i in start..=last_start {
        chosen.push(i);
        let hit = any_subset_isomorphic(values, pat, i + 1, chosen);
        chosen.pop();
        if hit {
            return true;
        }
    }
    false
}

fn is_order_isomorphic(values: &[u32], pat: &[u32], idx: &[usize]) -> bool {
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if (values[idx[a]] < values[idx[b]]) != (pat[a] < pat[b]) {
                return false;
            }
        }
    }
    true
}

/// All permutations of `1..=n`, grown by inserting each next value into every
/// gap — a generation order unrelated to the library's lexicographic stream.
pub fn permutations_by_insertion(n: usize) -> Vec<Permutation> {
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for v in 1..=n as u32 {
        let mut grown = Vec::with_capacity(acc.len() * v as usize);
        for p in &acc {
            for gap in 0..=p.len() {
                let mut q = p.clone();
                q.insert(gap, v);
                grown.push(q);
            }
        }
        acc = grown;
    }
    acc.into_iter()
        .map(|v| Permutation::new(v).expect("insertion keeps values distinct"))
        .collect()
}

/// Quadratic longest-increasing-subsequence dynamic program, independent of
/// the patience-style sweep.
pub fn lis_by_dp(p: &Permutation) -> usize {
    let v = p.values();
    let mut best = vec![1usize; v.len()];
    let mut overall = 0;
    for i in 0..v.len() {
        for j in 0..i {
            if v[j] < v[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
        overall = overall.max(best[i]);
    }
    overall
}

/// The classic minima-preserving bijection from `123`-avoiders to
/// `132`-avoiders, written straight from its textbook description: keep the
/// left-to-right minima, then refill every other position left to right with
/// the smallest unused value above the current minimum.
pub fn simion_schmidt(p: &Permutation) -> Permutation {
    let values = p.values();
    let mut is_minimum = vec![false; values.len()];
    let mut lowest = u32::MAX;
    for (i, &v) in values.iter().enumerate() {
        if v < lowest {
            lowest = v;
            is_minimum[i] = true;
        }
    }
    let mut pool: BTreeSet<u32> = values
        .iter()
        .zip(&is_minimum)
        .filter(|&(_, &m)| !m)
        .map(|(&v, _)| v)
        .collect();
    let mut out = Vec::with_capacity(values.len());
    let mut current_minimum = 0;
    for (i, &v) in values.iter().enumerate() {
        if is_minimum[i] {
            current_minimum = v;
            out.push(v);
        } else {
            let chosen = *pool
                .range(current_minimum + 1..)
                .next()
                .expect("a non-minimum can always be refilled");
            pool.remove(&chosen);
            out.push(chosen);
        }
    }
    Permutation::new(out).expect("refilling permutes the same values")
}

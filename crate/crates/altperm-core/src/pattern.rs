//! Classical pattern containment.
//!
//! A permutation contains a pattern when some subsequence of its values is
//! order-isomorphic to the pattern. Monotone patterns reduce to a longest
//! monotone subsequence query; everything else goes through a backtracking
//! search over pattern positions with order-constraint propagation.

use crate::perm::{Pattern, Permutation};
use crate::rank::{increasing_run_indices, lis_length_of};

/// Does `p` contain an occurrence of `q`?
///
/// The empty pattern occurs in everything (vacuously); a pattern longer than
/// `p` occurs nowhere.
pub fn contains_pattern(p: &Permutation, q: &Pattern) -> bool {
    match monotone_direction(q) {
        Some(Monotone::Increasing) => lis_length_of(p.values()) >= q.len(),
        Some(Monotone::Decreasing) => lis_length_of(&complement(p.values())) >= q.len(),
        None => find_occurrence(p, q).is_some(),
    }
}

/// Does `p` avoid `q` (contain no occurrence)?
pub fn avoids(p: &Permutation, q: &Pattern) -> bool {
    !contains_pattern(p, q)
}

/// 1-based positions of some occurrence of `q` in `p`, or `None`.
///
/// When several occurrences exist, the one returned is deterministic for a
/// given input but otherwise unspecified.
pub fn find_occurrence(p: &Permutation, q: &Pattern) -> Option<Vec<usize>> {
    if q.is_empty() {
        return Some(Vec::new());
    }
    if q.len() > p.len() {
        return None;
    }
    match monotone_direction(q) {
        Some(Monotone::Increasing) => {
            increasing_run_indices(p.values(), q.len()).map(to_one_based)
        }
        Some(Monotone::Decreasing) => {
            // a decreasing run of p is an increasing run of its complement,
            // at the same positions
            increasing_run_indices(&complement(p.values()), q.len()).map(to_one_based)
        }
        None => backtrack_occurrence(p.values(), q.values()).map(to_one_based),
    }
}

fn to_one_based(mut idx: Vec<usize>) -> Vec<usize> {
    for i in &mut idx {
        *i += 1;
    }
    idx
}

fn complement(values: &[u32]) -> Vec<u32> {
    let n = values.len() as u32;
    values.iter().map(|&v| n + 1 - v).collect()
}

enum Monotone {
    Increasing,
    Decreasing,
}

fn monotone_direction(q: &Pattern) -> Option<Monotone> {
    let v = q.values();
    if v.windows(2).all(|w| w[0] < w[1]) {
        Some(Monotone::Increasing)
    } else if v.windows(2).all(|w| w[0] > w[1]) {
        Some(Monotone::Decreasing)
    } else {
        None
    }
}

/// Backtracking search for an occurrence of `pat` in `values` (0-based result).
///
/// For each pattern index `a` we precompute the earlier pattern index whose
/// value is the tightest lower bound (`tight_below`) and tightest upper bound
/// (`tight_above`) on `pat[a]`. A candidate position for `a` then only needs
/// comparing against those two already-chosen entries: any value strictly
/// between them is automatically order-consistent with every earlier choice.
fn backtrack_occurrence(values: &[u32], pat: &[u32]) -> Option<Vec<usize>> {
    let n = values.len();
    let k = pat.len();

    let mut tight_below = vec![usize::MAX; k];
    let mut tight_above = vec![usize::MAX; k];
    for a in 1..k {
        for b in 0..a {
            if pat[b] < pat[a]
                && (tight_below[a] == usize::MAX || pat[b] > pat[tight_below[a]])
            {
                tight_below[a] = b;
            }
            if pat[b] > pat[a]
                && (tight_above[a] == usize::MAX || pat[b] < pat[tight_above[a]])
            {
                tight_above[a] = b;
            }
        }
    }

    // chosen[a] = position in `values` matched to pattern index a
    let mut chosen = vec![0usize; k];
    let mut a = 0usize;
    // next position to try for pattern index `a`
    let mut start = 0usize;
    loop {
        let mut advanced = false;
        // enough room must remain for the k - a - 1 later pattern entries
        let limit = n - (k - a - 1);
        for pos in start..limit {
            let v = values[pos];
            let ok_below =
                tight_below[a] == usize::MAX || values[chosen[tight_below[a]]] < v;
            let ok_above =
                tight_above[a] == usize::MAX || values[chosen[tight_above[a]]] > v;
            if ok_below && ok_above {
                chosen[a] = pos;
                a += 1;
                if a == k {
                    return Some(chosen);
                }
                start = pos + 1;
                advanced = true;
                break;
            }
        }
        if !advanced {
            if a == 0 {
                return None;
            }
            a -= 1;
            start = chosen[a] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn empty_pattern_always_occurs() {
        assert!(contains_pattern(&perm("321"), &pat("")));
        assert!(contains_pattern(&Permutation::new(vec![]).unwrap(), &pat("")));
        assert_eq!(find_occurrence(&perm("321"), &pat("")), Some(vec![]));
    }

    #[test]
    fn pattern_longer_than_host_never_occurs() {
        assert!(avoids(&perm("21"), &pat("321")));
        assert_eq!(find_occurrence(&perm("21"), &pat("321")), None);
    }

    #[test]
    fn monotone_containment() {
        assert!(contains_pattern(&perm("2537164"), &pat("123")));
        assert!(avoids(&perm("2537164"), &pat("1234")));
        assert!(contains_pattern(&perm("2537164"), &pat("321")));
        assert!(avoids(&Permutation::identity(5), &pat("21")));
    }

    #[test]
    fn general_containment() {
        // 132 occurs in 2413 as values 2,4,3
        assert!(contains_pattern(&perm("2413"), &pat("132")));
        assert!(avoids(&perm("2413"), &pat("123")));
        // 3412 contains exactly 231 and 312 among the length-3 patterns
        let p = perm("3412");
        assert!(avoids(&p, &pat("123")));
        assert!(avoids(&p, &pat("132")));
        assert!(avoids(&p, &pat("213")));
        assert!(avoids(&p, &pat("321")));
        assert!(contains_pattern(&p, &pat("231")));
        assert!(contains_pattern(&p, &pat("312")));
    }

    #[test]
    fn occurrence_positions_are_valid() {
        let p = perm("47581623");
        let q = pat("1324");
        let occ = find_occurrence(&p, &q).expect("occurrence exists");
        assert_eq!(occ.len(), 4);
        assert!(occ.windows(2).all(|w| w[0] < w[1]));
        let picked: Vec<u32> = occ.iter().map(|&i| p.values()[i - 1]).collect();
        // order-isomorphism check against the pattern
        for a in 0..picked.len() {
            for b in a + 1..picked.len() {
                assert_eq!(
                    picked[a] < picked[b],
                    q.values()[a] < q.values()[b],
                    "picked {picked:?} is not isomorphic to {q}"
                );
            }
        }
    }

    #[test]
    fn decreasing_occurrence_positions() {
        let p = perm("2537164");
        let occ = find_occurrence(&p, &pat("321")).expect("occurrence exists");
        let picked: Vec<u32> = occ.iter().map(|&i| p.values()[i - 1]).collect();
        assert!(picked.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn containment_matches_occurrence_search_on_small_hosts() {
        // cross-check the monotone shortcut and the backtracker against each
        // other over all of S_5 for a mixed bag of patterns
        let patterns = ["123", "321", "132", "213", "231", "312", "1234", "2143"];
        let mut values = vec![1u32, 2, 3, 4, 5];
        loop {
            let p = Permutation::new(values.clone()).unwrap();
            for q in &patterns {
                let q = pat(q);
                assert_eq!(contains_pattern(&p, &q), find_occurrence(&p, &q).is_some());
            }
            if !next_lex(&mut values) {
                break;
            }
        }
    }

    fn next_lex(v: &mut [u32]) -> bool {
        let n = v.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }
}

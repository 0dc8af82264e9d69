//! Alternation predicates and peak/valley classification.
//!
//! A permutation is alternating (up-down) when `p_1 < p_2 > p_3 < p_4 > …`,
//! i.e. ascents sit exactly at the odd 1-based positions. The empty and
//! singleton permutations count as alternating: the condition is vacuous.

use crate::perm::{PermError, Permutation};

/// True iff ascents occur exactly at the odd 1-based positions.
pub fn is_alternating(p: &Permutation) -> bool {
    first_alternation_violation(p).is_none()
}

/// 1-based position `i` of the first adjacent pair `(p_i, p_{i+1})` breaking
/// the up-down rule, or `None` when `p` is alternating.
pub(crate) fn first_alternation_violation(p: &Permutation) -> Option<usize> {
    p.values()
        .windows(2)
        .enumerate()
        // 0-based left index i corresponds to 1-based position i + 1; the rule
        // demands an ascent there exactly when i + 1 is odd, i.e. i is even
        .find(|(i, w)| (w[0] < w[1]) != (i % 2 == 0))
        .map(|(i, _)| i + 1)
}

/// How the final position of an odd-length alternating permutation is
/// classified.
///
/// An odd-length alternating permutation ends on a descent, so its last entry
/// rises above no neighbor. [`Structural`](EndpointConvention::Structural)
/// leaves that position out of both lists;
/// [`ForcedEndpoints`](EndpointConvention::ForcedEndpoints) declares it a peak
/// regardless. Even lengths classify identically under both conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EndpointConvention {
    /// Classify the last position by comparing with its one neighbor; a final
    /// descent leaves it unclassified.
    #[default]
    Structural,
    /// The last position is always a peak (and the first always a valley).
    ForcedEndpoints,
}

/// 1-based peak and valley positions of an alternating permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeaksValleys {
    valleys: Vec<usize>,
    peaks: Vec<usize>,
}

impl PeaksValleys {
    /// Positions smaller than their existing neighbors, ascending.
    pub fn valleys(&self) -> &[usize] {
        &self.valleys
    }

    /// Positions larger than their existing neighbors, ascending.
    pub fn peaks(&self) -> &[usize] {
        &self.peaks
    }

    pub fn is_valley(&self, position: usize) -> bool {
        self.valleys.binary_search(&position).is_ok()
    }

    pub fn is_peak(&self, position: usize) -> bool {
        self.peaks.binary_search(&position).is_ok()
    }
}

/// Classify every position of an alternating permutation as peak, valley, or
/// (for a final descending entry under [`EndpointConvention::Structural`])
/// neither.
///
/// Interior odd positions are valleys and interior even positions peaks;
/// position 1 is always a valley. Errors on empty or non-alternating input —
/// peaks and valleys are only meaningful on the up-down shape.
pub fn peaks_and_valleys(
    p: &Permutation,
    convention: EndpointConvention,
) -> Result<PeaksValleys, PermError> {
    if p.is_empty() {
        return Err(PermError::Empty);
    }
    if let Some(position) = first_alternation_violation(p) {
        return Err(PermError::NotAlternating { position });
    }
    let n = p.len();
    if n == 1 {
        // single entry: boundary conventions make it both a valley and a peak
        return Ok(PeaksValleys {
            valleys: vec![1],
            peaks: vec![1],
        });
    }
    let mut valleys = Vec::new();
    let mut peaks = Vec::new();
    for pos in 1..n {
        if pos % 2 == 1 {
            valleys.push(pos);
        } else {
            peaks.push(pos);
        }
    }
    let ends_rising = p.values()[n - 1] > p.values()[n - 2];
    if ends_rising || convention == EndpointConvention::ForcedEndpoints {
        peaks.push(n);
    }
    Ok(PeaksValleys { valleys, peaks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn alternation_predicate() {
        assert!(is_alternating(&perm("47581623")));
        assert!(is_alternating(&perm("23154")));
        assert!(!is_alternating(&perm("123")));
        assert!(is_alternating(&perm("1")));
        assert!(is_alternating(&Permutation::new(vec![]).unwrap()));
        assert!(!is_alternating(&perm("21")));
        assert!(is_alternating(&perm("12")));
    }

    #[test]
    fn violation_position_is_first_bad_pair() {
        assert_eq!(first_alternation_violation(&perm("123")), Some(2));
        assert_eq!(first_alternation_violation(&perm("321")), Some(1));
        assert_eq!(first_alternation_violation(&perm("13245")), Some(4));
        assert_eq!(first_alternation_violation(&perm("2413")), None);
    }

    #[test]
    fn even_length_classification() {
        let pv = peaks_and_valleys(&perm("47581623"), EndpointConvention::Structural).unwrap();
        assert_eq!(pv.valleys(), &[1, 3, 5, 7]);
        assert_eq!(pv.peaks(), &[2, 4, 6, 8]);
        // even lengths agree across conventions
        let forced =
            peaks_and_valleys(&perm("47581623"), EndpointConvention::ForcedEndpoints).unwrap();
        assert_eq!(pv, forced);

        let pv = peaks_and_valleys(&perm("12"), EndpointConvention::Structural).unwrap();
        assert_eq!(pv.valleys(), &[1]);
        assert_eq!(pv.peaks(), &[2]);
    }

    #[test]
    fn odd_length_final_descent() {
        let structural = peaks_and_valleys(&perm("132"), EndpointConvention::Structural).unwrap();
        assert_eq!(structural.valleys(), &[1]);
        assert_eq!(structural.peaks(), &[2]);
        assert!(!structural.is_peak(3) && !structural.is_valley(3));

        let forced = peaks_and_valleys(&perm("132"), EndpointConvention::ForcedEndpoints).unwrap();
        assert_eq!(forced.valleys(), &[1]);
        assert_eq!(forced.peaks(), &[2, 3]);
    }

    #[test]
    fn singleton_is_both() {
        let pv = peaks_and_valleys(&perm("1"), EndpointConvention::Structural).unwrap();
        assert_eq!(pv.valleys(), &[1]);
        assert_eq!(pv.peaks(), &[1]);
    }

    #[test]
    fn rejects_empty_and_non_alternating() {
        let empty = Permutation::new(vec![]).unwrap();
        assert!(matches!(
            peaks_and_valleys(&empty, EndpointConvention::Structural),
            Err(PermError::Empty)
        ));
        assert!(matches!(
            peaks_and_valleys(&perm("123"), EndpointConvention::Structural),
            Err(PermError::NotAlternating { position: 2 })
        ));
    }
}

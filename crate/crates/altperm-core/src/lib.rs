//! Pattern-avoiding and alternating permutations.
//!
//! This crate provides:
//!
//! - a validated [`Permutation`] value type in one-line notation, with
//!   pattern containment ([`contains_pattern`], [`avoids`]) and the
//!   rank/co-rank profiles that drive everything else ([`rank_profile`],
//!   [`corank_profile`]);
//! - the rank-rearrangement bijection between `12⋯k`-avoiders and
//!   `12⋯k(k-1)`-avoiders ([`west_forward`] / [`west_inverse`]) and the
//!   mirrored co-rank map onto `213⋯k`-avoiders ([`corank_forward`] /
//!   [`corank_inverse`]);
//! - exhaustive and pruned enumeration of permutations and alternating
//!   permutations ([`iterate_permutations`], [`iterate_alternating`],
//!   [`count_avoiders`], [`euler_number`]);
//! - verification suites that sweep the counting identities tying the
//!   bijections to the enumerated counts ([`verify::run_suite`]).
//!
//! Positions and values are 1-based at every public interface, matching the
//! usual one-line notation `p = p_1 p_2 ⋯ p_n`.
//!
//! ```
//! use altperm_core::{Permutation, Pattern, avoids, west_forward};
//!
//! let p: Permutation = "893624751".parse().unwrap();
//! assert!(avoids(&p, &Pattern::increasing(4)));
//!
//! let (image, trace) = west_forward(&p, 4).unwrap();
//! assert_eq!(image.to_string(), "893624571");
//! assert_eq!(trace.moved_values(), &[5, 7]);
//! ```

pub mod alternating;
pub mod bijection;
pub mod enumerate;
pub mod pattern;
pub mod perm;
pub mod rank;
pub mod verify;

pub use alternating::{is_alternating, peaks_and_valleys, EndpointConvention, PeaksValleys};
pub use bijection::{
    corank_forward, corank_inverse, corank_target_pattern, west_forward, west_inverse,
    west_target_pattern, BijectionError, BijectionTrace,
};
pub use enumerate::{
    count_avoiders, count_avoiders_partitioned, count_last_entry_rank, euler_number,
    iterate_alternating, iterate_permutations, AlternatingPermutations, CountMethod, CountRecord,
    EnumerationError, LexPermutations,
};
pub use pattern::{avoids, contains_pattern, find_occurrence};
pub use perm::{Pattern, PermError, Permutation};
pub use rank::{corank_profile, lis_length, rank_profile, CorankProfile, RankProfile};
pub use verify::{
    check_corank_equality, check_even_equality, check_lemma_west, check_odd_discrepancy,
    run_suite, Claim, ClaimStatus, SuiteConfig, VerificationReport, VerifyError,
};

//! Bounded brute-force oracle: class enumeration, teaching-set
//! verification and exact minimum teaching sets.
//!
//! Teaching-set claims are only ever confirmed relative to explicit
//! [`Bounds`]. Rival languages are compared with [`decide_equivalence`],
//! which is exact for the classes exercised here and otherwise falls back
//! to bounded word agreement, reported as inconclusive.

mod check;
mod enumerate;
mod equiv;
mod prefs;
mod td;

pub use check::{consistent, equivalent_bounded, is_pbt_set, is_teaching_set, Bounds, Stats, Status, Verdict};
pub use enumerate::{canonical_form, enumerate_patterns, enumerate_with_letters, unary_canonical};
pub use equiv::{bounded_disagreement, decide_equivalence, inclusion, words_of_len, working_letters, Equivalence};
pub use prefs::{
    pref_infinite, pref_noncross, pref_qr_unary, pref_shorter, pref_sr, preference_by_name, reduced_len,
    PreferenceOrder,
};
pub use td::{brute_force_pbtd, brute_force_td, brute_force_td_with, TdResult, DEFAULT_NODE_BUDGET};

//! Measurements on stranded cellular automaton patterns: inferred rules,
//! periods and speeds, null chains, subpatterns, and glider verdicts.

pub mod description;
pub mod glider;
pub mod infer;
pub mod nullchain;
pub mod period;
pub mod properties;
pub mod subpattern;

pub use description::GliderDescription;
pub use glider::{
    analyze, is_nested_under, is_pure, leading_subpattern, rule_is_pure, GliderReport, NotNested,
    NotNestedReason, PurityError,
};
pub use infer::{infer_crossing_rule, infer_turning_rule, turning_evidence, Evidence, NoRule};
pub use nullchain::{null_chain, null_chain_any_rotation};
pub use period::{
    end_index, find_period, global_end_index, per_of_list, strand_displacements, LayoutError,
    NotFound, Period, PeriodInfo, Speed,
};
pub use subpattern::{
    left_subpattern, right_subpattern, slice, strand_subpattern, SubpatternError,
};

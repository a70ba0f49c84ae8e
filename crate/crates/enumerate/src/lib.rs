//! Exhaustive classification of small stranded patterns and enumeration of
//! pure gliders strand by strand.

pub mod classify;
pub mod oracle;
pub mod pure;
pub mod tables;

pub use classify::{classify_small, Classification, Match, Mismatch, MismatchReport};
pub use oracle::{oracle_enumerate, OracleClass, OracleConfig, OracleResult, OracleStats};
pub use pure::{
    beta_candidates, enumerate_pure, extend_pure, v1, Extension, PureConfig, PureRun, PureSummary,
    Rejections, VSet,
};

//! Data model and forward evolution for stranded cellular automata.
//!
//! A generation is a row of two-slot cells; successive generations sit on a
//! brick lattice, each child cell straddling two parents. Turning and crossing
//! rules decide how strands continue from one generation to the next.

pub mod cell;
pub mod error;
pub mod evolve;
pub mod generation;
pub mod pattern;
pub mod rule;

pub use cell::{bit_classes, bit_index, bit_name, CellContent, Class, Orientation, Symbol};
pub use error::{Contradiction, ParseError};
pub use evolve::{
    config_at, crossing_bit_at, effective_config, evolve, generate, rule_bit_at, step, Config,
};
pub use generation::Generation;
pub use pattern::{
    compose, continuity_check, parse_generations, power, serialize_generations, GridPattern,
    Violation, ViolationReason,
};
pub use rule::{CrossingRule, GenericRule, RuleKind, RuleOrder, Trit, TurningRule};

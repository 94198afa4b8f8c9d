//! Fuzzy inference for cognitive-radio spectrum decisions.
//!
//! Mamdani and Sugeno engines over linguistic variables, a small rule
//! language with six built-in decision rule bases, radio metric helpers and
//! a sweep and correlation harness comparing four system variants.

pub mod analysis;
pub mod catalog;
pub mod crmetrics;
pub mod error;
pub mod inference;
pub mod membership;
pub mod ruledsl;
pub mod variable;

pub use analysis::{build_system, run_sweep, SystemOptions, VariantId};
pub use catalog::{InputId, MfFamily, OutputId};
pub use error::{Error, Result};
pub use inference::{evaluate, FuzzySystem};
pub use ruledsl::{builtin_rulebase, DecisionId};

//! Mamdani and Sugeno inference: rule firing, min-implication with
//! max-aggregation, defuzzification, and weighted-average evaluation.

mod config;
mod curve;
mod rule;
mod system;

pub use config::{
    Aggregation, AndOp, Defuzzifier, EngineConfig, EngineKind, Implication, DEFAULT_RESOLUTION,
};
pub use curve::{
    defuzz_bisector, defuzz_centroid, defuzz_maxima_family, AggregateCurve, MAXIMA_TOLERANCE,
};
pub use rule::{firing_strength, Antecedent, Consequent, Rule, SugenoConsequent};
pub use system::{evaluate, mamdani_aggregate, sugeno_evaluate, FuzzySystem, SystemOutput};

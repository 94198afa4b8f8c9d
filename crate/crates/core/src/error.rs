use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty aggregate: no rule fired with positive strength")]
    EmptyAggregate,

    #[error("missing fuzzified input for variable `{0}`")]
    MissingVariable(String),

    #[error("missing fuzzified input #{0}")]
    MissingInput(usize),

    #[error("expected {expected} crisp inputs, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("operation requires a {expected} system")]
    WrongEngine { expected: &'static str },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: unknown variable `{name}`")]
    UnknownVariable { line: usize, name: String },

    #[error("line {line}: unknown label `{label}` for `{variable}` (valid: {valid})")]
    UnknownLabel {
        line: usize,
        variable: String,
        label: String,
        valid: String,
    },

    #[error("duplicate antecedent set on lines {first} and {second}")]
    DuplicateAntecedent { first: usize, second: usize },

    #[error("rule base does not match the bound variables: {0}")]
    Binding(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate series: zero variance")]
    DegenerateSeries,

    #[error("series lengths differ ({0} vs {1}) or are shorter than 2")]
    SeriesLength(usize, usize),

    #[error("evaluation failed at {point:?}: {source}")]
    AtPoint {
        point: Vec<f64>,
        #[source]
        source: Box<Error>,
    },
}

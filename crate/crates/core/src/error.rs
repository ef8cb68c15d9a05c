use thiserror::Error;

use crate::coherence::CoherenceVerdict;

/// Position-carrying syntax error produced by the tokenizer and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid atom name `{0}`")]
    InvalidAtomName(String),

    #[error("valuation does not cover atom `{0}`")]
    MissingAtom(String),

    #[error("problem involves {count} atoms, limit is {limit}")]
    AtomLimitExceeded { count: usize, limit: usize },

    #[error("antecedent is a contradiction; conditioning on it is undefined")]
    ContradictoryAntecedent,

    #[error("family of conditional events is empty")]
    EmptyFamily,

    #[error("active set of assessment entries is empty")]
    EmptyActiveSet,

    #[error("duplicate conditional event in assessment: {0}")]
    DuplicateEvent(String),

    #[error("value {value} out of range for {context}")]
    ValueOutOfRange { value: String, context: String },

    #[error("assessment is coherent; no Dutch book exists")]
    CoherentAssessment,

    #[error("premises are incoherent")]
    IncoherentPremises(Box<CoherenceVerdict>),

    #[error("no coherent scenario gives the conclusion antecedent positive mass and neither endpoint is coherent")]
    AntecedentUnreachable,

    #[error("interval certification failed: {0}")]
    IntervalNotCertified(String),

    #[error("unknown rule `{0}`")]
    UnknownRule(String),

    #[error("rule `{0}` has no premise-to-conclusion propagation form")]
    NotAPropagation(String),

    #[error("missing parameter --{param} for rule {rule}")]
    MissingParam { rule: String, param: String },

    #[error("not a probability distribution: {0}")]
    NotADistribution(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the library. Everything except [`Error::Inconsistency`]
/// is a domain error caused by bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported arity {0}: only 2, 3 and 4 are representable")]
    UnsupportedArity(usize),

    #[error("malformed tree expression at byte {pos}: {msg}")]
    TreeSyntax { pos: usize, msg: String },

    #[error("node with {found} children in a tree of arity {expected}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("tree diagram leaf counts differ: top has {top}, bottom has {bottom}")]
    LeafCountMismatch { top: usize, bottom: usize },

    #[error("operands have different arities ({0} and {1})")]
    OperandArity(usize, usize),

    #[error("leaf index {index} out of range for {leaves} leaves")]
    LeafIndex { index: usize, leaves: usize },

    #[error("malformed word token `{0}`")]
    WordSyntax(String),

    #[error("generator family `{family}` is not available for arity {arity}")]
    WrongFamily { family: char, arity: usize },

    #[error("operation requires arity {expected}, got {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("malformed point `{0}`")]
    PointSyntax(String),

    #[error("point must lie strictly between 0 and 1")]
    PointOutOfRange,

    #[error("digit word in base {found} where base {expected} is required")]
    WrongBase { expected: u8, found: u8 },

    #[error("diagram has {crossings} crossings, state-sum budget is {budget}")]
    CrossingBudget { crossings: usize, budget: usize },

    #[error("link diagram is not oriented")]
    NotOriented,

    #[error("invalid Tait graph: {0}")]
    InvalidTaitGraph(String),

    #[error("invalid link diagram: {0}")]
    InvalidLink(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

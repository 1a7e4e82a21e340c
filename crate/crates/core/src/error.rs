use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("integer overflow in fraction arithmetic")]
    Overflow,
    #[error("tangle is composite: {0}")]
    CompositeInput(String),
    #[error("rewriting did not terminate within {0} steps")]
    NonTermination(usize),
}

pub type Result<T, E = TangleError> = std::result::Result<T, E>;

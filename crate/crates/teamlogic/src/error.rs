use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown symbol: {0}")]
    UnknownSymbol(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("fragment mismatch: {0}")]
    Fragment(String),
    #[error("budget exceeded: {0} contexts (ceiling {1})")]
    Budget(u128, u128),
    #[error("node ceiling exceeded: formula grew to {0} nodes (ceiling {1})")]
    NodeCeiling(usize, usize),
    #[error("malformed model: {0}")]
    Model(String),
    #[error("malformed proof script: {0}")]
    Script(String),
    #[error("strict semantics refused: {0}")]
    StrictRefused(String),
    #[error("{0}")]
    Other(String),
}

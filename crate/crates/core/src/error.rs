use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a tournament on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} was given more than once; the vertices must be distinct")]
    RepeatedVertex(usize),

    #[error("no regular tournament exists on an even number of vertices (n = {0})")]
    EvenRegular(usize),

    #[error("n = {n} has {pairs} vertex pairs; codes are limited to {limit} pairs")]
    CodeTooWide {
        n: usize,
        pairs: usize,
        limit: usize,
    },

    #[error("code {code} does not fit in {pairs} orientation bits")]
    CodeOutOfRange { code: u64, pairs: usize },

    #[error("(n = {n}, {quantity} = {value}) is not realizable by any tournament: {reason}")]
    Unrealizable {
        n: usize,
        quantity: &'static str,
        value: u64,
        reason: &'static str,
    },

    #[error("line {line}, position {position}: {message}")]
    Parse {
        line: usize,
        position: usize,
        message: String,
    },

    #[error("unknown property {0:?}; expected one of 1, 2, 3, cone, composition, fastc3")]
    UnknownProperty(String),
}

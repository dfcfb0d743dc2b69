use thiserror::Error;

use crate::root_core::NodeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node not in diagram: {0}")]
    NodeNotInDiagram(NodeId),
    #[error("invalid Cartan type {family}_{rank}: {reason}")]
    InvalidCartanType {
        family: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("no such twisted type: {base}^({twist})")]
    NoSuchTwistedType { base: String, twist: u8 },
    #[error("unrecognized component on nodes {0:?}")]
    UnrecognizedComponent(Vec<NodeId>),
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("invalid marking: {0}")]
    InvalidMarking(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("{label}: missing parameter {param}")]
    MissingParam { label: String, param: &'static str },
    #[error("{label}: parameter out of range, requires {bound}")]
    ParamOutOfRange { label: String, bound: String },
    #[error("syntax error at offset {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },
    #[error("folding {pair} not admissible: {reason}")]
    FoldNotAdmissible { pair: String, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

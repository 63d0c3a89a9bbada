use thiserror::Error;

/// Errors raised while constructing or validating finite groups.
#[derive(Debug, Error)]
pub enum GroupError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group order {order} exceeds construction cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
}

/// Errors raised by graph construction and the combinatorial search kernels.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("edge endpoint {endpoint} out of range for graph on {n} vertices")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("cycle graph needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("graph on {n} vertices exceeds the cap of {cap} for this search")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("pattern on {n} vertices exceeds the 6-vertex pattern limit")]
    PatternTooLarge { n: usize },
    #[error("malformed edge list: {0}")]
    ParseError(String),
}

use thiserror::Error;

/// Errors shared by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size argument is above the configured cap for the operation.
    #[error("requested size {requested} exceeds the cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    /// An abscissa lies beyond the built table (or beyond the n-triangle).
    #[error("abscissa {i} is outside the table (max {max})")]
    OutOfTable { i: usize, max: usize },

    /// A symbol sequence breaks one of the two Dyck rules.
    #[error("invalid Dyck word: {0}")]
    InvalidWord(&'static str),

    /// A character other than `(` or `)` in a parenthesis string.
    #[error("unexpected character {0:?}, expected '(' or ')'")]
    UnexpectedCharacter(char),

    /// (i, j) cannot be a node of the triangle.
    #[error("({i}, {j}) is not a triangle node: need j <= i and i + j even")]
    InvalidNode { i: usize, j: usize },

    /// k exceeds n in a diagonal-coordinate pair.
    #[error("k = {k} exceeds n = {n}")]
    InvalidIndex { n: usize, k: usize },

    /// k points past the last term of the n-th column.
    #[error("k = {k} is past the last term of column {n} (max k = {max})")]
    OutOfColumn { n: usize, k: usize, max: usize },
}

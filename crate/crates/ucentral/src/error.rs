use std::fmt;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// What went wrong on a single edge-list line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseKind {
    /// Both endpoints of the edge are the same label.
    SelfLoop,
    /// The line does not contain exactly two tokens.
    TokenCount(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Malformed edge-list input; `line` is 1-based and counts every line of
    /// the input, including blanks and comments.
    Parse { line: usize, kind: ParseKind },
    /// The operation requires a connected graph.
    Disconnected,
    /// The operation requires a tree (connected, cycle-free).
    NotATree,
    /// The Gramian quadratic form 1ᵀW1 is not strictly positive, which cannot
    /// happen for a valid setup and signals corrupted upstream data.
    DegenerateGramian,
    /// Power iteration did not converge within the iteration budget.
    NoConvergence { iterations: usize },
    /// A node label that does not exist in the graph.
    UnknownLabel(String),
    /// Invalid arguments to a graph constructor.
    InvalidGraph(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, kind } => match kind {
                ParseKind::SelfLoop => write!(f, "line {line}: self-loop edge"),
                ParseKind::TokenCount(found) => write!(
                    f,
                    "line {line}: expected 2 whitespace-separated labels, found {found}"
                ),
            },
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::NotATree => write!(f, "graph is not a tree"),
            Error::DegenerateGramian => write!(f, "degenerate Gramian: 1'W1 <= 0"),
            Error::NoConvergence { iterations } => {
                write!(
                    f,
                    "power iteration did not converge in {iterations} iterations"
                )
            }
            Error::UnknownLabel(label) => write!(f, "unknown node label {label:?}"),
            Error::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

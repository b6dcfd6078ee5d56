use thiserror::Error;

use crate::diagram::PretzelCode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("tangle {index} has zero half-twists")]
    ZeroTangle { index: usize },

    #[error("code cancels down to the unknot")]
    Unknot,

    #[error("code describes a link with {components} components, not a knot")]
    NotAKnot { components: usize },

    #[error("Type 1 diagram has no parallel tangles, so no auxiliary link is defined")]
    Type1Input,

    #[error("the minimal Alexander grading is attained by {count} states")]
    NoUniqueMinimum { count: usize },

    #[error("genus is not certified (knot is not fibered)")]
    GenusUncertified,

    #[error("{0} is not minimally presented")]
    NotMinimal(PretzelCode),

    #[error("ambiguous trade: tangle {tangle} meets the minimal tree in two terminal edges")]
    AmbiguousTrade { tangle: usize },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("invalid enumeration bounds: {0}")]
    InvalidBounds(String),

    #[error("counterexample to the classification: {0}")]
    CounterexampleFound(PretzelCode),
}

pub type Result<T, E = KnotError> = std::result::Result<T, E>;

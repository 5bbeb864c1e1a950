use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a projective rational")]
    ZeroOverZero,

    #[error("cannot parse {what} from `{token}`")]
    Parse { what: &'static str, token: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("class {m}[a]+{n}[b] has no non-negative (p, q) in the (c, b) basis")]
    NotPositivelyRepresentable { m: String, n: String },

    #[error("criterion inapplicable: coefficient b{index} = {value} violates |b1| >= 3, |bi| >= 2")]
    CriterionInapplicable { index: usize, value: String },

    #[error("degenerate twist: {curve} pair has twist count 0 (omit the twist instead)")]
    DegenerateTwist { curve: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

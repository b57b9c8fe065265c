use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` has no assigned value")]
    MissingVariable(Var),
    #[error("a series needs at least one coefficient")]
    EmptyCoefficients,
    #[error("a sequence needs at least one term")]
    EmptySequence,
    #[error("series has order {have}, but order {need} was requested")]
    InsufficientOrder { have: usize, need: usize },
    #[error("{need} terms required, only {have} supplied")]
    InsufficientTerms { have: usize, need: usize },
    #[error("q = {q} is below n = {n}")]
    QBelowN { q: i64, n: usize },
    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::root_system::{Family, Weight};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("cannot parse algebra `{0}` (expected e.g. `A1`, `B13`, `E7`)")]
    ParseAlgebra(String),

    #[error("cannot parse weight `{0}` (expected comma-separated Dynkin labels)")]
    ParseWeight(String),

    #[error("weight {weight} has {found} labels, expected {expected}")]
    RankMismatch {
        weight: Weight,
        found: usize,
        expected: usize,
    },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {weight} is not in the level-{level} alcove")]
    NotInAlcove { weight: Weight, level: u32 },

    #[error("fundamental index {0} is out of range")]
    BadIndex(usize),

    #[error("λ{0} is not a dull long fundamental weight")]
    NotDull(usize),

    #[error("weight {0} is not a member of the subset")]
    NotMember(Weight),

    #[error("alcove has {size} weights, above the configured bound {bound}")]
    AlcoveTooLarge { size: usize, bound: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures caused by bad input rather than a broken internal invariant.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Invariant(_) | Error::Io(_) | Error::Json(_))
    }
}

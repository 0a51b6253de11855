use thiserror::Error;

/// Errors raised by the partition calculus and the fusion machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("blocks do not partition the points 1..={points}: {detail}")]
    OverlapOrGap { points: usize, detail: String },

    #[error("colour word of length {found} given for a row of {expected} points")]
    WordLengthMismatch { expected: usize, found: usize },

    #[error("shape mismatch: lower row has {lower} points, upper row has {upper}")]
    ShapeMismatch { lower: usize, upper: usize },

    #[error("colour mismatch at middle point {position}")]
    ColourMismatch { position: usize },

    #[error("cannot rotate a point out of an empty row")]
    EmptyRow,

    #[error("unknown colour `{0}`")]
    UnknownColour(String),

    #[error("invalid colour set: {0}")]
    InvalidColourSet(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{points} points exceed the configured limit of {limit}")]
    LimitExceeded { points: usize, limit: usize },

    #[error("generator with {points} points exceeds the closure bound {bound}")]
    BoundTooSmall { points: usize, bound: usize },

    #[error("fusion set is not associative")]
    NonAssociativeFusionSet,

    #[error("matrix dimension {dim}^{legs} exceeds the configured limit")]
    SizeOverflow { dim: usize, legs: usize },

    #[error("partition is not projective")]
    NotProjective,

    #[error("membership could not be decided within the saturation bound")]
    UnknownAtBound,

    #[error("operation requires a noncrossing category")]
    NotNoncrossing,

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid fusion set: {0}")]
    InvalidFusionSet(String),

    #[error("fusion set is not admissible: {0}")]
    NotAdmissible(String),

    #[error("infinite groups are not supported")]
    InfiniteGroupUnsupported,

    #[error("simplicity condition fails: {0}")]
    ConditionFails(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable identifier of the variant, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::OverlapOrGap { .. } => "OverlapOrGap",
            Error::WordLengthMismatch { .. } => "WordLengthMismatch",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::ColourMismatch { .. } => "ColourMismatch",
            Error::EmptyRow => "EmptyRow",
            Error::UnknownColour(_) => "UnknownColour",
            Error::InvalidColourSet(_) => "InvalidColourSet",
            Error::Parse(_) => "Parse",
            Error::LimitExceeded { .. } => "LimitExceeded",
            Error::BoundTooSmall { .. } => "BoundTooSmall",
            Error::NonAssociativeFusionSet => "NonAssociativeFusionSet",
            Error::SizeOverflow { .. } => "SizeOverflow",
            Error::NotProjective => "NotProjective",
            Error::UnknownAtBound => "UnknownAtBound",
            Error::NotNoncrossing => "NotNoncrossing",
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::InvalidFusionSet(_) => "InvalidFusionSet",
            Error::NotAdmissible(_) => "NotAdmissible",
            Error::InfiniteGroupUnsupported => "InfiniteGroupUnsupported",
            Error::ConditionFails(_) => "ConditionFails",
            Error::InvalidParameter(_) => "InvalidParameter",
        }
    }
}

use thiserror::Error;

/// Errors raised while building or interrogating a finite group.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("group order exceeds the configured cap of {cap}")]
    GroupTooLarge { cap: usize },

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("prime {prime} does not divide the group order {order}")]
    PrimeNotDividing { prime: u64, order: usize },

    #[error("group is not solvable")]
    NotSolvable,

    #[error("element {0} is central and is not a vertex of the commuting graph")]
    CentralElement(usize),

    #[error("subgroups do not form a complement pair")]
    NotComplement,

    #[error("format error: {0}")]
    FormatError(String),

    #[error("unknown witness `{0}`")]
    UnknownWitness(String),

    #[error("witness `{name}` fingerprint mismatch: {detail}")]
    FingerprintMismatch { name: String, detail: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GroupError {
    fn from(e: std::io::Error) -> Self {
        GroupError::Io(e.to_string())
    }
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

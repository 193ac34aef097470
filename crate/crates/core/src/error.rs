use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("presentation does not define a ring: {0}")]
    AxiomViolation(String),

    #[error("{what}: size {needed} exceeds cap {limit}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("polynomial {0:?} is not irreducible over Z_{1}")]
    NotIrreducible(Vec<u32>, u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("table is not an abelian group: {0}")]
    NotAbelian(String),

    #[error("subset is not a subgroup")]
    NotASubgroup,

    #[error("subset is not closed under multiplication: not a group")]
    NotAGroup,

    #[error("subset is not a submodule")]
    NotASubmodule,

    #[error("character is not generating for this bimodule")]
    NotGenerating,

    #[error("bimodule has no generating character")]
    NotFrobenius,

    #[error("character sum is not a rational integer")]
    NonIntegerSum,

    #[error("homogeneous weight system is singular")]
    SingularSystem,

    #[error("partitions live on different universes ({0} vs {1})")]
    UniverseMismatch(usize, usize),

    #[error("map has no pointwise representation in the requested matrix family")]
    NoLocalRepresentation,

    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub(crate) fn cap_check(what: &'static str, needed: u128, limit: u128) -> Result<()> {
    if needed > limit {
        Err(Error::CapExceeded {
            what,
            needed,
            limit,
        })
    } else {
        Ok(())
    }
}

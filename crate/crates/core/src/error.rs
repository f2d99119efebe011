use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation {images:?}: not a bijection of 0..{}", images.len())]
    InvalidPermutation { images: Vec<usize> },

    #[error("group closure exceeds the enumeration cap of {cap} elements")]
    ClosureExceedsCap { cap: usize },

    #[error("the given element set is not a subgroup of the parent group")]
    NotASubgroup,

    #[error("representations are defined over different groups")]
    GroupMismatch,

    #[error("generator count mismatch: group has {expected} generators, got {got} images")]
    GeneratorCount { expected: usize, got: usize },

    #[error("assignment is not a homomorphism: rho(s*t) != rho(s)*rho(t) for s = {s}, t = {t}")]
    NotAHomomorphism { s: String, t: String },

    #[error("invalid G-space action: {0}")]
    InvalidAction(String),

    #[error("invalid positive number: {0}")]
    InvalidPositive(String),

    #[error("{} orbits exceeds the invariant band enumeration cap", orbits.len())]
    TooManyOrbits { orbits: Vec<Vec<usize>> },

    #[error("an irreducible representation is required")]
    IrreducibleRequired,

    #[error("representation is not irreducible")]
    NotIrreducible,

    #[error("system of imprimitivity is not transitive")]
    NotTransitive,

    #[error("system of imprimitivity is trivial")]
    TrivialSystem,

    #[error("invalid block system: {0}")]
    InvalidBlockSystem(String),

    #[error("subgroup chain violated: expected H <= K <= G")]
    ChainViolation,

    #[error("representation is not defined over the given subgroup")]
    NotOverSubgroup,

    #[error("partition enumeration cap exceeded for degree {degree}")]
    PartitionCap { degree: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

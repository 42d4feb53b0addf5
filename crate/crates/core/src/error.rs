use thiserror::Error;

/// Errors raised by group constructions and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("element enumeration exceeded the cap of {cap} (reached {partial} elements)")]
    CapExceeded { cap: usize, partial: usize },

    #[error("point set is not invariant: generator {generator} maps point {point} outside it")]
    NotInvariant { generator: usize, point: usize },

    #[error("orbits of the subgroup do not form a block system: generator {generator} splits the class of point {point}")]
    NotBlockSystem { generator: usize, point: usize },

    #[error("point set is not an orbit of the group")]
    NotAnOrbit,

    #[error("group is not quasiregular: constituent on the orbit of point {point} is not regular")]
    NotQuasiregular { point: usize },

    #[error("group is not abelian; only abelian Sylow decompositions are supported")]
    NotNilpotent,

    #[error("zel is undefined for transitive groups")]
    Transitive,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("degree {degree} exceeds the oracle bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("{0} is not a prime")]
    NotPrime(usize),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

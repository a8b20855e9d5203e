use thiserror::Error;

/// Errors raised by semigroup arithmetic, family enumeration and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    InvalidGenerator(u64),
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u64),
    #[error("{0} is not a member of the semigroup")]
    NotAMember(i64),
    #[error("the semigroup is the whole of N and has no gaps")]
    NoGaps,
    #[error("{0} is not a special gap")]
    NotSpecialGap(u64),
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(u64),
    #[error("membership table is not a numerical semigroup: {0}")]
    NotASemigroup(String),
    #[error("{0} is not a member of the family")]
    NotInFamily(String),
    #[error("{0} is the minimum of the family")]
    IsMinimum(String),
    #[error("family axiom violated: no minimal generator of {0} can be removed inside the family")]
    NoRemovableGenerator(String),
    #[error("family axiom violated: {0} reached twice during enumeration")]
    DuplicateMember(String),
    #[error("enumeration exceeded the limit of {0} members")]
    LimitExceeded(usize),
    #[error("{0} is not an F-set of the family")]
    NotAnFSet(String),
    #[error("{0} is not a subset of the gaps of the minimum")]
    NotThetaSet(String),
    #[error("Frobenius number {0} must be a positive odd integer")]
    EvenFrobenius(i64),
    #[error("set contains zero")]
    ContainsZero,
    #[error("{0} is out of range")]
    OutOfRange(String),
    #[error("oracle bound exceeded: {0}")]
    BoundExceeded(String),
}

impl Error {
    /// Stable machine-readable identifier, used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "empty-generators",
            Error::InvalidGenerator(_) => "invalid-generator",
            Error::GcdNotOne(_) => "gcd-not-one",
            Error::NotAMember(_) => "not-a-member",
            Error::NoGaps => "no-gaps",
            Error::NotSpecialGap(_) => "not-special-gap",
            Error::NotMinimalGenerator(_) => "not-minimal-generator",
            Error::NotASemigroup(_) => "not-a-semigroup",
            Error::NotInFamily(_) => "not-in-family",
            Error::IsMinimum(_) => "is-minimum",
            Error::NoRemovableGenerator(_) => "no-removable-generator",
            Error::DuplicateMember(_) => "duplicate-member",
            Error::LimitExceeded(_) => "limit-exceeded",
            Error::NotAnFSet(_) => "not-an-fset",
            Error::NotThetaSet(_) => "not-theta-set",
            Error::EvenFrobenius(_) => "even-frobenius",
            Error::ContainsZero => "contains-zero",
            Error::OutOfRange(_) => "out-of-range",
            Error::BoundExceeded(_) => "bound-exceeded",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by the library. Variant names follow the operation
/// contracts; most carry the offending names so reports stay readable.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("missing composite for composable pair ({g}, {f})")]
    MissingComposite { g: String, f: String },
    #[error("composition is not associative on ({h}, {g}, {f})")]
    NotAssociative { h: String, g: String, f: String },
    #[error("pair ({0}, {1}) does not share source and target")]
    PairEndpointMismatch(String, String),
    #[error("functor does not preserve the composite of ({g}, {f})")]
    NotFunctorial { g: String, f: String },
    #[error("category is not connected")]
    NotConnected,
    #[error("no such object {0:?}")]
    NoSuchObject(String),
    #[error("functor is not surjective on objects: {0:?} has empty fibre")]
    NotSurjectiveOnObjects(String),
    #[error("star at {object:?} is not mapped injectively: {first} and {second} collide")]
    StarNotInjective {
        object: String,
        first: String,
        second: String,
    },
    #[error("star at {object:?} misses {missing}")]
    StarNotSurjective { object: String, missing: String },
    #[error("action is not free on objects: {0}")]
    ActionNotFree(String),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("pointed objects lie over different base objects")]
    FibreMismatch,
    #[error("not equivariant: {0}")]
    NotEquivariant(String),
    #[error("object sets differ or functor is not the identity on objects")]
    ObjectSetMismatch,
    #[error("not a groupoid: {0}")]
    NotAGroupoid(String),
    #[error("functor is not injective on objects")]
    NotInjectiveOnObjects,
    #[error("grading is not bijective on objects")]
    NotBijectiveOnObjects,
    #[error("grading target is not connected")]
    TargetNotConnected,
    #[error("invalid subgroupoid: {0}")]
    InvalidSubgroupoid(String),
    #[error("object-section is not equivariant: {0}")]
    SectionNotEquivariant(String),
    #[error("fundamental group presentation is not free after simplification ({0} relators left)")]
    BudgetOrNonFree(usize),
    #[error("arrow set is empty")]
    EmptyE,
    #[error("covering is not Galois")]
    NotGalois,
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

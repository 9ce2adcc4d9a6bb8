use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("quaternion algebra parameters differ: ({0}) vs ({1})")]
    MismatchedAlgebra(String, String),
    #[error("element is not in the Hurwitz order: {0}")]
    NotInHurwitzOrder(String),
    #[error("invalid algebra parameters: {0}")]
    InvalidParams(String),
    #[error("generator index {index} out of range for genus {genus}")]
    GeneratorOutOfRange { index: usize, genus: usize },
    #[error("homomorphism is not valid (relation evaluates to {0})")]
    InvalidHom(String),
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("genus {genus} outside the supported range {range}")]
    GenusOutOfRange { genus: usize, range: &'static str },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("not a representation: {0}")]
    NotARepresentation(String),
    #[error("incompatible weight spaces: {0}")]
    Incompatible(String),
    #[error("wedge degree {k} exceeds dimension {n}")]
    WedgeTooLarge { k: usize, n: usize },
    #[error("unknown scenario: {0}")]
    UnknownScenario(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("spin construction failed: {0}")]
    SpinConstruction(String),
    #[error("invariant line has dimension {0}, expected 1")]
    KernelDimension(usize),
    #[error("exterior power dimension {dim} exceeds the cap {cap}")]
    DimensionOverflow { dim: usize, cap: usize },
    #[error("element is rational; its kernel is the whole space")]
    RationalElement,
    #[error("model error: {0}")]
    Model(String),
    #[error("unsupported prime {0}: {1}")]
    BadPrime(u64, &'static str),
    #[error("unknown module filter: {0}")]
    UnknownModule(String),
    #[error("config error: {0}")]
    Config(String),
}

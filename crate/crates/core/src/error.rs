use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable x{} has no assigned value", crate::exactring::var_name_index(*.0))]
    MissingVariable(u32),
    #[error("x{} is assigned 0 but appears with a negative exponent", crate::exactring::var_name_index(*.0))]
    DivisionByZero(u32),
    #[error("series has zero constant term and is not invertible")]
    NonUnit,
    #[error("{0} is not an exact monomial quotient")]
    InexactDivision(String),
    #[error("continued fraction depth {depth} is too shallow for order {order}")]
    InsufficientDepth { depth: usize, order: usize },
    #[error("{what}: size {got} exceeds limit {limit}")]
    SizeGuard { what: &'static str, limit: u64, got: u64 },
    #[error("{0}")]
    OutOfDomain(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

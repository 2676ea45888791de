use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The reduced denominator maps to zero under the chosen specialization.
    #[error("denominator {denominator} vanishes at a primitive {order}-th root of unity")]
    DenominatorVanishes { denominator: String, order: u32 },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("diagram is not basis-eligible: {0}")]
    NotBasisEligible(String),
    #[error("specialization requires ell > d (ell = {ell}, d = {d})")]
    EllTooSmall { ell: u32, d: usize },
    #[error("{t} is congruent to -1 modulo ell = {ell}")]
    SpecialWeight { t: usize, ell: u32 },
    #[error("module dimension {dim} exceeds the bound {bound}")]
    DimensionBound { dim: usize, bound: usize },
    #[error("scalars over different cyclotomic orders ({0} and {1})")]
    OrderMismatch(u32, u32),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

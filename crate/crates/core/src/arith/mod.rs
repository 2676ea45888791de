//! Exact scalars: Laurent polynomials in `v`, the field `Q(v)`, cyclotomic
//! specializations and quantum integers.

pub mod cyclotomic;
pub mod field;
pub mod laurent;
pub mod parse;
pub mod quantum;
pub mod ratfunc;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicScalar};
pub use field::{specialize, Cyclotomic, Field, Generic, RationalPoint, SpecializationParams};
pub use laurent::LaurentPoly;
pub use parse::{parse_cyclotomic, parse_rational_function};
pub use quantum::{gauss_prefactor, quantum_binomial, quantum_factorial, quantum_integer, quantum_integer_at};
pub use ratfunc::RationalFunction;

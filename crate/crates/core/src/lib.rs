//! Exact computations in the endomorphism algebras `E(d, r) = p TL_dr p` of
//! tensor powers of quantum `sl_2` Weyl modules: diagram bases, Jones-Wenzl
//! projectors, Gram matrices of cell modules, tilting multiplicities at roots
//! of unity, and a matrix model of the quantum group to check them against.

pub mod arith;
pub mod cellular;
pub mod diagrams;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod projectors;
pub mod tilting;

pub use arith::{
    Cyclotomic, CyclotomicScalar, Field, Generic, LaurentPoly, RationalFunction, RationalPoint, SpecializationParams,
};
pub use cellular::{C3Config, C3Report, CellDatum, DecompositionMatrix};
pub use diagrams::{PlanarDiagram, TLElement, TwoRowTableau};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use oracle::{CommutantReport, ModuleAction};
pub use tilting::{MultiplicityTable, Route, TableRow, TiltingShape};

//! The Temperley-Lieb category: planar diagrams, linear combinations of them,
//! and the basis sets `B(d, r; t)`.

mod element;
mod enumerate;
mod planar;
mod tableau;

pub(crate) use element::LoopPowers;
pub use element::TLElement;
pub use enumerate::{
    b_count, b_total, b_vector, basis_diagrams, block_boundaries, enumerate_all, enumerate_monic, enumerate_monic_all,
    extend_by_block, m_count, m_vector, restrict_last_block,
};
pub use planar::{Endpoint, PlanarDiagram, MAX_POINTS};
pub use tableau::{tableaux, TwoRowTableau};

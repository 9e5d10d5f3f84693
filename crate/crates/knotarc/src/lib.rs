//! Arc presentations and grid diagrams of knots.
//!
//! Planar diagrams are built from PD codes, spanning-tree constructions turn
//! them into arc presentations, and the Kauffman polynomial gives the
//! matching lower bound on the arc index.

pub mod corpus;
pub mod diagram;
pub mod error;
pub mod filtered;
pub mod grid;
pub mod invariants;

pub use diagram::PlanarKnotDiagram;
pub use error::{Error, Result};
pub use grid::GridDiagram;
pub use invariants::LaurentPoly2;

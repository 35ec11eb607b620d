//! Exact graph equivariant cohomology of GKM graphs with legs that are
//! locally modeled on `T*Cⁿ`.
//!
//! The crate computes the cohomology three ways: by solving the congruence
//! relations degree by degree, through the presentation ring generated by
//! Thom classes of halfspaces (or hyperplanes, after forgetting the
//! residual coordinate), and through a module basis read off a shelling of
//! the hyperplane complex.

pub mod arrangements;
pub mod cohomology_engine;
pub mod exact_algebra;
pub mod gkm_graph;
pub mod hyperplane_geometry;
pub mod par;
pub mod shelling_basis;

mod error;

pub use error::{Error, Result};

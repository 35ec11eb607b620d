//! Graph equivariant cohomology: the congruence-relation solver, Thom
//! classes as cohomology classes, the presentation rings and their
//! graded comparison with the solver.

mod classes;
mod kernel;
mod ring;
mod solver;
mod verify;

pub use classes::{chi, polynomial_vars, thom_class_full, thom_class_forgetful, CohomologyClass};
pub use kernel::{kernel_forgetful_check, KernelDegreeReport, KernelReport};
pub use ring::{minimal_empty_families, presentation_ring, PresentationRing};
pub use solver::{cohomology_basis, GradedPiece};
pub use verify::{verify_iso, DegreeReport, IsoReport, VerifyOptions};

//! The hyperplane complex, its shellings, characteristic functions and the
//! module basis they produce.

mod basis;
mod complex;
mod lambda;

pub use basis::{
    basis_names, express_in_basis, localization_matrix, module_basis, ordinary_cohomology, relation_for_lj, relation_for_u,
    structure_constants, BasisExpansion, HyperplaneOrientation, ShellingBasis, StructureConstants,
};
pub use complex::{
    build_complex, find_shelling, minimal_new_face, search_budget_from_env, subsets, verify_shelling, Shelling, SimplicialComplex,
    DEFAULT_SEARCH_BUDGET,
};
pub use lambda::characteristic_function;

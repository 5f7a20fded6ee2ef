//! Explicit modules: irreducible constructions, functors, and analysis.

mod ambient;
pub mod build;
pub mod decompose;
pub mod functors;
pub mod highest;
pub mod module;
pub mod s2n;
pub mod serialize;

pub use build::{build_gl_irrep, build_o_irrep, det_character_module};
pub use decompose::{isotypic_component, multiplicity_decomposition, Decomposition};
pub use functors::{dual, exterior_power, restrict, tensor, tensor_vec, twist_by_det};
pub use serialize::{module_hash, module_json};
pub use s2n::{project_to_s, top_wedge, trace_pairing, wedge_pairing, SymModel};
pub use highest::{generated_submodule, grading_on, highest_of_weight, highest_vectors, submodule};
pub use module::{torus_generators, Grading, RepModule};

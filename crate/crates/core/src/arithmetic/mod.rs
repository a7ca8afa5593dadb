//! Supersingular j-invariants, modular polynomials and Brandt matrices.

pub mod brandt;
pub mod locus;
pub mod modpoly;
pub mod velu;

pub use brandt::{
    brandt_from_modpoly, brandt_graph, brandt_matrix, brandt_via_velu2, validate_brandt, BrandtJson,
    BrandtMatrix, Method,
};
pub use locus::{hasse_polynomial, legendre_to_j, supersingular_locus, SupersingularLocus};
pub use modpoly::{resolve_data_dir, ModularPolynomial, ReducedModularPolynomial, DATA_DIR_ENV};

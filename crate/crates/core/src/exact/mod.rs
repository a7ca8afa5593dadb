//! Exact arithmetic: finite fields, integer polynomials, rational functions,
//! integer matrices and real-root counting.

pub mod field;
pub mod json_int;
pub mod matrix;
pub mod poly;
pub mod quadratic;
pub mod ratfun;
pub mod sturm;

pub use field::{is_prime, poly_roots, Field, FieldElement, FieldPoly};
pub use matrix::{charpoly_berkowitz, charpoly_int, det_int, det_poly_matrix, three_term_det, IntMatrix};
pub use poly::{interpolate, IntPolynomial};
pub use quadratic::QuadraticBound;
pub use ratfun::{ratfun_normalize, RationalFunction};
pub use sturm::{real_root_count, sturm_chain, sturm_root_count, window_count, WindowCount};

/// `make_field(N, degree)`
pub fn make_field(characteristic: u64, degree: u32) -> crate::Result<Field> {
    Field::new(characteristic, degree)
}

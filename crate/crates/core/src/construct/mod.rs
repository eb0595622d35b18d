//! Constructors for the standard examples.

mod catalog;
mod envelope;
mod exterior;
mod kantor;
mod matrix;
mod small;

pub use catalog::{catalog, symplectic, CatalogEntry};
pub use envelope::grassmann_envelope;
pub use exterior::{clifford, grassmann, subset_basis, truncated_poly, truncated_poly_partial};
pub use kantor::{
    is_jordan_bracket, kantor_double, poisson_bracket_grassmann, twisted_double, vector_bracket, Bracket,
    SecondaryGrading,
};
pub use matrix::{fixed_points, matrix_super, osp_superinvolution, transpose_superinvolution, Superinvolution};
pub use small::{d_t, k3, non_jordan_control, superform, Superform};

//! Structure theory: multiplication algebra, centroid, simplicity, ideals,
//! Peirce decompositions, U-gradings and the standard polynomial.

mod grading;
mod peirce;
mod poly;
mod standard;
mod structure;
mod subspace;

pub use grading::{conjugation_matrix, joint_eigenspaces, m_vr_span, u_grading, GradingTag, UGrading};
pub use peirce::{idempotent_pairs, peirce, peirce_pair, Peirce, PeirceComponent, PeircePair};
pub use standard::{standard_polynomial, standard_polynomial_matrices, MAX_DEGREE};
pub use structure::{
    centroid, centroid_is_field, graded_mult_algebra, ideal_generated, is_simple, mult_algebra, OperatorAlgebra,
    Simplicity, MAX_DIM,
};
pub use subspace::Subspace;

//! Matrices over finite fields: characteristic polynomials, orders, the
//! Singer predicate and block companion structure.

pub mod centralizer;
pub mod charpoly;
pub mod companion;
pub mod matrix;
pub mod order;

pub use centralizer::{centralizer_size, centralizer_size_exhaustive, nilpotent_count, NilpotentCount};
pub use charpoly::{char_poly, char_poly_in_place};
pub use companion::{
    assemble_block_companion, block_basis, canonical_mid_basis, companion, lift_to_block_companion,
    matrix_of_mult_in_basis, recognize_block_companion, regular_representation, BlockCompanionSpec,
};
pub use matrix::GfMatrix;
pub use order::{is_singer_cycle, matrix_order};

//! Exact integer linear algebra: arbitrary-precision matrices, Smith
//! normal form, Diophantine solving, finitely generated abelian groups,
//! and homology of chain complexes.
//!
//! All values are immutable after construction and all operations are
//! pure functions; concurrent use on shared inputs is safe.

mod complex;
mod group;
mod matrix;

pub use complex::{homology_at, is_cycle_at, ChainComplexZ, HomologyAt};
pub use group::{
    block_hom, hom_group, hom_group_constrained, AbElement, AbHom, CanonicalForm, FgAbGroup,
    HomGroup,
};
pub use matrix::{
    kernel_basis, lattice_basis, lattice_contains_vec, preimage_lattice, smith_normal_form,
    solve_linear, solve_modulo, solve_with_snf, vec_add, vec_is_zero, vec_neg, vec_sub, vec_zero,
    IntMatrix, Snf,
};

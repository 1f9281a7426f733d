//! Exact lattice algebra: Graver bases, fibers, monomial ideals, vertex
//! ideals and Gröbner fans of lattice ideals.
//!
//! Runs without `std` (needs `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decomposition;
pub mod error;
pub mod fan;
pub mod graver;
pub mod groebner;
pub mod lattice;
pub mod lp;
pub mod matrix;
pub mod monomial;
pub mod polyhedra;
pub mod properties;
pub mod reduce;
pub mod vector;
pub mod vertex_ideal;

pub use error::{Error, Result};
pub use graver::{graver_basis, GraverBasis};
pub use lattice::Lattice;
pub use matrix::IntMatrix;
pub use monomial::{Monomial, MonomialIdeal};

/// Work budgets for the enumerative routines. Exceeding one returns
/// [`Error::BudgetExceeded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Lattice points visited while enumerating a fiber or polyhedron.
    pub fiber_points: u64,
    /// Elements held during a Graver basis completion.
    pub graver_elements: usize,
    /// Cones visited while walking a Gröbner fan.
    pub fan_cones: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            fiber_points: 10_000_000,
            graver_elements: 1_000_000,
            fan_cones: 100_000,
        }
    }
}

use alloc::string::String;
use alloc::vec::Vec;

/// Errors raised by the lattice and ideal computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("lattice is not pointed (L meets N^n outside 0); fibers are unbounded")]
    UnboundedFiber,

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("projection drops the lattice dimension from {from} to {to}")]
    DimensionDrop { from: usize, to: usize },

    #[error("weight vector is not positive on L ∩ N^n")]
    NonPositiveWeight,

    #[error("cone is not full-dimensional")]
    NotFullDimensional,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("{what} budget of {budget} exceeded")]
    BudgetExceeded { what: &'static str, budget: u64 },

    #[error("unknown example {0:?}")]
    UnknownExample(String),

    #[error("check failed: {}", .0.join("; "))]
    CheckFailed(Vec<String>),
}

impl Error {
    /// Budget errors get their own exit status in the CLI.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

//! Exact construction and verification of finite-dimensional Hopf algebras
//! over cyclotomic fields.
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod constructions;
pub mod error;
pub mod groups;
pub mod hopf;
pub mod linalg;
pub mod rational;
pub mod scalars;

pub use error::Error;
pub use linalg::{Accum, SparseVec, Subspace};
pub use rational::Rational;
pub use scalars::{Conductor, CycNumber};

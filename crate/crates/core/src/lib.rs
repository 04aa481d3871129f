//! Bound states of the radial Dirac equation with Hulthén scalar, vector and
//! tensor potentials in the spin and pseudospin symmetric limits.
//!
//! The energy spectrum comes from the parametric Nikiforov-Uvarov method
//! ([`nu`]) applied to the Pekeris-approximated radial equations
//! ([`hulthen`]). [`spectrum`] solves the energy condition in closed form,
//! [`wavefunction`] evaluates the radial spinor and [`oracle`] provides an
//! independent finite-difference eigensolver for cross-checks.
//!
//! All energies and inverse lengths are in fm⁻¹, lengths in fm (ħ = c = 1).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod hulthen;
pub mod nu;
pub mod oracle;
pub mod special;
pub mod spectrum;
pub mod tables;
pub mod wavefunction;
mod tridiag;

pub use error::{Error, Result};
pub use hulthen::{PhysicalParameters, StateLabel, SymmetryLimit};
pub use spectrum::{BoundState, DoubletReport};

//! Exact diagonalization and Bethe Ansatz machinery for small isotropic
//! (XXX) Heisenberg rings.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`]: spin-deviation configurations, translation orbits,
//!   symmetry-adapted ("wavelet") bases, parity.
//! * [`heisenberg`]: sector Hamiltonians, exact characteristic polynomials,
//!   spectra, eigenspace projectors and the total spin.
//! * [`polynomials`]: complex polynomials, root finding, Cardano's formula,
//!   palindromic folding and reduction modulo a cubic.
//! * [`inverse_bethe`]: phases and rapidities from conserved quantities,
//!   Bethe-equation residuals, string classification and riggings.
//! * [`algebraic_bethe`]: Lax operators, the monodromy matrix, `B`-operator
//!   blocks, Bethe state construction and density matrices.
//! * [`checks`]: the reproducible reference checks for the seven-site ring.

pub mod algebraic_bethe;
pub mod checks;
mod error;
pub mod heisenberg;
pub mod inverse_bethe;
pub mod lattice;
pub mod polynomials;
pub mod serde_complex;

pub use error::{Error, Result};

pub use num_complex::Complex64;

/// Dense complex matrix used for every operator representation.
pub type CMatrix = nalgebra::DMatrix<Complex64>;
/// Dense complex column vector.
pub type CVector = nalgebra::DVector<Complex64>;

/// Largest ring handled by the dense machinery (`2^14` states).
pub const MAX_NODES: usize = 14;
/// Smallest ring size accepted.
pub const MIN_NODES: usize = 3;

/// Imaginary unit.
pub const I: Complex64 = Complex64::new(0.0, 1.0);

//! Numerical toolkit for self-similar solutions of degenerate PDEs.
//!
//! Three layers:
//!
//! * [`hyperfun`] — generalized hypergeometric series (pFq, the Humbert Ψ₂
//!   double series, Kampé de Fériet double series), their parameter-shift
//!   derivatives, and a Gauss–Jacobi quadrature oracle for ₃F₂.
//! * [`families`] — the catalog of degenerate PDE families, their similarity
//!   substitutions u = P·ω(σ), and every closed-form solution branch as an
//!   evaluable scalar field.
//! * [`verify`] — finite-difference residuals of the full PDE operators,
//!   analytic residuals of the reduced ODEs/systems, refinement-order
//!   reporting, and prefactor adjudication for the disputed closed forms.

pub mod error;
pub mod families;
pub mod hyperfun;
pub mod verify;

pub use error::{Error, Result};

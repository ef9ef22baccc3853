//! Hypergeometric series evaluators with controlled truncation.
//!
//! All evaluators sum the defining series directly and stop once
//! `consecutive_small` successive terms (diagonal shells for the
//! two-variable series) are relatively small, see [`EvalOptions`].
//! Analytic derivatives use the standard parameter-shift rules.
//!
//! Everything here is a pure function of its inputs; all types are `Send`
//! and `Sync` and safe to call from any number of threads.

mod kdf;
mod options;
mod pfq;
mod pochhammer;
mod psi2;
mod quadrature;

pub use kdf::{eval_kdf, kdf_partial, KdfSpec};
pub use options::{EvalOptions, EvalResult};
pub use pfq::{eval_pfq, pfq_derivative, PfqSpec};
pub use pochhammer::pochhammer;
pub use psi2::{eval_psi2, psi2_partial, Psi2Spec};
pub use quadrature::{clausen_3f2_integral, GaussJacobi};

/// True for 0, -1, -2, …: the values at which a series denominator
/// parameter makes the series undefined.
pub(crate) fn is_nonpositive_integer(v: f64) -> bool {
    v <= 0.0 && v.fract() == 0.0
}

//! Truncation control shared by all series evaluators.

use crate::error::{Error, Result};

/// Absolute floor used in place of `rel_tol * |sum|` when the partial sum
/// is exactly zero.
const ABS_FLOOR: f64 = 1e-300;

/// Safety factor applied to the last term when estimating truncation error.
const SAFETY: f64 = 10.0;

/// Stopping controls for series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Relative tolerance on the truncation estimate.
    pub rel_tol: f64,
    /// Term budget (diagonal-shell budget for the two-variable series).
    pub max_terms: usize,
    /// Number of successive small terms required before stopping.
    pub consecutive_small: usize,
}

impl EvalOptions {
    /// Hard cap on `max_terms`.
    pub const MAX_TERMS_CAP: usize = 1_000_000;

    pub fn new(rel_tol: f64, max_terms: usize, consecutive_small: usize) -> Result<Self> {
        if !(rel_tol > 0.0) {
            return Err(Error::domain("rel_tol must be positive"));
        }
        if max_terms == 0 || max_terms > Self::MAX_TERMS_CAP {
            return Err(Error::domain(format!(
                "max_terms must be in 1..={}",
                Self::MAX_TERMS_CAP
            )));
        }
        if consecutive_small == 0 {
            return Err(Error::domain("consecutive_small must be at least 1"));
        }
        Ok(EvalOptions {
            rel_tol,
            max_terms,
            consecutive_small,
        })
    }

    /// Same options with a different relative tolerance.
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            rel_tol: 1e-12,
            max_terms: 10_000,
            consecutive_small: 3,
        }
    }
}

/// Outcome of one series evaluation.
///
/// When `converged` is true the truncation estimate (safety-factored
/// magnitude of the last term) is at most `rel_tol * |value|`, or at most
/// the 1e-300 absolute floor when the value is exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    /// Terms accumulated; diagonal shells for the two-variable series.
    pub terms_used: usize,
    pub truncation_estimate: f64,
    pub converged: bool,
}

impl EvalResult {
    /// Value if converged, otherwise a `Convergence` error carrying the
    /// best partial value.
    pub fn require_converged(&self) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::Convergence {
                value: self.value,
                terms_used: self.terms_used,
                truncation_estimate: self.truncation_estimate,
            })
        }
    }

    /// Result scaled by a constant factor (value and estimate).
    pub(crate) fn scaled(self, factor: f64) -> EvalResult {
        EvalResult {
            value: factor * self.value,
            truncation_estimate: factor.abs() * self.truncation_estimate,
            ..self
        }
    }
}

/// Running partial sum implementing the stop criterion: terminate once
/// `consecutive_small` successive terms each satisfy
/// `|term| <= rel_tol * |sum|` and the safety-factored last term fits
/// within the same bound (so the reported truncation estimate honours the
/// `EvalResult` contract).
pub(crate) struct SeriesAccumulator {
    opts: EvalOptions,
    sum: f64,
    small_run: usize,
    terms: usize,
    last_abs: f64,
    done: bool,
}

impl SeriesAccumulator {
    pub fn new(opts: &EvalOptions) -> Self {
        SeriesAccumulator {
            opts: *opts,
            sum: 0.0,
            small_run: 0,
            terms: 0,
            last_abs: 0.0,
            done: false,
        }
    }

    fn threshold(&self) -> f64 {
        if self.sum == 0.0 {
            ABS_FLOOR
        } else {
            self.opts.rel_tol * self.sum.abs()
        }
    }

    /// Adds one term (or shell sum); returns true once the stop criterion
    /// is met or the sum stops being finite.
    pub fn push(&mut self, term: f64) -> bool {
        self.sum += term;
        self.terms += 1;
        self.last_abs = term.abs();
        if !self.sum.is_finite() {
            self.done = false;
            return true;
        }
        let thr = self.threshold();
        if self.last_abs <= thr {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        self.done = self.small_run >= self.opts.consecutive_small && SAFETY * self.last_abs <= thr;
        self.done
    }

    pub fn budget(&self) -> usize {
        self.opts.max_terms
    }

    pub fn finish(self) -> EvalResult {
        EvalResult {
            value: self.sum,
            terms_used: self.terms,
            truncation_estimate: SAFETY * self.last_abs,
            converged: self.done && self.sum.is_finite(),
        }
    }
}

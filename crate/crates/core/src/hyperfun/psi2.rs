//! Humbert Ψ₂ double series.

use super::options::SeriesAccumulator;
use super::{is_nonpositive_integer, EvalOptions, EvalResult};
use crate::error::{Error, Result};

/// Parameters of Ψ₂(a; c1, c2; x, y) = Σ (a)_{m+n}/((c1)_m (c2)_n m! n!) xᵐ yⁿ.
///
/// The series is entire in both variables. c1 and c2 must not be zero or a
/// negative integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Psi2Spec {
    pub a: f64,
    pub c1: f64,
    pub c2: f64,
}

impl Psi2Spec {
    pub fn new(a: f64, c1: f64, c2: f64) -> Result<Self> {
        for c in [c1, c2] {
            if is_nonpositive_integer(c) {
                return Err(Error::domain(format!(
                    "lower parameter {c} is zero or a negative integer"
                )));
            }
        }
        if !(a.is_finite() && c1.is_finite() && c2.is_finite()) {
            return Err(Error::domain("parameter is not finite"));
        }
        Ok(Psi2Spec { a, c1, c2 })
    }
}

/// Sums Ψ₂ over diagonal shells m+n = const; the stop criterion applies to
/// shell sums, matching the (a)_{m+n} joint-index growth.
pub fn eval_psi2(spec: &Psi2Spec, x: f64, y: f64, opts: &EvalOptions) -> Result<EvalResult> {
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::domain("series argument is not finite"));
    }
    let mut acc = SeriesAccumulator::new(opts);
    // shell[m] = term at (m, k - m) for the current shell k
    let mut shell = vec![1.0_f64];
    for k in 1..=acc.budget() {
        if acc.push(shell.iter().sum()) {
            break;
        }
        let kf = k as f64;
        let joint = spec.a + kf - 1.0;
        let mut next = vec![0.0; k + 1];
        for (m, &prev) in shell.iter().enumerate() {
            // step (m, k-1-m) -> (m, k-m)
            let n = (k - m) as f64;
            next[m] = prev * joint * y / ((spec.c2 + n - 1.0) * n);
        }
        // step (k-1, 0) -> (k, 0)
        next[k] = shell[k - 1] * joint * x / ((spec.c1 + kf - 1.0) * kf);
        shell = next;
    }
    Ok(acc.finish())
}

/// Mixed partial ∂^{dx}∂^{dy} Ψ₂ via parameter shifts: each ∂/∂x carries a
/// factor a/c1 and shifts (a, c1) by one; each ∂/∂y the same with c2.
pub fn psi2_partial(
    spec: &Psi2Spec,
    x: f64,
    y: f64,
    dx_order: u32,
    dy_order: u32,
    opts: &EvalOptions,
) -> Result<EvalResult> {
    let mut a = spec.a;
    let mut c1 = spec.c1;
    let mut c2 = spec.c2;
    let mut factor = 1.0;
    for _ in 0..dx_order {
        factor *= a / c1;
        a += 1.0;
        c1 += 1.0;
    }
    for _ in 0..dy_order {
        factor *= a / c2;
        a += 1.0;
        c2 += 1.0;
    }
    let shifted = Psi2Spec::new(a, c1, c2)?;
    Ok(eval_psi2(&shifted, x, y, opts)?.scaled(factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfun::{eval_pfq, PfqSpec};
    use approx::assert_relative_eq;

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    #[test]
    fn origin_is_one() {
        let spec = Psi2Spec::new(0.5, 0.75, 1.25).unwrap();
        let r = eval_psi2(&spec, 0.0, 0.0, &opts()).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.converged);
        assert!(r.terms_used <= opts().consecutive_small + 1);
    }

    #[test]
    fn y_zero_slice_is_kummer() {
        let spec = Psi2Spec::new(0.5, 0.75, 1.25).unwrap();
        let slice = eval_psi2(&spec, 0.3, 0.0, &opts()).unwrap().value;
        let f11 = PfqSpec::f11(0.5, 0.75).unwrap();
        let direct = eval_pfq(&f11, 0.3, &opts()).unwrap().value;
        assert_relative_eq!(slice, direct, max_relative = 1e-13);
    }

    /// Naive double sum over m, n <= 200, every term built from scratch.
    /// Numerator and denominator factors are interleaved so intermediate
    /// products stay in f64 range: (a)_{m+n} = (a)_n (a+n)_m.
    fn brute_force_psi2(a: f64, c1: f64, c2: f64, x: f64, y: f64) -> f64 {
        let mut sum = 0.0;
        for m in 0..=200u32 {
            for n in 0..=200u32 {
                let mut term = 1.0;
                for j in 0..n {
                    let jf = j as f64;
                    term *= y / (jf + 1.0) * ((a + jf) / (c2 + jf));
                }
                for i in 0..m {
                    let ifl = i as f64;
                    term *= x / (ifl + 1.0) * ((a + n as f64 + ifl) / (c1 + ifl));
                }
                sum += term;
            }
        }
        sum
    }

    #[test]
    fn matches_brute_force_double_sum() {
        // Frozen reference 0.64482893344368536 was produced by the same
        // oracle at 40-digit precision.
        let (a, c1, c2) = (0.5, 0.75, 1.25);
        let (x, y) = (-0.4, -0.9);
        let brute = brute_force_psi2(a, c1, c2, x, y);
        let spec = Psi2Spec::new(a, c1, c2).unwrap();
        let r = eval_psi2(&spec, x, y, &opts()).unwrap();
        assert_relative_eq!(r.value, brute, max_relative = 1e-13);
        assert_relative_eq!(r.value, 0.644_828_933_443_685_36, max_relative = 1e-13);
    }

    #[test]
    fn symmetry_in_variable_exchange() {
        let lhs = eval_psi2(&Psi2Spec::new(0.5, 0.75, 1.25).unwrap(), -0.4, -0.9, &opts())
            .unwrap()
            .value;
        let rhs = eval_psi2(&Psi2Spec::new(0.5, 1.25, 0.75).unwrap(), -0.9, -0.4, &opts())
            .unwrap()
            .value;
        assert_relative_eq!(lhs, rhs, max_relative = 1e-13);
    }

    #[test]
    fn first_partials_at_origin() {
        let spec = Psi2Spec::new(0.5, 0.75, 1.25).unwrap();
        let px = psi2_partial(&spec, 0.0, 0.0, 1, 0, &opts()).unwrap().value;
        let py = psi2_partial(&spec, 0.0, 0.0, 0, 1, &opts()).unwrap().value;
        let pxy = psi2_partial(&spec, 0.0, 0.0, 1, 1, &opts()).unwrap().value;
        assert_relative_eq!(px, 0.5 / 0.75, max_relative = 1e-15);
        assert_relative_eq!(py, 0.5 / 1.25, max_relative = 1e-15);
        assert_relative_eq!(pxy, 0.5 * 1.5 / (0.75 * 1.25), max_relative = 1e-15);
    }

    #[test]
    fn rejects_bad_lower_parameter() {
        assert!(Psi2Spec::new(0.5, -1.0, 1.25).is_err());
        assert!(Psi2Spec::new(0.5, 0.75, 0.0).is_err());
    }
}

//! Evaluation and analytic partial derivatives of branch ω forms.

use super::catalog::{OmegaForm, SeriesKind};
use super::similarity::SimilarityVars;
use crate::error::{Error, Result};
use crate::hyperfun::{kdf_partial, pfq_derivative, psi2_partial, EvalOptions};

/// ω at the given similarity variables.
pub fn omega_value(form: &OmegaForm, vars: &SimilarityVars, opts: &EvalOptions) -> Result<f64> {
    omega_partial(form, vars, 0, 0, opts)
}

/// Falling factorial p(p−1)···(p−r+1).
fn falling(p: f64, r: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..r {
        acc *= p - i as f64;
    }
    acc
}

fn binomial(n: u32, k: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Mixed partial ∂^{dx}_σ₁ ∂^{dy}_σ₂ ω via the product rule over the
/// power prefactors, with series derivatives from the parameter-shift
/// rules. For single-variable forms `dy` must be zero.
///
/// The |σ|-power derivative used is dʳ/dσʳ |σ|ᵖ = p(p−1)···(p−r+1)·|σ|ᵖ/σʳ,
/// valid on each connected component away from σ = 0.
pub fn omega_partial(
    form: &OmegaForm,
    vars: &SimilarityVars,
    dx: u32,
    dy: u32,
    opts: &EvalOptions,
) -> Result<f64> {
    let (s1, s2, two_vars) = match *vars {
        SimilarityVars::One(s) => (s, 0.0, false),
        SimilarityVars::Two(xi, eta) => (xi, eta, true),
    };
    if !two_vars && (dy > 0 || form.y_power != 0.0) {
        return Err(Error::domain(
            "single-variable form cannot be differentiated in the second variable",
        ));
    }

    // Series mixed partial at the scaled arguments, including chain-rule
    // powers of arg_scale.
    let series_partial = |i: u32, j: u32| -> Result<f64> {
        let scale = form.arg_scale.powi((i + j) as i32);
        let r = match &form.series {
            SeriesKind::Pfq(spec) => {
                debug_assert_eq!(j, 0);
                pfq_derivative(spec, form.arg_scale * s1, i, opts)?
            }
            SeriesKind::Psi2(spec) => {
                psi2_partial(spec, form.arg_scale * s1, form.arg_scale * s2, i, j, opts)?
            }
            SeriesKind::Kdf(spec) => {
                kdf_partial(spec, form.arg_scale * s1, form.arg_scale * s2, i, j, opts)?
            }
        };
        Ok(scale * r.require_converged()?)
    };

    let pre1 = s1.abs().powf(form.x_power);
    let pre2 = if two_vars {
        s2.abs().powf(form.y_power)
    } else {
        1.0
    };

    let mut total = 0.0;
    for r1 in 0..=dx {
        let f1 = falling(form.x_power, r1);
        if f1 == 0.0 {
            continue;
        }
        for r2 in 0..=dy {
            let f2 = falling(form.y_power, r2);
            if f2 == 0.0 {
                continue;
            }
            let coeff = binomial(dx, r1) * binomial(dy, r2) * f1 * f2;
            let powers = pre1 / s1.powi(r1 as i32) * pre2 / s2.powi(r2 as i32);
            total += coeff * powers * series_partial(dx - r1, dy - r2)?;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfun::PfqSpec;
    use approx::assert_relative_eq;

    fn exp_form(power: f64) -> OmegaForm {
        OmegaForm {
            x_power: power,
            y_power: 0.0,
            arg_scale: 1.0,
            series: SeriesKind::Pfq(PfqSpec::f00()),
        }
    }

    #[test]
    fn plain_series_partial_matches_exponential() {
        let form = exp_form(0.0);
        let opts = EvalOptions::default();
        for order in 0..4 {
            let v = omega_partial(&form, &SimilarityVars::One(-0.7), order, 0, &opts).unwrap();
            assert_relative_eq!(v, (-0.7f64).exp(), max_relative = 1e-13);
        }
    }

    #[test]
    fn power_product_rule_matches_closed_form() {
        // ω(σ) = |σ|^p e^σ on σ < 0: ω' = (p/σ)|σ|^p e^σ + |σ|^p e^σ.
        let p = 0.37;
        let form = exp_form(p);
        let opts = EvalOptions::default();
        let s = -0.8;
        let v = omega_partial(&form, &SimilarityVars::One(s), 1, 0, &opts).unwrap();
        let expect = s.abs().powf(p) * s.exp() * (p / s + 1.0);
        assert_relative_eq!(v, expect, max_relative = 1e-13);

        // Second derivative: (p(p-1)/σ² + 2p/σ + 1)|σ|^p e^σ.
        let v2 = omega_partial(&form, &SimilarityVars::One(s), 2, 0, &opts).unwrap();
        let expect2 = s.abs().powf(p) * s.exp() * (p * (p - 1.0) / (s * s) + 2.0 * p / s + 1.0);
        assert_relative_eq!(v2, expect2, max_relative = 1e-13);
    }

    #[test]
    fn scaled_argument_chain_rule() {
        // ω(σ) = e^{−σ/4}: ω'' = e^{−σ/4}/16.
        let form = OmegaForm {
            x_power: 0.0,
            y_power: 0.0,
            arg_scale: -0.25,
            series: SeriesKind::Pfq(PfqSpec::f00()),
        };
        let opts = EvalOptions::default();
        let v = omega_partial(&form, &SimilarityVars::One(2.0), 2, 0, &opts).unwrap();
        assert_relative_eq!(v, (-0.5f64).exp() / 16.0, max_relative = 1e-13);
    }

    #[test]
    fn rejects_y_derivative_of_single_variable_form() {
        let form = exp_form(0.0);
        let opts = EvalOptions::default();
        assert!(omega_partial(&form, &SimilarityVars::One(-0.5), 0, 1, &opts).is_err());
    }
}

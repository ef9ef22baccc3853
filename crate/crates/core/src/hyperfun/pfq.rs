//! Generalized hypergeometric series pFq by direct summation.

use super::options::SeriesAccumulator;
use super::{is_nonpositive_integer, EvalOptions, EvalResult};
use crate::error::{Error, Result};

/// Below this argument a ₁F₁ evaluation is rerouted through the Kummer
/// transform ₁F₁(a;c;x) = eˣ·₁F₁(c−a;c;−x); direct summation of the
/// alternating series loses more than ~e^|x|·ε of relative accuracy.
const KUMMER_SWITCH: f64 = -10.0;

/// Parameter bundle of a pFq series Σ ∏(aᵢ)_m/∏(cⱼ)_m · xᵐ/m!.
///
/// Construction rejects denominator parameters that are zero or a negative
/// integer, and p > q+1 (zero radius of convergence). For p = q+1 the
/// series converges on |x| < 1 only; `eval_pfq` enforces that at call time.
#[derive(Debug, Clone, PartialEq)]
pub struct PfqSpec {
    numerator: Vec<f64>,
    denominator: Vec<f64>,
}

impl PfqSpec {
    pub fn new(numerator: Vec<f64>, denominator: Vec<f64>) -> Result<Self> {
        for &c in &denominator {
            if is_nonpositive_integer(c) {
                return Err(Error::domain(format!(
                    "denominator parameter {c} is zero or a negative integer"
                )));
            }
            if !c.is_finite() {
                return Err(Error::domain("denominator parameter is not finite"));
            }
        }
        if numerator.iter().any(|a| !a.is_finite()) {
            return Err(Error::domain("numerator parameter is not finite"));
        }
        if numerator.len() > denominator.len() + 1 {
            return Err(Error::domain(format!(
                "series {}F{} has zero radius of convergence",
                numerator.len(),
                denominator.len()
            )));
        }
        Ok(PfqSpec {
            numerator,
            denominator,
        })
    }

    /// ₀F₀(;;x) = eˣ.
    pub fn f00() -> Self {
        PfqSpec {
            numerator: vec![],
            denominator: vec![],
        }
    }

    /// Kummer's confluent function ₁F₁(a;c;x).
    pub fn f11(a: f64, c: f64) -> Result<Self> {
        Self::new(vec![a], vec![c])
    }

    /// Gauss function ₂F₁(a,b;c;x).
    pub fn f21(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(vec![a, b], vec![c])
    }

    /// Clausen function ₃F₂(a1,a2,a3;c1,c2;x).
    pub fn f32(a: [f64; 3], c: [f64; 2]) -> Result<Self> {
        Self::new(a.to_vec(), c.to_vec())
    }

    /// ₁F₂(a;c1,c2;x).
    pub fn f12(a: f64, c: [f64; 2]) -> Result<Self> {
        Self::new(vec![a], c.to_vec())
    }

    /// ₁F₃(a;c1,c2,c3;x).
    pub fn f13(a: f64, c: [f64; 3]) -> Result<Self> {
        Self::new(vec![a], c.to_vec())
    }

    /// ₀F₂(c1,c2;x).
    pub fn f02(c: [f64; 2]) -> Result<Self> {
        Self::new(vec![], c.to_vec())
    }

    pub fn numerator(&self) -> &[f64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[f64] {
        &self.denominator
    }

    fn p(&self) -> usize {
        self.numerator.len()
    }

    fn q(&self) -> usize {
        self.denominator.len()
    }
}

/// Sums the pFq series at `x`.
///
/// Rejects |x| ≥ 1 when p = q+1 (no analytic continuation is attempted).
/// A non-converged result (term budget exhausted) is returned with
/// `converged = false` and the best partial value.
pub fn eval_pfq(spec: &PfqSpec, x: f64, opts: &EvalOptions) -> Result<EvalResult> {
    if !x.is_finite() {
        return Err(Error::domain("series argument is not finite"));
    }
    if spec.p() == spec.q() + 1 && x.abs() >= 1.0 {
        return Err(Error::domain(format!(
            "argument {x} outside the open unit disk for a {}F{} series",
            spec.p(),
            spec.q()
        )));
    }
    if spec.p() == 1 && spec.q() == 1 && x < KUMMER_SWITCH {
        // e^x * 1F1(c-a; c; -x): same value, all-positive-tail summation.
        let flipped = PfqSpec {
            numerator: vec![spec.denominator[0] - spec.numerator[0]],
            denominator: spec.denominator.clone(),
        };
        return Ok(sum_series(&flipped, -x, opts).scaled(x.exp()));
    }
    Ok(sum_series(spec, x, opts))
}

fn sum_series(spec: &PfqSpec, x: f64, opts: &EvalOptions) -> EvalResult {
    let mut acc = SeriesAccumulator::new(opts);
    let mut term = 1.0_f64;
    for m in 0..acc.budget() {
        if acc.push(term) {
            break;
        }
        let mf = m as f64;
        let mut ratio = x / (mf + 1.0);
        for &a in &spec.numerator {
            ratio *= a + mf;
        }
        for &c in &spec.denominator {
            ratio /= c + mf;
        }
        term *= ratio;
    }
    acc.finish()
}

/// k-th derivative of pFq at `x` via the parameter-shift rule: each
/// derivative multiplies by ∏aᵢ/∏cⱼ and increments every parameter by one.
///
/// Fails with a domain error if a shifted denominator parameter lands on a
/// nonpositive integer.
pub fn pfq_derivative(spec: &PfqSpec, x: f64, order: u32, opts: &EvalOptions) -> Result<EvalResult> {
    let mut num = spec.numerator.clone();
    let mut den = spec.denominator.clone();
    let mut factor = 1.0;
    for _ in 0..order {
        for a in &mut num {
            factor *= *a;
            *a += 1.0;
        }
        for c in &mut den {
            factor /= *c;
            *c += 1.0;
        }
    }
    let shifted = PfqSpec::new(num, den)?;
    Ok(eval_pfq(&shifted, x, opts)?.scaled(factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    #[test]
    fn gauss_at_origin_is_one() {
        let spec = PfqSpec::f21(0.7, 1.1, 2.3).unwrap();
        let r = eval_pfq(&spec, 0.0, &opts()).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.converged);
        assert!(r.terms_used <= opts().consecutive_small + 1);
    }

    #[test]
    fn equal_parameters_collapse_to_exp() {
        let spec = PfqSpec::f11(0.5, 0.5).unwrap();
        let r = eval_pfq(&spec, 1.0, &opts()).unwrap();
        assert_relative_eq!(r.value, std::f64::consts::E, max_relative = 1e-14);
    }

    #[test]
    fn gauss_log_case_vs_brute_force() {
        // 2F1(1,1;2;x) = -ln(1-x)/x; at x = 0.5 this is 2 ln 2.
        let spec = PfqSpec::f21(1.0, 1.0, 2.0).unwrap();
        let tight = opts().with_rel_tol(1e-14);
        let r = eval_pfq(&spec, 0.5, &tight).unwrap();
        assert_relative_eq!(r.value, 2.0 * std::f64::consts::LN_2, max_relative = 1e-14);

        // Independent brute-force partial sum of the defining series, each
        // term built from pochhammer products rather than running ratios.
        // Divisions grouped so no intermediate product overflows.
        use crate::hyperfun::pochhammer;
        let mut brute = 0.0;
        for m in 0..120u32 {
            let factorial = pochhammer(1.0, m);
            brute += (pochhammer(1.0, m) / pochhammer(2.0, m))
                * (pochhammer(1.0, m) / factorial)
                * 0.5f64.powi(m as i32);
        }
        assert_relative_eq!(r.value, brute, max_relative = 1e-14);
    }

    #[test]
    fn rejects_gauss_outside_unit_disk() {
        let spec = PfqSpec::f21(1.0, 1.0, 2.0).unwrap();
        assert!(matches!(
            eval_pfq(&spec, 1.0, &opts()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            eval_pfq(&spec, -1.2, &opts()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rejects_nonpositive_integer_denominator() {
        assert!(matches!(PfqSpec::f11(0.5, -2.0), Err(Error::Domain(_))));
        assert!(matches!(PfqSpec::f11(0.5, 0.0), Err(Error::Domain(_))));
        assert!(PfqSpec::f11(0.5, -2.5).is_ok());
    }

    #[test]
    fn rejects_zero_radius_signature() {
        assert!(matches!(
            PfqSpec::new(vec![1.0, 2.0, 3.0], vec![4.0]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn budget_exhaustion_reports_nonconverged_finite_value() {
        let spec = PfqSpec::f11(0.5, 1.5).unwrap();
        let tight = EvalOptions::new(1e-12, 10, 3).unwrap();
        let r = eval_pfq(&spec, 8.0, &tight).unwrap();
        assert!(!r.converged);
        assert!(r.value.is_finite());
        assert!(r.require_converged().is_err());
    }

    #[test]
    fn derivative_at_origin_is_parameter_ratio() {
        let spec = PfqSpec::f11(0.5, 1.5).unwrap();
        let r = pfq_derivative(&spec, 0.0, 1, &opts()).unwrap();
        assert_relative_eq!(r.value, 0.5 / 1.5, max_relative = 1e-15);
    }

    #[test]
    fn derivative_of_exp_is_exp() {
        let spec = PfqSpec::f11(0.5, 0.5).unwrap();
        let r = pfq_derivative(&spec, 1.0, 1, &opts()).unwrap();
        assert_relative_eq!(r.value, std::f64::consts::E, max_relative = 1e-14);
    }

    #[test]
    fn second_derivative_of_gauss_log_case() {
        // (1)_2 (1)_2 / (2)_2 = 4/6 at the origin.
        let spec = PfqSpec::f21(1.0, 1.0, 2.0).unwrap();
        let r = pfq_derivative(&spec, 0.0, 2, &opts()).unwrap();
        assert_relative_eq!(r.value, 2.0 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn derivative_of_negative_noninteger_denominator_is_fine() {
        // Valid denominators stay valid under the +1 shift.
        let spec = PfqSpec::f11(0.3, -0.5).unwrap();
        assert!(pfq_derivative(&spec, 0.1, 2, &opts()).is_ok());
    }

    #[test]
    fn kummer_reroute_matches_direct_formula() {
        // For x below the switch the evaluator must agree with the
        // explicitly transformed series.
        let a = 0.5;
        let c = 1.5;
        let x = -15.0;
        let spec = PfqSpec::f11(a, c).unwrap();
        let direct = eval_pfq(&spec, x, &opts()).unwrap().value;
        let flipped = PfqSpec::f11(c - a, c).unwrap();
        let via_transform = x.exp() * eval_pfq(&flipped, -x, &opts()).unwrap().value;
        assert_relative_eq!(direct, via_transform, max_relative = 1e-13);
    }

    #[test]
    fn exponential_series_is_entire() {
        let spec = PfqSpec::f00();
        let r = eval_pfq(&spec, 3.0, &opts()).unwrap();
        assert_relative_eq!(r.value, 3.0f64.exp(), max_relative = 1e-14);
    }
}

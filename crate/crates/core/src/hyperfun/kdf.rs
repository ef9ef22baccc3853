//! Kampé de Fériet double hypergeometric series.

use super::options::SeriesAccumulator;
use super::{is_nonpositive_integer, EvalOptions, EvalResult};
use crate::error::{Error, Result};

/// Parameter groups of the double series
///
/// ```text
/// F^{p;q;k}_{l;m;n} [ (a_p); (b_q); (c_k); (α_l); (β_m); (γ_n); x, y ]
///   = Σ_{r,s} ∏(a)_{r+s} ∏(b)_r ∏(c)_s / (∏(α)_{r+s} ∏(β)_r ∏(γ)_s r! s!) xʳ yˢ
/// ```
///
/// The list lengths define the signature. No lower parameter may be zero
/// or a negative integer.
#[derive(Debug, Clone, PartialEq)]
pub struct KdfSpec {
    pub upper_joint: Vec<f64>,
    pub upper_x: Vec<f64>,
    pub upper_y: Vec<f64>,
    pub lower_joint: Vec<f64>,
    pub lower_x: Vec<f64>,
    pub lower_y: Vec<f64>,
}

impl KdfSpec {
    pub fn new(
        upper_joint: Vec<f64>,
        upper_x: Vec<f64>,
        upper_y: Vec<f64>,
        lower_joint: Vec<f64>,
        lower_x: Vec<f64>,
        lower_y: Vec<f64>,
    ) -> Result<Self> {
        for group in [&lower_joint, &lower_x, &lower_y] {
            for &p in group.iter() {
                if is_nonpositive_integer(p) {
                    return Err(Error::domain(format!(
                        "lower parameter {p} is zero or a negative integer"
                    )));
                }
            }
        }
        for group in [
            &upper_joint,
            &upper_x,
            &upper_y,
            &lower_joint,
            &lower_x,
            &lower_y,
        ] {
            if group.iter().any(|p| !p.is_finite()) {
                return Err(Error::domain("parameter is not finite"));
            }
        }
        Ok(KdfSpec {
            upper_joint,
            upper_x,
            upper_y,
            lower_joint,
            lower_x,
            lower_y,
        })
    }

    /// Signature counts (p; q; k) over (l; m; n).
    pub fn signature(&self) -> (usize, usize, usize, usize, usize, usize) {
        (
            self.upper_joint.len(),
            self.upper_x.len(),
            self.upper_y.len(),
            self.lower_joint.len(),
            self.lower_x.len(),
            self.lower_y.len(),
        )
    }

    /// Per-variable convergence slack: lower-count + 1 (for the factorial)
    /// minus upper-count, counting joint groups on both sides. Positive
    /// means entire in that variable, zero means unit radius, negative
    /// means empty radius.
    fn slack(&self) -> (i64, i64) {
        let (p, q, k, l, m, n) = self.signature();
        let sx = (l + m) as i64 + 1 - (p + q) as i64;
        let sy = (l + n) as i64 + 1 - (p + k) as i64;
        (sx, sy)
    }

    fn check_domain(&self, x: f64, y: f64) -> Result<()> {
        let (sx, sy) = self.slack();
        let (p, _, _, l, _, _) = self.signature();
        for (slack, v, name) in [(sx, x, "x"), (sy, y, "y")] {
            if slack < 0 && v != 0.0 {
                return Err(Error::domain(format!(
                    "series diverges for every nonzero {name} with this signature"
                )));
            }
            if slack == 0 && v.abs() >= 1.0 {
                return Err(Error::domain(format!(
                    "|{name}| must be below 1 for this signature"
                )));
            }
        }
        // Joint upper excess couples the variables at the unit-radius
        // boundary (Appell F2-like region |x| + |y| < 1).
        if p > l && sx == 0 && sy == 0 && x.abs() + y.abs() >= 1.0 {
            return Err(Error::domain(
                "|x| + |y| must be below 1 for this signature",
            ));
        }
        Ok(())
    }
}

fn prod_at(params: &[f64], offset: f64) -> f64 {
    params.iter().map(|p| p + offset).product()
}

/// Sums the double series over diagonal shells r+s = const, with the stop
/// criterion applied to shell sums.
pub fn eval_kdf(spec: &KdfSpec, x: f64, y: f64, opts: &EvalOptions) -> Result<EvalResult> {
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::domain("series argument is not finite"));
    }
    spec.check_domain(x, y)?;
    let mut acc = SeriesAccumulator::new(opts);
    // shell[r] = term at (r, k - r) for the current shell k
    let mut shell = vec![1.0_f64];
    for k in 1..=acc.budget() {
        if acc.push(shell.iter().sum()) {
            break;
        }
        let kf = k as f64;
        let joint = prod_at(&spec.upper_joint, kf - 1.0) / prod_at(&spec.lower_joint, kf - 1.0);
        let mut next = vec![0.0; k + 1];
        for (r, &prev) in shell.iter().enumerate() {
            // step (r, k-1-r) -> (r, k-r)
            let s = (k - r) as f64;
            next[r] = prev * joint * y * prod_at(&spec.upper_y, s - 1.0)
                / (prod_at(&spec.lower_y, s - 1.0) * s);
        }
        // step (k-1, 0) -> (k, 0)
        next[k] = shell[k - 1] * joint * x * prod_at(&spec.upper_x, kf - 1.0)
            / (prod_at(&spec.lower_x, kf - 1.0) * kf);
        shell = next;
    }
    Ok(acc.finish())
}

/// Mixed partial via parameter shifts: ∂/∂x multiplies by the ratio of all
/// joint-upper and x-upper parameters over all joint-lower and x-lower
/// parameters and increments those four groups; ∂/∂y acts on the joint and
/// y groups the same way.
pub fn kdf_partial(
    spec: &KdfSpec,
    x: f64,
    y: f64,
    dx_order: u32,
    dy_order: u32,
    opts: &EvalOptions,
) -> Result<EvalResult> {
    let mut s = spec.clone();
    let mut factor = 1.0;
    for _ in 0..dx_order {
        factor *= prod_at(&s.upper_joint, 0.0) * prod_at(&s.upper_x, 0.0)
            / (prod_at(&s.lower_joint, 0.0) * prod_at(&s.lower_x, 0.0));
        for group in [&mut s.upper_joint, &mut s.upper_x, &mut s.lower_joint, &mut s.lower_x] {
            group.iter_mut().for_each(|p| *p += 1.0);
        }
    }
    for _ in 0..dy_order {
        factor *= prod_at(&s.upper_joint, 0.0) * prod_at(&s.upper_y, 0.0)
            / (prod_at(&s.lower_joint, 0.0) * prod_at(&s.lower_y, 0.0));
        for group in [&mut s.upper_joint, &mut s.upper_y, &mut s.lower_joint, &mut s.lower_y] {
            group.iter_mut().for_each(|p| *p += 1.0);
        }
    }
    let shifted = KdfSpec::new(
        s.upper_joint,
        s.upper_x,
        s.upper_y,
        s.lower_joint,
        s.lower_x,
        s.lower_y,
    )?;
    Ok(eval_kdf(&shifted, x, y, opts)?.scaled(factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfun::{eval_pfq, eval_psi2, PfqSpec, Psi2Spec};
    use approx::assert_relative_eq;

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    /// The paper-style signature F^{1;0;0}_{0;2;2}[a; −; −; c1,c2; d1,d2].
    fn f10022(a: f64, c1: f64, c2: f64, d1: f64, d2: f64) -> KdfSpec {
        KdfSpec::new(vec![a], vec![], vec![], vec![], vec![c1, c2], vec![d1, d2]).unwrap()
    }

    #[test]
    fn origin_is_one() {
        let spec = f10022(1.0, 0.9, 0.7, 1.1, 1.3);
        let r = eval_kdf(&spec, 0.0, 0.0, &opts()).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.converged);
        assert!(r.terms_used <= opts().consecutive_small + 1);
    }

    #[test]
    fn y_zero_slice_is_1f2() {
        let spec = f10022(1.0, 0.9, 0.7, 1.1, 1.3);
        let slice = eval_kdf(&spec, -0.5, 0.0, &opts()).unwrap().value;
        let f12 = PfqSpec::f12(1.0, [0.9, 0.7]).unwrap();
        let direct = eval_pfq(&f12, -0.5, &opts()).unwrap().value;
        assert_relative_eq!(slice, direct, max_relative = 1e-13);
        // frozen 40-digit reference for the same slice
        assert_relative_eq!(slice, 0.321_626_167_588_112_63, max_relative = 1e-13);
    }

    #[test]
    fn single_lower_pair_signature_is_psi2() {
        let spec =
            KdfSpec::new(vec![0.5], vec![], vec![], vec![], vec![0.75], vec![1.25]).unwrap();
        let kdf = eval_kdf(&spec, -0.4, -0.9, &opts()).unwrap().value;
        let psi2 = eval_psi2(&Psi2Spec::new(0.5, 0.75, 1.25).unwrap(), -0.4, -0.9, &opts())
            .unwrap()
            .value;
        assert_relative_eq!(kdf, psi2, max_relative = 1e-13);
    }

    #[test]
    fn first_partials_at_origin() {
        let spec = f10022(1.2, 0.9, 0.7, 1.1, 1.3);
        let px = kdf_partial(&spec, 0.0, 0.0, 1, 0, &opts()).unwrap().value;
        let py = kdf_partial(&spec, 0.0, 0.0, 0, 1, &opts()).unwrap().value;
        assert_relative_eq!(px, 1.2 / (0.9 * 0.7), max_relative = 1e-15);
        assert_relative_eq!(py, 1.2 / (1.1 * 1.3), max_relative = 1e-15);
    }

    #[test]
    fn rejects_divergent_signature_at_nonzero_argument() {
        // Two joint uppers with no lower parameters at all: empty radius
        // in both variables.
        let spec = KdfSpec::new(vec![0.5, 0.7], vec![], vec![], vec![], vec![], vec![]).unwrap();
        assert!(eval_kdf(&spec, 0.3, 0.0, &opts()).is_err());
        assert!(eval_kdf(&spec, 0.0, 0.0, &opts()).is_ok());
    }

    #[test]
    fn unit_radius_signature_enforced() {
        // One joint upper, one x-lower: Gauss-like in x (slack 0).
        let spec = KdfSpec::new(vec![0.5], vec![0.3], vec![], vec![], vec![0.9], vec![1.1])
            .unwrap();
        assert!(eval_kdf(&spec, 1.1, 0.0, &opts()).is_err());
        assert!(eval_kdf(&spec, 0.5, 0.0, &opts()).is_ok());
    }

    #[test]
    fn rejects_bad_lower_parameter() {
        assert!(KdfSpec::new(vec![1.0], vec![], vec![], vec![-3.0], vec![0.9], vec![1.1]).is_err());
    }
}

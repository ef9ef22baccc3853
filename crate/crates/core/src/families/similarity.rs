//! Similarity substitutions u = P·ω and derived exponents.

use super::point::{Axis, Point};
use super::{FamilyId, FamilyParams};
use crate::error::{Error, Result};

/// Similarity variables of a frame: σ for single-variable families,
/// (ξ, η) for two-variable families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SimilarityVars {
    One(f64),
    Two(f64, f64),
}

/// Prefactor P and similarity variables at one spacetime point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityFrame {
    pub prefactor: f64,
    pub vars: SimilarityVars,
}

/// Exponents (α, β) entering the branch parameters. For T4/T5/F6 they are
/// derived from the degeneracy exponents; for P2/P3 (and P0) the
/// user-specified values pass through unchanged.
pub fn derived_exponents(family: FamilyId, params: &FamilyParams) -> Result<(f64, f64)> {
    let positive = |v: f64, name: &str| -> Result<f64> {
        if v > 0.0 && v.is_finite() {
            Ok(v)
        } else {
            Err(Error::domain(format!(
                "{name} must be positive for family {family}, got {v}"
            )))
        }
    };
    match family {
        FamilyId::P0 | FamilyId::P2 | FamilyId::P3 => Ok((params.alpha, params.beta)),
        FamilyId::T4 => {
            let m = positive(params.m, "m")?;
            Ok((params.alpha, m / (m + 3.0)))
        }
        FamilyId::T5 => {
            let n = positive(params.n, "n")?;
            let m = positive(params.m, "m")?;
            Ok((n / (n + 3.0), m / (m + 3.0)))
        }
        FamilyId::F6 => {
            let n = positive(params.n, "n")?;
            Ok((n / (n + 4.0), params.beta))
        }
    }
}

fn check_point(family: FamilyId, p: &Point) -> Result<()> {
    for &axis in family.axes() {
        let v = p.require(axis)?;
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::domain(format!(
                "coordinate {} = {v} outside the open domain of family {family}",
                axis.label()
            )));
        }
    }
    Ok(())
}

/// Prefactor and similarity variables of the family at `p`.
///
/// The degeneracy exponents m, n, k only need to keep the frame formulas
/// well defined here (≥ 0 is accepted); branch evaluation is where the
/// strict positivity of the derived exponents is enforced.
pub fn similarity_map(family: FamilyId, params: &FamilyParams, p: &Point) -> Result<SimilarityFrame> {
    check_point(family, p)?;
    let nonneg = |v: f64, name: &str| -> Result<f64> {
        if v >= 0.0 && v.is_finite() {
            Ok(v)
        } else {
            Err(Error::domain(format!(
                "{name} must be nonnegative for family {family}, got {v}"
            )))
        }
    };
    match family {
        FamilyId::P0 => {
            let t = p.require(Axis::T)?;
            let nu = params.nu;
            if !(nu > 0.0) {
                return Err(Error::domain("nu must be positive for family p0"));
            }
            Ok(SimilarityFrame {
                prefactor: params.e_amp / (nu * t),
                vars: SimilarityVars::One(p.x * p.x / (nu * t)),
            })
        }
        FamilyId::P2 => {
            let t = p.require(Axis::T)?;
            Ok(SimilarityFrame {
                prefactor: t.powf(-0.5),
                vars: SimilarityVars::One(-p.x * p.x / (4.0 * t)),
            })
        }
        FamilyId::P3 => {
            let y = p.require(Axis::Y)?;
            let t = p.require(Axis::T)?;
            Ok(SimilarityFrame {
                prefactor: t.powf(-0.5),
                vars: SimilarityVars::Two(-p.x * p.x / (8.0 * t), -y * y / (8.0 * t)),
            })
        }
        FamilyId::T4 => {
            let y = p.require(Axis::Y)?;
            let m = nonneg(params.m, "m")?;
            // (−3 y^{(m+3)/3} / (x (m+3)))³
            let sigma = -27.0 * y.powf(m + 3.0) / ((m + 3.0).powi(3) * p.x.powi(3));
            Ok(SimilarityFrame {
                prefactor: p.x.powi(-3),
                vars: SimilarityVars::One(sigma),
            })
        }
        FamilyId::T5 => {
            let y = p.require(Axis::Y)?;
            let t = p.require(Axis::T)?;
            let n = nonneg(params.n, "n")?;
            let m = nonneg(params.m, "m")?;
            let k = nonneg(params.k, "k")?;
            let tk1 = t.powf(k + 1.0);
            let xi = -(k + 1.0) * p.x.powf(n + 3.0) / (2.0 * (n + 3.0).powi(3) * tk1);
            let eta = -(k + 1.0) * y.powf(m + 3.0) / (2.0 * (m + 3.0).powi(3) * tk1);
            Ok(SimilarityFrame {
                prefactor: (k + 1.0) / (2.0 * tk1),
                vars: SimilarityVars::Two(xi, eta),
            })
        }
        FamilyId::F6 => {
            let t = p.require(Axis::T)?;
            let n = nonneg(params.n, "n")?;
            let k = nonneg(params.k, "k")?;
            let tk1 = t.powf(k + 1.0);
            let sigma = -(k + 1.0) * p.x.powf(n + 4.0) / ((n + 4.0).powi(4) * tk1);
            Ok(SimilarityFrame {
                prefactor: (k + 1.0) / tk1,
                vars: SimilarityVars::One(sigma),
            })
        }
    }
}

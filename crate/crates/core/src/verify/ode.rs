//! Residuals of the reduced ODEs / ODE systems in the similarity variable.
//!
//! These are exact identities for the branch ω's, so the residuals are
//! pure floating-point and series-truncation noise. Derivatives come from
//! the analytic parameter-shift rules, not finite differences.

use super::{PointResidual, ResidualReport};
use crate::error::{Error, Result};
use crate::families::{
    branch_form, derived_exponents, omega_partial, FamilyId, FamilyParams, OmegaForm,
    SimilarityVars, SolutionBranch,
};
use crate::hyperfun::EvalOptions;

/// Default similarity-variable sample points, inside every series radius.
pub fn default_sigma_points(family: FamilyId) -> Vec<SimilarityVars> {
    use SimilarityVars::{One, Two};
    match family {
        FamilyId::P0 => vec![],
        FamilyId::P2 => vec![One(-0.1), One(-1.0), One(-5.0)],
        FamilyId::P3 => vec![
            Two(-0.3, -0.7),
            Two(-1.0, -0.5),
            Two(-2.0, -1.5),
        ],
        FamilyId::T4 => vec![One(-0.1), One(-0.5), One(-0.9)],
        FamilyId::T5 => vec![
            Two(-0.3, -0.7),
            Two(-0.5, -0.2),
            Two(-1.2, -0.8),
        ],
        FamilyId::F6 => vec![One(-0.2), One(-1.0), One(-3.0)],
    }
}

/// Terms of one reduced equation; their sum is the residual and their
/// largest magnitude the normalization scale.
fn equation_terms(
    family: FamilyId,
    form: &OmegaForm,
    vars: &SimilarityVars,
    alpha: f64,
    beta: f64,
    opts: &EvalOptions,
) -> Result<Vec<Vec<f64>>> {
    let w = |dx: u32, dy: u32| omega_partial(form, vars, dx, dy, opts);
    match family {
        FamilyId::P0 => Err(Error::domain(
            "family p0 has no reduced hypergeometric equation",
        )),
        FamilyId::P2 => {
            let s = match vars {
                SimilarityVars::One(s) => *s,
                _ => return Err(Error::domain("family p2 takes one similarity variable")),
            };
            let c = (1.0 + 2.0 * alpha) / 2.0;
            Ok(vec![vec![
                s * w(2, 0)?,
                (c - s) * w(1, 0)?,
                -0.5 * w(0, 0)?,
            ]])
        }
        FamilyId::P3 => {
            let (xi, eta) = match vars {
                SimilarityVars::Two(xi, eta) => (*xi, *eta),
                _ => return Err(Error::domain("family p3 takes two similarity variables")),
            };
            let c1 = (1.0 + 2.0 * alpha) / 2.0;
            let c2 = (1.0 + 2.0 * beta) / 2.0;
            let (wx, wy, wxx, wyy, w0) = (w(1, 0)?, w(0, 1)?, w(2, 0)?, w(0, 2)?, w(0, 0)?);
            Ok(vec![
                vec![xi * wxx, (c1 - xi) * wx, -eta * wy, -0.5 * w0],
                vec![eta * wyy, (c2 - eta) * wy, -xi * wx, -0.5 * w0],
            ])
        }
        FamilyId::T4 => {
            let s = match vars {
                SimilarityVars::One(s) => *s,
                _ => return Err(Error::domain("family t4 takes one similarity variable")),
            };
            let (a1, a2, a3) = (1.0, 4.0 / 3.0, 5.0 / 3.0);
            let c1 = (2.0 + beta) / 3.0;
            let c2 = (1.0 + 2.0 * beta) / 3.0;
            let sum_a = a1 + a2 + a3;
            let sum_aa = a1 * a2 + a1 * a3 + a2 * a3;
            Ok(vec![vec![
                s * s * (1.0 - s) * w(3, 0)?,
                (c1 + c2 + 1.0 - (3.0 + sum_a) * s) * s * w(2, 0)?,
                (c1 * c2 - (1.0 + sum_a + sum_aa) * s) * w(1, 0)?,
                -a1 * a2 * a3 * w(0, 0)?,
            ]])
        }
        FamilyId::T5 => {
            let (xi, eta) = match vars {
                SimilarityVars::Two(xi, eta) => (*xi, *eta),
                _ => return Err(Error::domain("family t5 takes two similarity variables")),
            };
            let c1 = (2.0 + alpha) / 3.0;
            let c2 = (1.0 + 2.0 * alpha) / 3.0;
            let d1 = (2.0 + beta) / 3.0;
            let d2 = (1.0 + 2.0 * beta) / 3.0;
            let (wx, wy, w0) = (w(1, 0)?, w(0, 1)?, w(0, 0)?);
            Ok(vec![
                vec![
                    xi * xi * w(3, 0)?,
                    (c1 + c2 + 1.0) * xi * w(2, 0)?,
                    (c1 * c2 - xi) * wx,
                    -eta * wy,
                    -w0,
                ],
                vec![
                    eta * eta * w(0, 3)?,
                    (d1 + d2 + 1.0) * eta * w(0, 2)?,
                    (d1 * d2 - eta) * wy,
                    -xi * wx,
                    -w0,
                ],
            ])
        }
        FamilyId::F6 => {
            let s = match vars {
                SimilarityVars::One(s) => *s,
                _ => return Err(Error::domain("family f6 takes one similarity variable")),
            };
            let c1 = (3.0 + alpha) / 4.0;
            let c2 = (2.0 + 2.0 * alpha) / 4.0;
            let c3 = (1.0 + 3.0 * alpha) / 4.0;
            let sum_c = c1 + c2 + c3;
            let sum_cc = c1 * c2 + c1 * c3 + c2 * c3;
            Ok(vec![vec![
                s.powi(3) * w(4, 0)?,
                (3.0 + sum_c) * s * s * w(3, 0)?,
                (1.0 + sum_c + sum_cc) * s * w(2, 0)?,
                (c1 * c2 * c3 - s) * w(1, 0)?,
                -w(0, 0)?,
            ]])
        }
    }
}

/// Plugs the branch ω and its analytic derivatives into the family's
/// reduced equation (or system) at each similarity point.
///
/// The per-point residual is the worst equation's |sum of terms|, and the
/// relative residual divides by that equation's largest term magnitude.
pub fn ode_residual(
    branch: &SolutionBranch,
    params: &FamilyParams,
    sigma_points: &[SimilarityVars],
    opts: &EvalOptions,
) -> Result<ResidualReport> {
    let family = branch.family;
    let (alpha, beta) = derived_exponents(family, params)?;
    let form = branch_form(family, branch.index, params)?;
    let mut points = Vec::with_capacity(sigma_points.len());
    for vars in sigma_points {
        let coords = match vars {
            SimilarityVars::One(s) => vec![*s],
            SimilarityVars::Two(xi, eta) => vec![*xi, *eta],
        };
        let equations = equation_terms(family, &form, vars, alpha, beta, opts)?;
        let mut worst_abs = 0.0f64;
        let mut worst_rel = 0.0f64;
        for terms in &equations {
            let residual: f64 = terms.iter().sum();
            let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
            let rel = if scale > 0.0 {
                residual.abs() / scale
            } else {
                residual.abs()
            };
            worst_abs = worst_abs.max(residual.abs());
            worst_rel = worst_rel.max(rel);
        }
        points.push(PointResidual {
            coords,
            residual: worst_abs,
            rel_residual: worst_rel,
            refined: vec![],
            note: None,
        });
    }
    let max_abs = points.iter().fold(0.0f64, |m, p| m.max(p.residual.abs()));
    let max_rel = points.iter().fold(0.0f64, |m, p| m.max(p.rel_residual));
    Ok(ResidualReport {
        family,
        branch_index: branch.index,
        params: *params,
        grid: format!("{} similarity points", points.len()),
        h: 0.0,
        max_abs_residual: max_abs,
        max_rel_residual: max_rel,
        observed_order: None,
        points,
    })
}

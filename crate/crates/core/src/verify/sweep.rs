//! Grid sweeps of the finite-difference residual with refinement.

use super::grid::describe_grid;
use super::operator::operator_terms;
use super::{point_coords, FdScheme, PointResidual, ResidualReport};
use crate::error::Result;
use crate::families::{branch_field, FamilyParams, Point, SolutionBranch};
use crate::hyperfun::EvalOptions;

/// Sweeps the finite-difference residual of the branch field across the
/// grid at steps h, h/2 and h/4.
///
/// Every point records the residual triple and the residual normalized by
/// the largest single operator term; a point where the evaluator fails is
/// recorded with a note instead of aborting the sweep. The observed order
/// is log₂ of the aggregate max-residual ratio under h → h/2.
pub fn pde_residual_sweep(
    branch: &SolutionBranch,
    params: &FamilyParams,
    grid: &[Point],
    scheme: &FdScheme,
    opts: &EvalOptions,
) -> ResidualReport {
    let field = branch_field(branch, params, opts);
    sweep_field(branch, params, &field, grid, scheme)
}

/// Same sweep for an arbitrary field (used by the prefactor adjudication).
pub(crate) fn sweep_field<F>(
    branch: &SolutionBranch,
    params: &FamilyParams,
    field: &F,
    grid: &[Point],
    scheme: &FdScheme,
) -> ResidualReport
where
    F: Fn(&Point) -> Result<f64>,
{
    let family = branch.family;
    let mut points = Vec::with_capacity(grid.len());
    for p in grid {
        let coords = point_coords(family, p);
        let base = operator_terms(family, params, field, p, scheme);
        match base {
            Err(e) => points.push(PointResidual {
                coords,
                residual: f64::NAN,
                rel_residual: f64::NAN,
                refined: vec![],
                note: Some(e.to_string()),
            }),
            Ok(terms) => {
                let residual: f64 = terms.iter().sum();
                let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
                let rel = if scale > 0.0 {
                    residual.abs() / scale
                } else {
                    residual.abs()
                };
                let mut refined = Vec::with_capacity(2);
                let mut note = None;
                for factor in [2.0, 4.0] {
                    match operator_terms(family, params, field, p, &scheme.refined(factor)) {
                        Ok(t) => refined.push(t.iter().sum()),
                        Err(e) => {
                            note = Some(e.to_string());
                            break;
                        }
                    }
                }
                points.push(PointResidual {
                    coords,
                    residual,
                    rel_residual: rel,
                    refined,
                    note,
                });
            }
        }
    }

    let clean = points.iter().filter(|p| p.note.is_none());
    let max_abs = clean
        .clone()
        .fold(0.0f64, |m, p| m.max(p.residual.abs()));
    let max_rel = clean.clone().fold(0.0f64, |m, p| m.max(p.rel_residual));
    let max_half = clean
        .clone()
        .filter_map(|p| p.refined.first())
        .fold(0.0f64, |m, r| m.max(r.abs()));
    let observed_order = if max_abs > 0.0 && max_half > 0.0 {
        Some((max_abs / max_half).log2())
    } else {
        None
    };

    ResidualReport {
        family,
        branch_index: branch.index,
        params: *params,
        grid: describe_grid(family, grid.len(), scheme.h),
        h: scheme.h,
        max_abs_residual: max_abs,
        max_rel_residual: max_rel,
        observed_order,
        points,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyId;
    use crate::verify::{default_grid, RESIDUAL_NOISE_FLOOR};

    #[test]
    fn constant_field_sweep_is_identically_zero() {
        let branch = SolutionBranch::new(FamilyId::P2, 1).unwrap();
        let params = FamilyParams::default();
        let scheme = FdScheme::default_for(FamilyId::P2);
        let grid = default_grid(FamilyId::P2, &params, &scheme);
        let constant = |_: &Point| Ok(1.0);
        let report = sweep_field(&branch, &params, &constant, &grid, &scheme);
        assert_eq!(report.max_abs_residual, 0.0);
    }

    #[test]
    fn p2_branch_sweep_refines_at_second_order() {
        let branch = SolutionBranch::new(FamilyId::P2, 1).unwrap();
        let params = FamilyParams::default();
        let scheme = FdScheme::default_for(FamilyId::P2);
        let grid = default_grid(FamilyId::P2, &params, &scheme);
        let opts = EvalOptions::default();
        let report = pde_residual_sweep(&branch, &params, &grid, &scheme, &opts);
        assert!(report.max_rel_residual <= 1e-4, "{}", report.max_rel_residual);
        assert!(report.refines_at(3.0));
        let order = report.observed_order.unwrap();
        assert!((1.5..=2.5).contains(&order), "order {order}");
        assert!(report
            .points
            .iter()
            .all(|p| p.note.is_none() && p.residual.abs() > RESIDUAL_NOISE_FLOOR));
    }
}

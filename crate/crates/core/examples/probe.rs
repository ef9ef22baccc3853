//! Scratch diagnostics for sweep calibration (not part of the toolkit).

use selfsim_core::families::{FamilyId, FamilyParams, SolutionBranch};
use selfsim_core::hyperfun::EvalOptions;
use selfsim_core::verify::{default_grid, pde_residual_sweep, FdScheme};

fn main() {
    let opts = EvalOptions::default();

    for (family, params) in [
        (FamilyId::P0, FamilyParams::default()),
        (
            FamilyId::P2,
            FamilyParams {
                alpha: 0.0,
                ..FamilyParams::default()
            },
        ),
    ] {
        let branch = SolutionBranch::new(family, 1).unwrap();
        let scheme = FdScheme::new(family.operator_order(), 1e-3).unwrap();
        let grid = default_grid(family, &params, &scheme);
        let report = pde_residual_sweep(&branch, &params, &grid, &scheme, &opts);
        println!(
            "{family}: max_abs {:.4e}  max_rel {:.4e}  order {:?}",
            report.max_abs_residual, report.max_rel_residual, report.observed_order
        );
    }

    // P3 ratio diagnostics
    for family in [FamilyId::P3, FamilyId::T4, FamilyId::T5, FamilyId::F6, FamilyId::P2] {
        let params = FamilyParams::default();
        let scheme = FdScheme::default_for(family);
        let grid = default_grid(family, &params, &scheme);
        for index in 1..=family.branch_count() {
            let branch = SolutionBranch::new(family, index).unwrap();
            let report = pde_residual_sweep(&branch, &params, &grid, &scheme, &opts);
            let mut bad = 0;
            let mut worst: Option<(f64, Vec<f64>, f64, f64)> = None;
            for p in &report.points {
                if p.note.is_some() || p.residual.abs() <= 1e-12 {
                    continue;
                }
                let ratio = p.ratio().unwrap_or(f64::INFINITY);
                if ratio < 3.0 {
                    bad += 1;
                    if worst.as_ref().map(|w| ratio < w.0).unwrap_or(true) {
                        worst = Some((ratio, p.coords.clone(), p.residual, p.refined[0]));
                    }
                }
            }
            println!(
                "{family} b{index}: max_abs {:.3e} max_rel {:.3e} bad_points {bad} worst {:?}",
                report.max_abs_residual, report.max_rel_residual, worst
            );
        }
    }
}

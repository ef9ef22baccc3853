//! Default verification grids.

use super::FdScheme;
use crate::families::{similarity_map, FamilyId, FamilyParams, Point, SimilarityVars};

const GRID_MIN: f64 = 0.5;
const GRID_MAX: f64 = 2.0;
const GRID_COUNT: usize = 5;

/// |σ| ceiling for T4 grid points, leaving refinement headroom inside the
/// unit radius of the Gauss series.
const T4_SIGMA_CAP: f64 = 0.9;

pub(crate) fn log_spaced(min: f64, max: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![min];
    }
    let (lo, hi) = (min.ln(), max.ln());
    (0..count)
        .map(|i| (lo + (hi - lo) * i as f64 / (count - 1) as f64).exp())
        .collect()
}

/// Log-spaced default grid in [0.5, 2.0] per axis, 5 points per axis.
///
/// For T4 the grid is filtered so that |σ| stays below 0.9 at the worst
/// stencil corner (smallest x, largest y), keeping every evaluation of the
/// sweep inside the series radius. Points closer than 5h to a degeneracy
/// line would also be dropped, though the default box starts well clear of
/// them.
pub fn default_grid(family: FamilyId, params: &FamilyParams, scheme: &FdScheme) -> Vec<Point> {
    let ticks = log_spaced(GRID_MIN, GRID_MAX, GRID_COUNT);
    let margin = 5.0 * scheme.h;
    let keep = |coords: &[f64]| coords.iter().all(|&c| c > margin);
    let mut points = Vec::new();
    match family {
        FamilyId::P0 | FamilyId::P2 | FamilyId::F6 => {
            for &x in &ticks {
                for &t in &ticks {
                    if keep(&[x, t]) {
                        points.push(Point::xt(x, t));
                    }
                }
            }
        }
        FamilyId::P3 | FamilyId::T5 => {
            for &x in &ticks {
                for &y in &ticks {
                    for &t in &ticks {
                        if keep(&[x, y, t]) {
                            points.push(Point::xyt(x, y, t));
                        }
                    }
                }
            }
        }
        FamilyId::T4 => {
            let reach = scheme.radius() as f64 * 2.0 * scheme.h;
            for &x in &ticks {
                for &y in &ticks {
                    if !keep(&[x, y]) {
                        continue;
                    }
                    // worst stencil corner for |σ|
                    let corner = Point::xy(x - reach, y + reach);
                    if let Ok(frame) = similarity_map(family, params, &corner) {
                        if let SimilarityVars::One(s) = frame.vars {
                            if s.abs() < T4_SIGMA_CAP {
                                points.push(Point::xy(x, y));
                            }
                        }
                    }
                }
            }
        }
    }
    points
}

/// Grid described for reports.
pub(crate) fn describe_grid(family: FamilyId, n_points: usize, h: f64) -> String {
    format!(
        "log-spaced [{GRID_MIN}, {GRID_MAX}] box, {} axes, {} points, h = {h:e}",
        family.axes().len(),
        n_points
    )
}

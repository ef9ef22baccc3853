//! Finite-difference application of the family operators.

use super::FdScheme;
use crate::error::{Error, Result};
use crate::families::{Axis, FamilyId, FamilyParams, Point};

/// Central-difference weights of formal order 2, offsets −radius..=radius.
fn central_weights(order: u32) -> (&'static [f64], i32) {
    match order {
        1 => (&[-0.5, 0.0, 0.5], 1),
        2 => (&[1.0, -2.0, 1.0], 1),
        3 => (&[-0.5, 1.0, 0.0, -1.0, 0.5], 2),
        4 => (&[1.0, -4.0, 6.0, -4.0, 1.0], 2),
        _ => unreachable!("derivative order limited to 1..=4"),
    }
}

/// Central-difference derivative of `field` along `axis` at `p`.
///
/// The whole stencil must stay inside the open domain (all coordinates
/// strictly positive).
fn derivative<F>(field: &F, p: &Point, axis: Axis, order: u32, h: f64) -> Result<f64>
where
    F: Fn(&Point) -> Result<f64>,
{
    let (weights, radius) = central_weights(order);
    let base = p
        .get(axis)
        .ok_or_else(|| Error::domain(format!("point is missing coordinate {}", axis.label())))?;
    if base - radius as f64 * h <= 0.0 {
        return Err(Error::domain(format!(
            "stencil of width {} exits the domain at {} = {base}",
            2 * radius + 1,
            axis.label()
        )));
    }
    let mut acc = 0.0;
    for (i, &w) in weights.iter().enumerate() {
        if w == 0.0 {
            continue;
        }
        let offset = (i as i32 - radius) as f64 * h;
        acc += w * field(&p.shifted(axis, offset)?)?;
    }
    Ok(acc / h.powi(order as i32))
}

/// The individual terms of L[field] at `p`, each derivative replaced by
/// its order-2 central difference. Their sum is the residual; their
/// largest magnitude is the normalization scale.
pub fn operator_terms<F>(
    family: FamilyId,
    params: &FamilyParams,
    field: &F,
    p: &Point,
    scheme: &FdScheme,
) -> Result<Vec<f64>>
where
    F: Fn(&Point) -> Result<f64>,
{
    let h = scheme.h;
    let d = |axis: Axis, order: u32| derivative(field, p, axis, order, h);
    match family {
        FamilyId::P0 => {
            // u_t = ν (u_xx + u_x / x), written as a residual
            let nu = params.nu;
            Ok(vec![
                d(Axis::T, 1)?,
                -nu * d(Axis::X, 2)?,
                -nu * d(Axis::X, 1)? / p.x,
            ])
        }
        FamilyId::P2 => Ok(vec![
            d(Axis::T, 1)?,
            -d(Axis::X, 2)?,
            -(2.0 * params.alpha / p.x) * d(Axis::X, 1)?,
        ]),
        FamilyId::P3 => {
            let y = p.require(Axis::Y)?;
            Ok(vec![
                d(Axis::T, 1)?,
                -d(Axis::X, 2)?,
                -d(Axis::Y, 2)?,
                -(2.0 * params.alpha / p.x) * d(Axis::X, 1)?,
                -(2.0 * params.beta / y) * d(Axis::Y, 1)?,
            ])
        }
        FamilyId::T4 => {
            let y = p.require(Axis::Y)?;
            Ok(vec![y.powf(params.m) * d(Axis::X, 3)?, -d(Axis::Y, 3)?])
        }
        FamilyId::T5 => {
            let y = p.require(Axis::Y)?;
            let t = p.require(Axis::T)?;
            let xn = p.x.powf(params.n);
            let ym = y.powf(params.m);
            let tk = t.powf(params.k);
            Ok(vec![
                xn * ym * d(Axis::T, 1)?,
                -tk * ym * d(Axis::X, 3)?,
                -tk * xn * d(Axis::Y, 3)?,
            ])
        }
        FamilyId::F6 => {
            let t = p.require(Axis::T)?;
            Ok(vec![
                p.x.powf(params.n) * d(Axis::T, 1)?,
                -t.powf(params.k) * d(Axis::X, 4)?,
            ])
        }
    }
}

/// L[field](p) with every derivative replaced by its order-2 central
/// difference.
pub fn apply_operator<F>(
    family: FamilyId,
    params: &FamilyParams,
    field: &F,
    p: &Point,
    scheme: &FdScheme,
) -> Result<f64>
where
    F: Fn(&Point) -> Result<f64>,
{
    Ok(operator_terms(family, params, field, p, scheme)?
        .iter()
        .sum())
}

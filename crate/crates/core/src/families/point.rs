//! Spacetime points.

use crate::error::{Error, Result};

/// Coordinate axes a family may use. P0 uses `X` for its radial variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    T,
}

impl Axis {
    pub fn label(&self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::T => "t",
        }
    }
}

/// A point in a family's domain Ω. Coordinates not used by the family are
/// `None`; all present coordinates must be strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: Option<f64>,
    pub t: Option<f64>,
}

impl Point {
    pub fn xt(x: f64, t: f64) -> Self {
        Point {
            x,
            y: None,
            t: Some(t),
        }
    }

    pub fn xy(x: f64, y: f64) -> Self {
        Point {
            x,
            y: Some(y),
            t: None,
        }
    }

    pub fn xyt(x: f64, y: f64, t: f64) -> Self {
        Point {
            x,
            y: Some(y),
            t: Some(t),
        }
    }

    pub fn get(&self, axis: Axis) -> Option<f64> {
        match axis {
            Axis::X => Some(self.x),
            Axis::Y => self.y,
            Axis::T => self.t,
        }
    }

    pub fn require(&self, axis: Axis) -> Result<f64> {
        self.get(axis)
            .ok_or_else(|| Error::domain(format!("point is missing coordinate {}", axis.label())))
    }

    /// Same point with one coordinate shifted; used by difference stencils.
    pub fn shifted(&self, axis: Axis, delta: f64) -> Result<Point> {
        let mut p = *self;
        match axis {
            Axis::X => p.x += delta,
            Axis::Y => {
                let y = self.require(Axis::Y)?;
                p.y = Some(y + delta);
            }
            Axis::T => {
                let t = self.require(Axis::T)?;
                p.t = Some(t + delta);
            }
        }
        Ok(p)
    }
}

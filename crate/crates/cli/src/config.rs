//! Run configuration: defaults, JSON config files, CLI overrides.
//!
//! Precedence: command-line flags override the `--config` file, which
//! overrides built-in defaults. `--dump-config` writes the merged
//! configuration; re-running from that file reproduces the outputs byte
//! for byte.

use selfsim_core::families::{FamilyId, FamilyParams, Point};
use selfsim_core::hyperfun::EvalOptions;
use selfsim_core::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    /// "log" or "linear"
    pub spacing: String,
}

impl GridAxis {
    /// Parses "min:max:count" with an optional ":log" / ":lin" suffix;
    /// log spacing is the default.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() < 3 || parts.len() > 4 {
            return Err(Error::domain(format!(
                "grid axis '{s}' must be min:max:count[:log|lin]"
            )));
        }
        let min: f64 = parts[0]
            .parse()
            .map_err(|_| Error::domain(format!("bad grid minimum '{}'", parts[0])))?;
        let max: f64 = parts[1]
            .parse()
            .map_err(|_| Error::domain(format!("bad grid maximum '{}'", parts[1])))?;
        let count: usize = parts[2]
            .parse()
            .map_err(|_| Error::domain(format!("bad grid count '{}'", parts[2])))?;
        let spacing = match parts.get(3).copied().unwrap_or("log") {
            "log" => "log",
            "lin" | "linear" => "linear",
            other => return Err(Error::domain(format!("unknown spacing '{other}'"))),
        };
        let axis = GridAxis {
            min,
            max,
            count,
            spacing: spacing.to_string(),
        };
        axis.validate()?;
        Ok(axis)
    }

    pub fn validate(&self) -> Result<()> {
        if self.count < 1 {
            return Err(Error::domain("grid count must be at least 1"));
        }
        if self.count > 1 && !(self.min < self.max) {
            return Err(Error::domain("grid needs min < max"));
        }
        if self.spacing == "log" && !(self.min > 0.0) {
            return Err(Error::domain("log spacing needs a positive minimum"));
        }
        if self.spacing != "log" && self.spacing != "linear" {
            return Err(Error::domain(format!("unknown spacing '{}'", self.spacing)));
        }
        Ok(())
    }

    pub fn ticks(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let n = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                let f = i as f64 / n;
                if self.spacing == "log" {
                    (self.min.ln() + (self.max.ln() - self.min.ln()) * f).exp()
                } else {
                    self.min + (self.max - self.min) * f
                }
            })
            .collect()
    }
}

fn default_axis() -> GridAxis {
    GridAxis {
        min: 0.5,
        max: 2.0,
        count: 5,
        spacing: "log".to_string(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EvalSection {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub consecutive_small: usize,
}

impl Default for EvalSection {
    fn default() -> Self {
        let o = EvalOptions::default();
        EvalSection {
            rel_tol: o.rel_tol,
            max_terms: o.max_terms,
            consecutive_small: o.consecutive_small,
        }
    }
}

/// The merged run configuration; everything a command needs.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunConfig {
    pub command: String,
    pub function: Option<String>,
    pub family: Option<String>,
    pub branch: Option<u32>,
    pub constant: f64,
    /// alpha, beta, m, n, k, nu, e_amp (missing keys take defaults)
    pub params: BTreeMap<String, f64>,
    /// scalar function arguments and point coordinates (a, b, c, a1…, x, y, t)
    pub args: BTreeMap<String, f64>,
    /// list-valued function arguments (num, den, upper_joint, …)
    pub list_args: BTreeMap<String, Vec<f64>>,
    pub grid: BTreeMap<String, GridAxis>,
    pub eval: EvalSection,
    pub quad_nodes: usize,
    pub fd_step: Option<f64>,
    pub derivative_order: u32,
    pub out: Option<String>,
    pub format: String,
}

impl RunConfig {
    pub fn new(command: &str) -> Self {
        RunConfig {
            command: command.to_string(),
            function: None,
            family: None,
            branch: None,
            constant: 1.0,
            params: BTreeMap::new(),
            args: BTreeMap::new(),
            list_args: BTreeMap::new(),
            grid: BTreeMap::new(),
            eval: EvalSection::default(),
            quad_nodes: 64,
            fd_step: None,
            derivative_order: 0,
            out: None,
            format: "csv".to_string(),
        }
    }

    pub fn eval_options(&self) -> Result<EvalOptions> {
        EvalOptions::new(
            self.eval.rel_tol,
            self.eval.max_terms,
            self.eval.consecutive_small,
        )
    }

    pub fn family_id(&self) -> Result<FamilyId> {
        let name = self
            .family
            .as_deref()
            .ok_or_else(|| Error::domain("missing --family"))?;
        FamilyId::parse(name)
    }

    pub fn family_params(&self) -> Result<FamilyParams> {
        let mut p = FamilyParams::default();
        for (key, &value) in &self.params {
            match key.as_str() {
                "alpha" => p.alpha = value,
                "beta" => p.beta = value,
                "m" => p.m = value,
                "n" => p.n = value,
                "k" => p.k = value,
                "nu" => p.nu = value,
                "e_amp" => p.e_amp = value,
                other => {
                    return Err(Error::domain(format!("unknown family parameter '{other}'")))
                }
            }
        }
        Ok(p)
    }

    pub fn arg(&self, name: &str) -> Result<f64> {
        self.args
            .get(name)
            .copied()
            .ok_or_else(|| Error::domain(format!("missing argument --{name}")))
    }

    pub fn list_arg(&self, name: &str) -> Result<&[f64]> {
        self.list_args
            .get(name)
            .map(|v| v.as_slice())
            .ok_or_else(|| Error::domain(format!("missing list argument --{name}")))
    }

    /// Point assembled from the `args` map for the family's axes.
    pub fn point(&self, family: FamilyId) -> Result<Point> {
        use selfsim_core::families::Axis;
        let mut x = None;
        let mut y = None;
        let mut t = None;
        for &axis in family.axes() {
            let v = self.arg(axis.label())?;
            match axis {
                Axis::X => x = Some(v),
                Axis::Y => y = Some(v),
                Axis::T => t = Some(v),
            }
        }
        Ok(Point {
            x: x.ok_or_else(|| Error::domain("missing --x"))?,
            y,
            t,
        })
    }

    /// Grid axes for the family, falling back to the default box.
    pub fn family_grid(&self, family: FamilyId) -> Result<Vec<Point>> {
        let mut axes = Vec::new();
        for axis in family.axes() {
            let spec = self
                .grid
                .get(axis.label())
                .cloned()
                .unwrap_or_else(default_axis);
            spec.validate()?;
            axes.push(spec.ticks());
        }
        let mut points = Vec::new();
        match axes.len() {
            2 => {
                for &a in &axes[0] {
                    for &b in &axes[1] {
                        points.push(two_axis_point(family, a, b));
                    }
                }
            }
            3 => {
                for &a in &axes[0] {
                    for &b in &axes[1] {
                        for &c in &axes[2] {
                            points.push(Point::xyt(a, b, c));
                        }
                    }
                }
            }
            _ => unreachable!("families have 2 or 3 axes"),
        }
        Ok(points)
    }
}

fn two_axis_point(family: FamilyId, a: f64, b: f64) -> Point {
    if family == FamilyId::T4 {
        Point::xy(a, b)
    } else {
        Point::xt(a, b)
    }
}

/// Loads a config file and overlays it onto `base` (file wins where set).
pub fn load_config(path: &str) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::domain(format!("cannot read config {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::domain(format!("bad config {path}: {e}")))
}

pub fn dump_config(config: &RunConfig, path: &str) -> Result<()> {
    let text = serde_json::to_string_pretty(config)
        .map_err(|e| Error::domain(format!("cannot serialize config: {e}")))?;
    std::fs::write(path, text + "\n")
        .map_err(|e| Error::domain(format!("cannot write config {path}: {e}")))
}

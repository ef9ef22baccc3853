//! The branch catalog: hypergeometric factor of every solution branch.

use super::similarity::derived_exponents;
use super::{FamilyId, FamilyParams};
use crate::error::{Error, Result};
use crate::hyperfun::{KdfSpec, PfqSpec, Psi2Spec};

/// The series family backing a branch's ω.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesKind {
    Pfq(PfqSpec),
    Psi2(Psi2Spec),
    Kdf(KdfSpec),
}

/// A branch's ω as an evaluable form:
///
/// ω(σ) = |σ|^{x_power} · S(arg_scale·σ), or for two-variable families
/// ω(ξ, η) = |ξ|^{x_power} |η|^{y_power} · S(ξ, η).
///
/// Fractional powers of the (negative) similarity variables are taken of
/// the absolute value; the constant phase this drops on each connected
/// component is absorbed by the branch's arbitrary multiplicative
/// constant, and the linear operators keep the field a solution.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaForm {
    pub x_power: f64,
    pub y_power: f64,
    pub arg_scale: f64,
    pub series: SeriesKind,
}

impl OmegaForm {
    fn plain(series: SeriesKind) -> Self {
        OmegaForm {
            x_power: 0.0,
            y_power: 0.0,
            arg_scale: 1.0,
            series,
        }
    }

    fn powered(x_power: f64, y_power: f64, series: SeriesKind) -> Self {
        OmegaForm {
            x_power,
            y_power,
            arg_scale: 1.0,
            series,
        }
    }
}

/// Catalog metadata for one branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchInfo {
    pub family: FamilyId,
    pub index: u32,
    /// Source label of the closed form in the solution catalog.
    pub equation_tag: &'static str,
    /// Which hypergeometric function carries the branch.
    pub series_name: &'static str,
}

/// Descriptors of every branch of the family.
pub fn list_branches(family: FamilyId) -> Vec<BranchInfo> {
    let rows: &[(&'static str, &'static str)] = match family {
        FamilyId::P0 => &[("Eq. 1.3", "0F0")],
        FamilyId::P2 => &[("Eq. 2.8", "1F1"), ("Eq. 2.9", "1F1")],
        FamilyId::P3 => &[
            ("Eq. 3.10", "Psi2"),
            ("Eq. 3.11", "Psi2"),
            ("Eq. 3.12", "Psi2"),
            ("Eq. 3.13", "Psi2"),
        ],
        FamilyId::T4 => &[("Eq. 4.12", "3F2"), ("Eq. 4.13", "2F1"), ("Eq. 4.14", "2F1")],
        FamilyId::T5 => &[
            ("Eq. 5.16", "KdF 1;0;0|0;2;2"),
            ("Eq. 5.17", "KdF 1;0;0|0;2;2"),
            ("Eq. 5.18", "KdF 1;0;0|0;2;2"),
            ("Eq. 5.19", "KdF 1;0;0|0;2;2"),
            ("Eq. 5.20", "KdF 1;0;0|0;2;2"),
            ("Eq. 5.21", "KdF 1;0;0|0;2;2"),
            ("Eq. 5.22", "KdF 1;0;0|0;2;2"),
            ("Eq. 5.23", "KdF 1;0;0|0;2;2"),
            ("Eq. 5.24", "KdF 1;0;0|0;2;2"),
        ],
        FamilyId::F6 => &[
            ("Eq. 6.11", "1F3"),
            ("Eq. 6.12", "1F3"),
            ("Eq. 6.13", "1F3"),
            ("Eq. 6.14", "1F3"),
        ],
    };
    rows.iter()
        .enumerate()
        .map(|(i, &(equation_tag, series_name))| BranchInfo {
            family,
            index: i as u32 + 1,
            equation_tag,
            series_name,
        })
        .collect()
}

/// ω of the given branch at the given family parameters.
///
/// Parameter combinations that drive a series denominator parameter to a
/// nonpositive integer are rejected rather than regularized.
pub fn branch_form(family: FamilyId, index: u32, params: &FamilyParams) -> Result<OmegaForm> {
    if index == 0 || index > family.branch_count() {
        return Err(Error::domain(format!(
            "family {family} has branches 1..={}, got {index}",
            family.branch_count()
        )));
    }
    let (alpha, beta) = derived_exponents(family, params)?;
    match family {
        FamilyId::P0 => Ok(OmegaForm {
            x_power: 0.0,
            y_power: 0.0,
            // ω(ξ) = e^{−ξ/4}
            arg_scale: -0.25,
            series: SeriesKind::Pfq(PfqSpec::f00()),
        }),
        FamilyId::P2 => {
            let a = 0.5;
            let c = (1.0 + 2.0 * alpha) / 2.0;
            match index {
                1 => Ok(OmegaForm::plain(SeriesKind::Pfq(PfqSpec::f11(a, c)?))),
                _ => Ok(OmegaForm::powered(
                    1.0 - c,
                    0.0,
                    SeriesKind::Pfq(PfqSpec::f11(a - c + 1.0, 2.0 - c)?),
                )),
            }
        }
        FamilyId::P3 => {
            let a = 0.5;
            let c1 = (1.0 + 2.0 * alpha) / 2.0;
            let c2 = (1.0 + 2.0 * beta) / 2.0;
            let (p, q, spec) = match index {
                1 => (0.0, 0.0, Psi2Spec::new(a, c1, c2)?),
                2 => (
                    1.0 - c1,
                    0.0,
                    Psi2Spec::new(a + 1.0 - c1, 2.0 - c1, c2)?,
                ),
                3 => (
                    0.0,
                    1.0 - c2,
                    Psi2Spec::new(a + 1.0 - c2, c1, 2.0 - c2)?,
                ),
                _ => (
                    1.0 - c1,
                    1.0 - c2,
                    Psi2Spec::new(a + 2.0 - c1 - c2, 2.0 - c1, 2.0 - c2)?,
                ),
            };
            Ok(OmegaForm::powered(p, q, SeriesKind::Psi2(spec)))
        }
        FamilyId::T4 => {
            let c1 = (2.0 + beta) / 3.0;
            let c2 = (1.0 + 2.0 * beta) / 3.0;
            match index {
                1 => Ok(OmegaForm::plain(SeriesKind::Pfq(PfqSpec::f32(
                    [1.0, 4.0 / 3.0, 5.0 / 3.0],
                    [c1, c2],
                )?))),
                // The second and third branches reduce to Gauss functions:
                // a numerator parameter of the shifted 3F2 coincides with a
                // denominator parameter. The Gauss forms are canonical.
                2 => Ok(OmegaForm::powered(
                    (1.0 - beta) / 3.0,
                    0.0,
                    SeriesKind::Pfq(PfqSpec::f21(
                        (5.0 - beta) / 3.0,
                        (6.0 - beta) / 3.0,
                        (2.0 + beta) / 3.0,
                    )?),
                )),
                _ => Ok(OmegaForm::powered(
                    2.0 * (1.0 - beta) / 3.0,
                    0.0,
                    SeriesKind::Pfq(PfqSpec::f21(
                        (6.0 - 2.0 * beta) / 3.0,
                        (7.0 - 2.0 * beta) / 3.0,
                        (4.0 - beta) / 3.0,
                    )?),
                )),
            }
        }
        FamilyId::T5 => {
            let a = 1.0;
            let c1 = (2.0 + alpha) / 3.0;
            let c2 = (1.0 + 2.0 * alpha) / 3.0;
            let d1 = (2.0 + beta) / 3.0;
            let d2 = (1.0 + 2.0 * beta) / 3.0;
            // (x_power, y_power, joint upper, x lowers, y lowers).
            // Indicial analysis of the reduced system fixes the joint
            // upper parameter of the doubly-powered branches at
            // a + 2 − c − d (the sign mirrors the two-variable parabolic
            // case); the numerical residual checks confirm that choice.
            let (p, q, joint, bx, by) = match index {
                1 => (0.0, 0.0, a, [c1, c2], [d1, d2]),
                2 => (
                    0.0,
                    1.0 - d1,
                    1.0 - d1 + a,
                    [c1, c2],
                    [2.0 - d1, d2 - d1 + 1.0],
                ),
                3 => (
                    0.0,
                    1.0 - d2,
                    1.0 - d2 + a,
                    [c1, c2],
                    [2.0 - d2, d1 - d2 + 1.0],
                ),
                4 => (
                    1.0 - c1,
                    0.0,
                    1.0 - c1 + a,
                    [2.0 - c1, c2 - c1 + 1.0],
                    [d1, d2],
                ),
                5 => (
                    1.0 - c1,
                    1.0 - d1,
                    a + 2.0 - c1 - d1,
                    [2.0 - c1, 1.0 + c2 - c1],
                    [2.0 - d1, 1.0 + d2 - d1],
                ),
                6 => (
                    1.0 - c1,
                    1.0 - d2,
                    a + 2.0 - c1 - d2,
                    [2.0 - c1, 1.0 + c2 - c1],
                    [1.0 + d1 - d2, 2.0 - d2],
                ),
                7 => (
                    1.0 - c2,
                    0.0,
                    1.0 - c2 + a,
                    [c1 - c2 + 1.0, 2.0 - c2],
                    [d1, d2],
                ),
                8 => (
                    1.0 - c2,
                    1.0 - d1,
                    a + 2.0 - c2 - d1,
                    [1.0 + c1 - c2, 2.0 - c2],
                    [2.0 - d1, 1.0 + d2 - d1],
                ),
                _ => (
                    1.0 - c2,
                    1.0 - d2,
                    a + 2.0 - c2 - d2,
                    [1.0 + c1 - c2, 2.0 - c2],
                    [1.0 + d1 - d2, 2.0 - d2],
                ),
            };
            let spec = KdfSpec::new(
                vec![joint],
                vec![],
                vec![],
                vec![],
                bx.to_vec(),
                by.to_vec(),
            )?;
            Ok(OmegaForm::powered(p, q, SeriesKind::Kdf(spec)))
        }
        FamilyId::F6 => {
            let a = 1.0;
            let c1 = (3.0 + alpha) / 4.0;
            let c2 = (2.0 + 2.0 * alpha) / 4.0;
            let c3 = (1.0 + 3.0 * alpha) / 4.0;
            let (p, spec) = match index {
                1 => (0.0, PfqSpec::f13(a, [c1, c2, c3])?),
                2 => (
                    1.0 - c1,
                    PfqSpec::f13(
                        1.0 - c1 + a,
                        [2.0 - c1, 1.0 + c2 - c1, 1.0 + c3 - c1],
                    )?,
                ),
                3 => (
                    1.0 - c2,
                    PfqSpec::f13(
                        1.0 - c2 + a,
                        [1.0 + c1 - c2, 2.0 - c2, 1.0 + c3 - c2],
                    )?,
                ),
                _ => (
                    1.0 - c3,
                    PfqSpec::f13(
                        1.0 - c3 + a,
                        [1.0 + c1 - c3, 1.0 + c2 - c3, 2.0 - c3],
                    )?,
                ),
            };
            Ok(OmegaForm::powered(p, 0.0, SeriesKind::Pfq(spec)))
        }
    }
}

/// Human-readable parameter summary of a branch at concrete family
/// parameters, for catalog listings.
pub fn branch_summary(info: &BranchInfo, params: &FamilyParams) -> String {
    match branch_form(info.family, info.index, params) {
        Err(e) => format!("unavailable at these parameters ({e})"),
        Ok(form) => {
            let series = match &form.series {
                SeriesKind::Pfq(s) => format!(
                    "{}F{}({:?}; {:?})",
                    s.numerator().len(),
                    s.denominator().len(),
                    s.numerator(),
                    s.denominator()
                ),
                SeriesKind::Psi2(s) => format!("Psi2({}; {}, {})", s.a, s.c1, s.c2),
                SeriesKind::Kdf(s) => format!(
                    "KdF[{:?}; -; -; {:?}; {:?}]",
                    s.upper_joint, s.lower_x, s.lower_y
                ),
            };
            let mut powers = String::new();
            if form.x_power != 0.0 {
                powers.push_str(&format!(" |s1|^{:.6}", form.x_power));
            }
            if form.y_power != 0.0 {
                powers.push_str(&format!(" |s2|^{:.6}", form.y_power));
            }
            format!("{series}{powers}")
        }
    }
}

//! Degenerate PDE families and their closed-form solution branches.
//!
//! Each family admits self-similar solutions u = P·ω(σ) (or ω(ξ, η)), where
//! the prefactor P and the similarity variables are fixed by the family and
//! ω is a hypergeometric factor specific to the branch. Branches are built
//! from the P·ω form; the simplified closed-form rewrites that appear
//! alongside some of them are handled separately by the verifier's
//! prefactor adjudication.

mod catalog;
mod omega;
mod point;
mod similarity;

pub use catalog::{branch_form, branch_summary, list_branches, BranchInfo, OmegaForm, SeriesKind};
pub use omega::{omega_partial, omega_value};
pub use point::{Axis, Point};
pub use similarity::{derived_exponents, similarity_map, SimilarityFrame, SimilarityVars};

use crate::error::{Error, Result};
use crate::hyperfun::EvalOptions;

/// The six equation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// Vortex diffusion, u_t = ν(u_xx + u_x/x) in (x, t). Sanity case.
    P0,
    /// Parabolic with one degeneracy line: u_t − u_xx − (2α/x)u_x = 0.
    P2,
    /// Parabolic with two degeneracy lines:
    /// u_t − u_xx − u_yy − (2α/x)u_x − (2β/y)u_y = 0.
    P3,
    /// Third order, one degeneracy line: yᵐ u_xxx − u_yyy = 0, stationary.
    T4,
    /// Third order in three variables:
    /// xⁿyᵐ u_t − tᵏyᵐ u_xxx − tᵏxⁿ u_yyy = 0.
    T5,
    /// Fourth order with two degeneracy lines: xⁿ u_t − tᵏ u_xxxx = 0.
    F6,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::P0,
        FamilyId::P2,
        FamilyId::P3,
        FamilyId::T4,
        FamilyId::T5,
        FamilyId::F6,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p0" => Ok(FamilyId::P0),
            "p2" => Ok(FamilyId::P2),
            "p3" => Ok(FamilyId::P3),
            "t4" => Ok(FamilyId::T4),
            "t5" => Ok(FamilyId::T5),
            "f6" => Ok(FamilyId::F6),
            other => Err(Error::domain(format!("unknown family '{other}'"))),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            FamilyId::P0 => "p0",
            FamilyId::P2 => "p2",
            FamilyId::P3 => "p3",
            FamilyId::T4 => "t4",
            FamilyId::T5 => "t5",
            FamilyId::F6 => "f6",
        }
    }

    /// Independent variables of the family, in CSV column order.
    pub fn axes(&self) -> &'static [Axis] {
        match self {
            FamilyId::P0 | FamilyId::P2 | FamilyId::F6 => &[Axis::X, Axis::T],
            FamilyId::P3 | FamilyId::T5 => &[Axis::X, Axis::Y, Axis::T],
            FamilyId::T4 => &[Axis::X, Axis::Y],
        }
    }

    /// Number of published solution branches.
    pub fn branch_count(&self) -> u32 {
        match self {
            FamilyId::P0 => 1,
            FamilyId::P2 => 2,
            FamilyId::P3 => 4,
            FamilyId::T4 => 3,
            FamilyId::T5 => 9,
            FamilyId::F6 => 4,
        }
    }

    /// Highest derivative order appearing in the operator.
    pub fn operator_order(&self) -> u32 {
        match self {
            FamilyId::P0 | FamilyId::P2 | FamilyId::P3 => 2,
            FamilyId::T4 | FamilyId::T5 => 3,
            FamilyId::F6 => 4,
        }
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Family parameters. Fields that a family does not use are ignored.
///
/// Defaults are generic values away from every degeneracy: α = 0.3,
/// β = 0.4 for P2/P3; m = n = k = 1 for T4/T5/F6; ν = E = 1 for P0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams {
    pub alpha: f64,
    pub beta: f64,
    pub m: f64,
    pub n: f64,
    pub k: f64,
    pub nu: f64,
    pub e_amp: f64,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            alpha: 0.3,
            beta: 0.4,
            m: 1.0,
            n: 1.0,
            k: 1.0,
            nu: 1.0,
            e_amp: 1.0,
        }
    }
}

/// One solution branch: family, 1-based index, and the arbitrary
/// multiplicative constant every branch carries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionBranch {
    pub family: FamilyId,
    pub index: u32,
    pub constant: f64,
}

impl SolutionBranch {
    pub fn new(family: FamilyId, index: u32) -> Result<Self> {
        Self::with_constant(family, index, 1.0)
    }

    pub fn with_constant(family: FamilyId, index: u32, constant: f64) -> Result<Self> {
        if index == 0 || index > family.branch_count() {
            return Err(Error::domain(format!(
                "family {} has branches 1..={}, got {index}",
                family,
                family.branch_count()
            )));
        }
        Ok(SolutionBranch {
            family,
            index,
            constant,
        })
    }
}

/// Evaluates the branch field constant · P · ω(similarity variables).
pub fn eval_branch(
    branch: &SolutionBranch,
    params: &FamilyParams,
    p: &Point,
    opts: &EvalOptions,
) -> Result<f64> {
    let frame = similarity_map(branch.family, params, p)?;
    let form = branch_form(branch.family, branch.index, params)?;
    let w = omega_value(&form, &frame.vars, opts)?;
    Ok(branch.constant * frame.prefactor * w)
}

/// The branch as a reusable scalar field.
pub fn branch_field<'a>(
    branch: &'a SolutionBranch,
    params: &'a FamilyParams,
    opts: &'a EvalOptions,
) -> impl Fn(&Point) -> Result<f64> + 'a {
    move |p| eval_branch(branch, params, p, opts)
}

//! Gauss–Jacobi quadrature and the double Euler-integral oracle for ₃F₂.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use statrs::function::beta::beta;

/// Quadrature rule on [0, 1] absorbing the weight uᵇ(1−u)ᵃ:
///
/// ∫₀¹ uᵇ (1−u)ᵃ g(u) du ≈ Σ wᵢ g(uᵢ)
///
/// Nodes and weights come from the Golub–Welsch eigenvalue method applied
/// to the Jacobi recurrence. The pair (a, b) = (0, 0) is the plain
/// Gauss–Legendre rule.
#[derive(Debug, Clone)]
pub struct GaussJacobi {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussJacobi {
    /// Builds an `n`-node rule for the weight uᵇ(1−u)ᵃ on [0, 1].
    /// Requires n ≥ 2 and a, b > −1.
    pub fn new(n: usize, one_minus_u_exp: f64, u_exp: f64) -> Result<Self> {
        let (alpha, beta_exp) = (one_minus_u_exp, u_exp);
        if n < 2 {
            return Err(Error::domain("quadrature needs at least 2 nodes"));
        }
        if !(alpha > -1.0) || !(beta_exp > -1.0) {
            return Err(Error::domain(
                "quadrature weight exponents must exceed -1",
            ));
        }

        // Symmetric tridiagonal Jacobi matrix for weight (1−x)^α (1+x)^β
        // on [−1, 1].
        let mut t = DMatrix::<f64>::zeros(n, n);
        let ab = alpha + beta_exp;
        t[(0, 0)] = (beta_exp - alpha) / (ab + 2.0);
        for k in 1..n {
            let kf = k as f64;
            let denom = 2.0 * kf + ab;
            t[(k, k)] = (beta_exp * beta_exp - alpha * alpha) / (denom * (denom + 2.0));
            let off2 = if k == 1 {
                // (k + α + β) cancels (2k + α + β − 1) at k = 1; the
                // cancelled form avoids 0/0 when α + β = −1.
                4.0 * (1.0 + alpha) * (1.0 + beta_exp) / ((2.0 + ab).powi(2) * (3.0 + ab))
            } else {
                4.0 * kf * (kf + alpha) * (kf + beta_exp) * (kf + ab)
                    / (denom * denom * (denom + 1.0) * (denom - 1.0))
            };
            let off = off2.sqrt();
            t[(k - 1, k)] = off;
            t[(k, k - 1)] = off;
        }

        let eigen = t.symmetric_eigen();
        // total mass on [−1,1] is 2^{α+β+1} B(α+1, β+1); mapping to [0,1]
        // scales by 2^{−(α+β+1)}, so weights sum to B(β+1, α+1).
        let mass = beta(beta_exp + 1.0, alpha + 1.0);
        let mut pairs: Vec<(f64, f64)> = eigen
            .eigenvalues
            .iter()
            .zip(eigen.eigenvectors.row(0).iter())
            .map(|(&x, &v0)| ((1.0 + x) / 2.0, mass * v0 * v0))
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(GaussJacobi {
            nodes: pairs.iter().map(|p| p.0).collect(),
            weights: pairs.iter().map(|p| p.1).collect(),
        })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Σ wᵢ g(uᵢ).
    pub fn integrate(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&u, &w)| w * g(u))
            .sum()
    }
}

/// Double Euler-integral representation of the Clausen function:
///
/// ```text
/// ₃F₂(a1,a2,a3; c1,c2; x) = Γ(c1)Γ(c2) / (Γ(a1)Γ(a2)Γ(c1−a1)Γ(c2−a2))
///     ∫₀¹∫₀¹ ξ^{a1−1} η^{a2−1} (1−ξ)^{c1−a1−1} (1−η)^{c2−a2−1} (1−xξη)^{−a3} dξ dη
/// ```
///
/// valid for c1 > a1 > 0, c2 > a2 > 0 and x < 1. Serves as an oracle for
/// the series evaluator. The algebraic endpoint factors are absorbed into
/// Gauss–Jacobi weights so the sampled kernel (1−xξη)^{−a3} is smooth.
pub fn clausen_3f2_integral(
    a1: f64,
    a2: f64,
    a3: f64,
    c1: f64,
    c2: f64,
    x: f64,
    quad_nodes: usize,
) -> Result<f64> {
    if !(c1 > a1 && a1 > 0.0) || !(c2 > a2 && a2 > 0.0) {
        return Err(Error::domain(
            "integral representation needs c1 > a1 > 0 and c2 > a2 > 0",
        ));
    }
    if !(x < 1.0) {
        return Err(Error::domain("integral representation needs x < 1"));
    }
    let rule_xi = GaussJacobi::new(quad_nodes, c1 - a1 - 1.0, a1 - 1.0)?;
    let rule_eta = GaussJacobi::new(quad_nodes, c2 - a2 - 1.0, a2 - 1.0)?;
    let mut sum = 0.0;
    for (&xi, &wx) in rule_xi.nodes().iter().zip(rule_xi.weights()) {
        let mut inner = 0.0;
        for (&eta, &wy) in rule_eta.nodes().iter().zip(rule_eta.weights()) {
            inner += wy * (1.0 - x * xi * eta).powf(-a3);
        }
        sum += wx * inner;
    }
    // Γ prefactor equals 1 / (B(a1, c1−a1) B(a2, c2−a2)).
    Ok(sum / (beta(a1, c1 - a1) * beta(a2, c2 - a2)))
}

use serde::{Deserialize, Serialize};

/// Every numerical threshold the solver uses, in one place. Tests and the
/// CLI echo this block verbatim so a result is always reproducible from its
/// output alone.
///
/// The relative/absolute convention per field:
/// * `zero_tol` is absolute on coefficient magnitudes (effective-degree cuts,
///   trailing-coefficient truncation is relative to the largest coefficient).
/// * `taylor_tol` is relative to `max(1, max_j |c_j|)`.
/// * `det_tol` is relative to `prod_j (1 - |gamma_j|^2)`, the right-hand side
///   of the determinant identity, which can be tiny near the boundary.
/// * the rest are absolute.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Coefficients at or below this count as zero.
    pub zero_tol: f64,
    /// Taylor-coefficient match requirement for a verified solution.
    pub taylor_tol: f64,
    /// Allowed overshoot of |f| above 1 on the unit-circle grid.
    pub schur_tol: f64,
    /// Denominator roots must have modulus >= 1 + pole_margin.
    pub pole_margin: f64,
    /// Number of unit-circle sample points for the maximum-modulus check.
    pub circle_grid: usize,
    /// Schur parameters must satisfy |gamma_j| < 1 - strict_tol.
    pub strict_tol: f64,
    /// Pick-matrix eigenvalues within +/- psd_tol of zero count as singular.
    pub psd_tol: f64,
    /// Numerator/denominator roots closer than this cancel during reduction.
    pub root_match_tol: f64,
    /// Constant-term residual allowed when stripping a Schur parameter.
    pub backward_tol: f64,
    /// Singular values below rank_tol * sigma_max count as zero.
    pub rank_tol: f64,
    /// Determinant-identity residual bound (relative, see above).
    pub det_tol: f64,
    /// Interval width at which the |alpha_0| bisection stops.
    pub bisect_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            zero_tol: 1e-12,
            taylor_tol: 1e-9,
            schur_tol: 1e-8,
            pole_margin: 1e-8,
            circle_grid: 4096,
            strict_tol: 1e-9,
            psd_tol: 1e-10,
            root_match_tol: 1e-8,
            backward_tol: 1e-8,
            rank_tol: 1e-10,
            det_tol: 1e-10,
            bisect_tol: 1e-6,
        }
    }
}

//! Construction of the free parameter E for each degree-budget regime.
//!
//! The assembled interpolant has degree <= k exactly when E has a specific
//! constrained rational shape (or, above the data length, when E is small
//! enough in degree that no constraint is needed). This module builds such
//! parameters, certifies Schur-class membership, and for the k < n regime
//! runs the nullspace search that is the only known way to produce
//! candidates; no existence criterion is available there, so exhaustion is
//! reported as exhaustion rather than as nonexistence.

use std::str::FromStr;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::rational::RationalFn;
use crate::roots::poly_roots;
use crate::theta::ThetaMatrix;
use crate::toeplitz::LowerToeplitz;
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    KEqualN,
    KAboveNFree,
    KAboveNConstrained,
    KBelowN,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::KEqualN => "k_equal_n",
            Regime::KAboveNFree => "k_above_n_free",
            Regime::KAboveNConstrained => "k_above_n_constrained",
            Regime::KBelowN => "k_below_n",
        }
    }
}

/// A certified parameter: the realized Schur-class function E together
/// with its defining coefficient vectors (denominator alpha, numerator
/// beta, both ascending in z).
#[derive(Debug, Clone)]
pub struct ParameterSpec {
    pub regime: Regime,
    pub alpha: Vec<C64>,
    pub beta: Vec<C64>,
    pub e: RationalFn,
}

/// How the free constant denominator coefficient is picked.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Alpha0Strategy {
    /// Coefficient-sum bound times a safety margin: always admissible.
    SufficientBound,
    /// Bisect |alpha_0| down (positive real phase) to the membership
    /// boundary; the certified result is the smallest passing value found.
    MinimizeBisect,
    /// Caller-supplied value, validated and rejected if not Schur.
    Explicit(C64),
}

impl FromStr for Alpha0Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bound" => Ok(Alpha0Strategy::SufficientBound),
            "bisect" => Ok(Alpha0Strategy::MinimizeBisect),
            other => other
                .parse::<f64>()
                .map(|v| Alpha0Strategy::Explicit(C64::new(v, 0.0)))
                .map_err(|_| {
                    Error::InvalidInput(format!(
                        "alpha0 strategy must be 'bound', 'bisect' or a number, got '{other}'"
                    ))
                }),
        }
    }
}

/// Membership certificate: largest modulus on the unit-circle grid and the
/// smallest denominator root modulus (infinite when the denominator has no
/// roots at all).
#[derive(Debug, Clone, Copy)]
pub struct Membership {
    pub is_schur: bool,
    pub circle_max: f64,
    pub nearest_pole: f64,
}

fn circle_max(e: &RationalFn, grid: usize) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..grid {
        let t = 2.0 * std::f64::consts::PI * (i as f64) / (grid as f64);
        let v = e.eval(C64::from_polar(1.0, t)).norm();
        if !v.is_finite() {
            return f64::INFINITY;
        }
        worst = worst.max(v);
    }
    worst
}

/// Checks Schur-class membership of a rational function as represented:
/// every denominator root must lie outside the closed disk by at least
/// pole_margin, and by the maximum principle the boundary grid maximum
/// must not exceed 1 + schur_tol. Root-finder failure makes the test
/// indeterminate and surfaces as an error, never as a pass.
pub fn schur_membership(e: &RationalFn, tols: &Tolerances) -> Result<Membership> {
    let roots = poly_roots(e.den(), tols.zero_tol)?;
    let nearest_pole = roots.iter().map(|r| r.norm()).fold(f64::INFINITY, f64::min);
    let max_mod = circle_max(e, tols.circle_grid);
    let is_schur = nearest_pole >= 1.0 + tols.pole_margin && max_mod <= 1.0 + tols.schur_tol;
    Ok(Membership { is_schur, circle_max: max_mod, nearest_pole })
}

/// Numerator coefficients forced by the denominator tail: beta = -R alpha.
/// Top-degree-first ordering on both sides: input (alpha_n, ..., alpha_1),
/// output (beta_{n-1}, ..., beta_0).
pub fn beta_from_alpha(r: &LowerToeplitz, alpha_desc: &[C64]) -> Result<Vec<C64>> {
    Ok(r.apply(alpha_desc)?.into_iter().map(|x| -x).collect())
}

/// The coefficient-sum bound: any |alpha_0| at or above this makes E a
/// Schur function, because on the closed disk |den| >= |alpha_0| - sum
/// |tail| >= sum |num| >= |num|.
pub fn alpha0_sufficient(alpha_tail: &[C64], beta: &[C64]) -> f64 {
    alpha_tail.iter().map(|x| x.norm()).sum::<f64>()
        + beta.iter().map(|x| x.norm()).sum::<f64>()
}

fn with_alpha0(num: &ComplexPoly, den_tail: &[C64], a0: C64) -> Result<RationalFn> {
    let mut den = Vec::with_capacity(den_tail.len() + 1);
    den.push(a0);
    den.extend_from_slice(den_tail);
    RationalFn::new(num.clone(), ComplexPoly::new(den))
}

/// Resolves the strategy into a concrete constant coefficient and a
/// certified-Schur E. The sufficient bound gets a 10% safety margin (and
/// falls back to 1 when everything else is zero, where E is identically
/// zero and any nonzero constant works).
fn choose_alpha0(
    num: &ComplexPoly,
    den_tail: &[C64],
    strategy: Alpha0Strategy,
    tols: &Tolerances,
) -> Result<(RationalFn, Membership)> {
    let s = alpha0_sufficient(den_tail, num.coeffs());
    let fallback = if s > 0.0 { 1.1 * s } else { 1.0 };

    let certify = |a0: C64| -> Result<(RationalFn, Membership)> {
        let e = with_alpha0(num, den_tail, a0)?;
        let m = schur_membership(&e, tols)?;
        if m.is_schur {
            Ok((e, m))
        } else {
            Err(Error::RejectedParameter {
                circle_max: m.circle_max,
                nearest_pole: m.nearest_pole,
            })
        }
    };

    match strategy {
        Alpha0Strategy::SufficientBound => certify(C64::new(fallback, 0.0)),
        Alpha0Strategy::Explicit(v) => certify(v),
        Alpha0Strategy::MinimizeBisect => {
            let (mut best, mut best_m) = certify(C64::new(fallback, 0.0))?;
            let mut hi = fallback;
            let mut lo = 0.0f64;
            while hi - lo > tols.bisect_tol {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let e = with_alpha0(num, den_tail, C64::new(mid, 0.0))?;
                match schur_membership(&e, tols) {
                    Ok(m) if m.is_schur => {
                        hi = mid;
                        best = e;
                        best_m = m;
                    }
                    _ => lo = mid,
                }
            }
            Ok((best, best_m))
        }
    }
}

/// Exact-budget regime: from a free denominator tail (alpha_1, ..., alpha_n,
/// ascending), derives the forced numerator and a constant coefficient per
/// the strategy. The result always satisfies E(inf) = 0 structurally: the
/// numerator vector is one slot shorter than the denominator.
pub fn make_param_k_equal_n(
    r: &LowerToeplitz,
    alpha_tail: &[C64],
    strategy: Alpha0Strategy,
    tols: &Tolerances,
) -> Result<ParameterSpec> {
    let n = r.dim();
    if alpha_tail.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "need {} tail coefficients, got {}",
            n,
            alpha_tail.len()
        )));
    }
    let alpha_desc: Vec<C64> = alpha_tail.iter().rev().copied().collect();
    let beta_desc = beta_from_alpha(r, &alpha_desc)?;
    let num = if n == 0 {
        ComplexPoly::zero()
    } else {
        ComplexPoly::new(beta_desc.iter().rev().copied().collect())
    };
    let (e, _m) = choose_alpha0(&num, alpha_tail, strategy, tols)?;
    Ok(ParameterSpec {
        regime: Regime::KEqualN,
        alpha: e.den().coeffs().to_vec(),
        beta: e.num().coeffs().to_vec(),
        e,
    })
}

/// Input for the above-budget regime: either a genuinely free parameter of
/// small degree, or the constrained long-tail shape with its free
/// coefficients spelled out.
#[derive(Debug, Clone)]
pub enum AboveInput {
    /// Any Schur-class rational E with McMillan degree <= k - n - 1.
    Free(RationalFn),
    /// Coefficients alpha_{n-k+1}, ..., alpha_n (ascending, length k) and
    /// beta_{n-k}, ..., beta_{-1} (ascending, length k - n); the middle
    /// betas are forced and the bottom alpha is chosen by the strategy.
    Constrained {
        alpha_free: Vec<C64>,
        beta_free: Vec<C64>,
        strategy: Alpha0Strategy,
    },
}

pub fn make_param_k_above_n(
    r: &LowerToeplitz,
    k: usize,
    input: AboveInput,
    tols: &Tolerances,
) -> Result<ParameterSpec> {
    let n = r.dim();
    if k <= n {
        return Err(Error::WrongRegime(format!("budget k = {k} is not above n = {n}")));
    }
    match input {
        AboveInput::Free(e) => {
            let deg = e.mcmillan_degree(tols);
            if deg + n + 1 > k {
                return Err(Error::WrongRegime(format!(
                    "free parameter degree {deg} exceeds the budget headroom {}",
                    k - n - 1
                )));
            }
            let m = schur_membership(&e, tols)?;
            if !m.is_schur {
                return Err(Error::RejectedParameter {
                    circle_max: m.circle_max,
                    nearest_pole: m.nearest_pole,
                });
            }
            Ok(ParameterSpec {
                regime: Regime::KAboveNFree,
                alpha: e.den().coeffs().to_vec(),
                beta: e.num().coeffs().to_vec(),
                e,
            })
        }
        AboveInput::Constrained { alpha_free, beta_free, strategy } => {
            if alpha_free.len() != k || beta_free.len() != k - n {
                return Err(Error::DimensionMismatch(format!(
                    "constrained regime needs {k} alphas and {} betas, got {} and {}",
                    k - n,
                    alpha_free.len(),
                    beta_free.len()
                )));
            }
            // the top n free alphas are alpha_1..alpha_n and force the
            // middle betas exactly as in the exact-budget regime
            let alpha_desc: Vec<C64> = alpha_free[k - n..].iter().rev().copied().collect();
            let beta_desc = beta_from_alpha(r, &alpha_desc)?;
            let mut num_coeffs = beta_free.clone();
            num_coeffs.extend(beta_desc.iter().rev());
            let num = if num_coeffs.is_empty() {
                ComplexPoly::zero()
            } else {
                ComplexPoly::new(num_coeffs)
            };
            let (e, _m) = choose_alpha0(&num, &alpha_free, strategy, tols)?;
            Ok(ParameterSpec {
                regime: Regime::KAboveNConstrained,
                alpha: e.den().coeffs().to_vec(),
                beta: e.num().coeffs().to_vec(),
                e,
            })
        }
    }
}

/// Right-nullspace basis of the (n-k) x (k+1) degree-drop matrix, by SVD.
/// The matrix is padded with zero rows to square so the factorization
/// returns the full right basis. Vectors come back in top-degree-first
/// coordinates (alpha_k, ..., alpha_0), ordered most-null first.
fn nullspace_basis(
    m: &DMatrix<C64>,
    tols: &Tolerances,
) -> std::result::Result<Vec<Vec<C64>>, f64> {
    let cols = m.ncols();
    if m.iter().all(|x| x.norm() == 0.0) {
        // degenerate free case: every vector works; prefer the ones with
        // dominant low-order coefficients (analytic at the origin)
        return Ok((0..cols)
            .rev()
            .map(|i| {
                let mut v = vec![C64::new(0.0, 0.0); cols];
                v[i] = C64::new(1.0, 0.0);
                v
            })
            .collect());
    }
    let padded = if m.nrows() < cols {
        let mut sq = DMatrix::from_element(cols, cols, C64::new(0.0, 0.0));
        sq.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
        sq
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let mut indexed: Vec<(f64, usize)> = svd
        .singular_values
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i))
        .collect();
    indexed.sort_by(|a, b| a.0.total_cmp(&b.0));
    let basis: Vec<Vec<C64>> = indexed
        .iter()
        .filter(|(s, _)| *s <= tols.rank_tol * sigma_max)
        .map(|&(_, i)| v_t.row(i).iter().map(|x| x.conj()).collect())
        .collect();
    if basis.is_empty() {
        Err(indexed[0].0) // smallest singular value, for the report
    } else {
        Ok(basis)
    }
}

/// Below-budget regime: seeded search over the nullspace of the degree-drop
/// system. Every candidate satisfies the linear constraints by
/// construction; the search is only over Schur-class membership, and a
/// miss within the budget proves nothing.
pub fn make_param_k_below_n(
    r: &LowerToeplitz,
    k: usize,
    budget: usize,
    seed: u64,
    tols: &Tolerances,
) -> Result<ParameterSpec> {
    let n = r.dim();
    if k >= n {
        return Err(Error::WrongRegime(format!("budget k = {k} is not below n = {n}")));
    }
    let rcol = r.column(); // (r_n, ..., r_1)
    let r_at = |j: usize| rcol[n - j]; // r_j, 1-based
    let m = DMatrix::from_fn(n - k, k + 1, |i, j| r_at(1 + i + j));
    let basis = match nullspace_basis(&m, tols) {
        Ok(b) => b,
        Err(smallest_sv) => return Err(Error::InfeasibleNullspace { smallest_sv }),
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tries = if basis.len() == 1 { 1 } else { budget.max(1) };
    for t in 0..tries {
        let v_desc: Vec<C64> = if t == 0 {
            basis[0].clone()
        } else {
            let mut v = vec![C64::new(0.0, 0.0); k + 1];
            for b in &basis {
                let w = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                for (x, y) in v.iter_mut().zip(b.iter()) {
                    *x += w * y;
                }
            }
            v
        };
        let scale = v_desc.iter().map(|x| x.norm()).fold(0.0, f64::max);
        if scale <= tols.zero_tol {
            continue;
        }
        let inv = C64::new(1.0 / scale, 0.0);
        let alpha_asc: Vec<C64> = v_desc.iter().rev().map(|x| x * inv).collect();

        // forced numerator: the top k rows of -R applied to the padded
        // vector, which only see (alpha_k, ..., alpha_1)
        let num = if k == 0 {
            ComplexPoly::zero()
        } else {
            let t_k = LowerToeplitz::new(rcol[..k].to_vec());
            let head: Vec<C64> = v_desc[..k].iter().map(|x| x * inv).collect();
            let beta_desc = beta_from_alpha(&t_k, &head)?;
            ComplexPoly::new(beta_desc.iter().rev().copied().collect())
        };
        let Ok(e) = RationalFn::new(num, ComplexPoly::new(alpha_asc)) else {
            continue;
        };
        match schur_membership(&e, tols) {
            Ok(m) if m.is_schur => {
                return Ok(ParameterSpec {
                    regime: Regime::KBelowN,
                    alpha: e.den().coeffs().to_vec(),
                    beta: e.num().coeffs().to_vec(),
                    e,
                });
            }
            _ => continue,
        }
    }
    Err(Error::SearchExhausted { budget: tries })
}

/// Residuals of the two degree-drop coefficient identities for a structured
/// parameter, on the padded top-degree-aligned vectors. Zero (to round-off)
/// for every parameter this module builds; `None` for the free regime,
/// where the identities do not apply. Scaled relative to the coefficient
/// magnitudes involved.
pub fn constraint_residuals(
    theta: &ThetaMatrix,
    spec: &ParameterSpec,
) -> Result<Option<(f64, f64)>> {
    if spec.regime == Regime::KAboveNFree {
        return Ok(None);
    }
    let n = theta.n();
    if n == 0 {
        return Ok(Some((0.0, 0.0)));
    }
    let k = spec.e.den().len() - 1;
    let den = spec.e.den();
    let num = spec.e.num();
    let coeff_or_zero = |p: &ComplexPoly, i: isize| {
        if i >= 0 { p.coeff(i as usize) } else { C64::new(0.0, 0.0) }
    };
    let alpha_desc: Vec<C64> =
        (0..n).map(|m| coeff_or_zero(den, k as isize - m as isize)).collect();
    let beta_desc: Vec<C64> =
        (0..n).map(|m| coeff_or_zero(num, k as isize - 1 - m as isize)).collect();

    let eq1: Vec<C64> = theta
        .t_b_tilde()
        .apply(&beta_desc)?
        .iter()
        .zip(theta.t_a().apply(&alpha_desc)?)
        .map(|(x, y)| x + y)
        .collect();
    let eq2: Vec<C64> = theta
        .t_a_tilde()
        .apply(&beta_desc)?
        .iter()
        .zip(theta.t_b().apply(&alpha_desc)?)
        .map(|(x, y)| x + y)
        .collect();

    let vec_scale = alpha_desc
        .iter()
        .chain(beta_desc.iter())
        .map(|x| x.norm())
        .fold(1.0, f64::max);
    let mat_scale = theta
        .a()
        .coeffs()
        .iter()
        .chain(theta.b().coeffs())
        .map(|x| x.norm())
        .fold(1.0, f64::max);
    let denom = vec_scale * mat_scale * n as f64;
    let inf = |v: &[C64]| v.iter().map(|x| x.norm()).fold(0.0, f64::max);
    Ok(Some((inf(&eq1) / denom, inf(&eq2) / denom)))
}

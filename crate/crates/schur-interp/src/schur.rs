//! The coefficient-level Schur recursion and its inverse, plus the two
//! independent admissibility tests (Pick matrix positivity and parameter
//! moduli) that are cross-checked against each other.

use nalgebra::DMatrix;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::rational::RationalFn;
use crate::toeplitz::LowerToeplitz;
use crate::C64;

/// The parameters gamma_0, ..., gamma_n extracted from admissible data.
/// Invariant: non-empty and every modulus strictly below 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurParams {
    gammas: Vec<C64>,
}

impl SchurParams {
    pub fn new(gammas: Vec<C64>) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::InvalidInput("need at least one parameter".into()));
        }
        for (j, g) in gammas.iter().enumerate() {
            if g.norm() >= 1.0 {
                return Err(Error::NotAdmissible { stage: j, modulus: g.norm() });
            }
        }
        Ok(SchurParams { gammas })
    }

    pub fn gammas(&self) -> &[C64] {
        &self.gammas
    }

    pub fn n(&self) -> usize {
        self.gammas.len() - 1
    }

    pub fn max_modulus(&self) -> f64 {
        self.gammas.iter().map(|g| g.norm()).fold(0.0, f64::max)
    }
}

/// One stage of the coefficient recursion: from the tail of the current
/// coefficient vector, the next vector is M^{-1} applied to it, where M is
/// the lower triangular Toeplitz matrix with column
/// (1 - |g|^2, -conj(g) c_1, ..., -conj(g) c_{m-1}).
fn next_stage(cur: &[C64], tols: &Tolerances) -> Result<Vec<C64>> {
    let g = cur[0];
    let m = cur.len() - 1;
    let mut column = Vec::with_capacity(m);
    column.push(C64::new(1.0 - g.norm_sqr(), 0.0));
    for i in 1..m {
        column.push(-g.conj() * cur[i]);
    }
    LowerToeplitz::new(column).solve(&cur[1..], tols.zero_tol)
}

fn run_recursion(c: &[C64], tols: &Tolerances) -> (Vec<C64>, Option<Error>) {
    let n = c.len() - 1;
    let mut gammas = Vec::with_capacity(n + 1);
    let mut cur = c.to_vec();
    for j in 0..=n {
        let g = cur[0];
        gammas.push(g);
        if g.norm() >= 1.0 - tols.strict_tol {
            return (gammas, Some(Error::NotAdmissible { stage: j, modulus: g.norm() }));
        }
        if j == n {
            break;
        }
        match next_stage(&cur, tols) {
            Ok(next) => cur = next,
            Err(e) => return (gammas, Some(e)),
        }
    }
    (gammas, None)
}

/// Schur parameters of the data, failing at the first stage whose leading
/// coefficient reaches the unit circle (within strict_tol).
pub fn schur_parameters(c: &[C64], tols: &Tolerances) -> Result<SchurParams> {
    if c.is_empty() {
        return Err(Error::InvalidInput("need at least c_0".into()));
    }
    let (gammas, failure) = run_recursion(c, tols);
    match failure {
        Some(e) => Err(e),
        None => SchurParams::new(gammas),
    }
}

/// Inverse of `schur_parameters`: reconstructs the unique coefficient
/// vector whose recursion produces the given parameters. Runs the stage
/// map forward (multiplication only, no solves), so it is total on valid
/// parameters.
pub fn inverse_schur_data(params: &SchurParams) -> Vec<C64> {
    let g = params.gammas();
    let n = g.len() - 1;
    let mut cur = vec![g[n]];
    for j in (0..n).rev() {
        let gamma = g[j];
        let scale = C64::new(1.0 - gamma.norm_sqr(), 0.0);
        let mut next = Vec::with_capacity(cur.len() + 1);
        next.push(gamma);
        for i in 1..=cur.len() {
            // column entry d of the stage matrix is -conj(gamma) * next[d],
            // already available because entries fill in order
            let mut acc = scale * cur[i - 1];
            for d in 1..i {
                acc += -gamma.conj() * next[d] * cur[i - 1 - d];
            }
            next.push(acc);
        }
        cur = next;
    }
    cur
}

/// I - T T^H for the lower triangular Toeplitz matrix T with column c.
pub fn pick_matrix(c: &[C64]) -> DMatrix<C64> {
    let m = c.len();
    let t = DMatrix::from_fn(m, m, |i, j| {
        if i >= j { c[i - j] } else { C64::new(0.0, 0.0) }
    });
    DMatrix::identity(m, m) - &t * t.adjoint()
}

pub fn pick_min_eigenvalue(c: &[C64]) -> f64 {
    let eig = pick_matrix(c).symmetric_eigen();
    eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataClass {
    /// Pick matrix positive definite; solver proceeds.
    StrictlyAdmissible,
    /// Pick matrix singular (within psd_tol). A unique Blaschke-product
    /// solution exists; this solver requires strict admissibility and
    /// refuses such data.
    Singular,
    /// Pick matrix has a negative eigenvalue: no Schur interpolant at all.
    Indefinite,
}

#[derive(Debug, Clone)]
pub struct Admissibility {
    pub admissible: bool,
    pub class: DataClass,
    pub min_pick_eigenvalue: f64,
    /// Largest |gamma_j| over the stages the recursion reached.
    pub max_gamma_modulus: f64,
    /// Present exactly when the data is strictly admissible.
    pub gammas: Option<SchurParams>,
}

/// Runs both admissibility tests and insists they agree. The eigenvalue
/// test is the ground truth of the underlying criterion; the recursion test
/// is the one the solver actually relies on. When both are decisive (margin
/// at least 10x the respective tolerance) and still disagree, something is
/// numerically wrong and the error says so rather than guessing. In the
/// marginal zone the stricter verdict (inadmissible) wins.
pub fn check_admissible(c: &[C64], tols: &Tolerances) -> Result<Admissibility> {
    if c.is_empty() {
        return Err(Error::InvalidInput("need at least c_0".into()));
    }
    let min_eig = pick_min_eigenvalue(c);
    let (gammas, failure) = run_recursion(c, tols);
    let max_gamma = gammas.iter().map(|g| g.norm()).fold(0.0, f64::max);

    let eig_ok = min_eig > tols.psd_tol;
    let gamma_ok = failure.is_none();
    if eig_ok != gamma_ok {
        let eig_decisive = min_eig.abs() >= 10.0 * tols.psd_tol;
        let gamma_decisive = (max_gamma - 1.0).abs() >= 10.0 * tols.strict_tol;
        if eig_decisive && gamma_decisive {
            return Err(Error::AdmissibilityMismatch { min_eig, max_gamma });
        }
    }

    let admissible = eig_ok && gamma_ok;
    let class = if admissible {
        DataClass::StrictlyAdmissible
    } else if min_eig < -tols.psd_tol {
        DataClass::Indefinite
    } else {
        DataClass::Singular
    };
    Ok(Admissibility {
        admissible,
        class,
        min_pick_eigenvalue: min_eig,
        max_gamma_modulus: max_gamma,
        gammas: if admissible { Some(SchurParams { gammas }) } else { None },
    })
}

/// One forward Schur step: f = (z f1 + gamma) / (z conj(gamma) f1 + 1),
/// expressed on numerator/denominator pairs. No reduction is performed;
/// for Schur-class f1 with |gamma| < 1 the output pair is coprime whenever
/// the input pair is.
pub fn forward_schur_step(f1: &RationalFn, gamma: C64) -> RationalFn {
    let zn = f1.num().mul_z();
    let num = zn.add(&f1.den().scale(gamma));
    let den = zn.scale(gamma.conj()).add(f1.den());
    RationalFn::new(num, den).expect("forward step cannot zero out the denominator")
}

/// Inverse of a forward step: recovers f1 from f and the parameter that
/// produced it, f1 = (f - gamma) / (z (1 - conj(gamma) f)). On coefficient
/// pairs this is a subtraction, a constant-term check, and a shift: the
/// numerator N - gamma D must have (numerically) vanishing constant term,
/// which is exactly the condition f(0) = gamma.
pub fn backward_schur_step(f: &RationalFn, gamma: C64, tols: &Tolerances) -> Result<RationalFn> {
    let w = f.num().sub(&f.den().scale(gamma));
    let den = f.den().sub(&f.num().scale(gamma.conj()));
    let scale = f.num().max_coeff_norm().max(f.den().max_coeff_norm()).max(1e-300);
    let residual = w.coeff(0).norm() / scale;
    if residual > tols.backward_tol {
        return Err(Error::CannotStrip { residual });
    }
    let num = crate::poly::ComplexPoly::new(w.coeffs()[1..].to_vec());
    RationalFn::new(num, den)
}

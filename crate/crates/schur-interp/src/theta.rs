//! The 2x2 polynomial transfer matrix that turns free Schur-class
//! parameters into interpolants, together with the lower triangular
//! Toeplitz matrices derived from its entries.
//!
//! Everything here is driven by two polynomials A, B of degree n built from
//! the Schur parameters by a two-term recursion. The matrix itself is
//!
//! ```text
//!   Theta(z) = [ z*B#(z)   A(z) ]
//!              [ z*A#(z)   B(z) ]
//! ```
//!
//! where `#` is reflection at index n. Two identities make the construction
//! self-checking: the determinant collapses to
//! `z^(n+1) * prod_j (1 - |gamma_j|^2)`, and Theta factors as a product of
//! elementary matrices, one per Schur parameter. `build_theta` verifies
//! both before releasing the matrix.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::schur::SchurParams;
use crate::toeplitz::LowerToeplitz;
use crate::C64;

/// Runs the coefficient recursion: starting from A = gamma_n, B = 1,
/// each step prepends the influence of the next parameter outward:
///
/// ```text
///   A <- z*A + gamma_j * B
///   B <- z*conj(gamma_j) * A_old + B
/// ```
///
/// for j = n-1 down to 0. Both outputs have nominal degree n; B(0) = 1
/// always, and the leading coefficient of A is gamma_0.
pub fn build_ab(params: &SchurParams) -> (ComplexPoly, ComplexPoly) {
    let g = params.gammas();
    let n = g.len() - 1;
    let mut a = ComplexPoly::constant(g[n]);
    let mut b = ComplexPoly::one();
    for j in (0..n).rev() {
        let a_next = a.mul_z().add(&b.scale(g[j]));
        let b_next = a.mul_z().scale(g[j].conj()).add(&b);
        a = a_next;
        b = b_next;
    }
    // keep the nominal length n+1 even when leading parameters vanish
    (
        ComplexPoly::new(a.coeffs_padded(n + 1)),
        ComplexPoly::new(b.coeffs_padded(n + 1)),
    )
}

#[derive(Debug, Clone)]
pub struct ThetaMatrix {
    a: ComplexPoly,
    b: ComplexPoly,
    a_sharp: ComplexPoly,
    b_sharp: ComplexPoly,
    gammas: SchurParams,
}

impl ThetaMatrix {
    pub fn n(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a(&self) -> &ComplexPoly {
        &self.a
    }

    pub fn b(&self) -> &ComplexPoly {
        &self.b
    }

    pub fn a_sharp(&self) -> &ComplexPoly {
        &self.a_sharp
    }

    pub fn b_sharp(&self) -> &ComplexPoly {
        &self.b_sharp
    }

    pub fn gammas(&self) -> &SchurParams {
        &self.gammas
    }

    /// Entry (0,0): z * B#(z).
    pub fn top_left(&self) -> ComplexPoly {
        self.b_sharp.mul_z()
    }

    /// Entry (1,0): z * A#(z).
    pub fn bottom_left(&self) -> ComplexPoly {
        self.a_sharp.mul_z()
    }

    /// Pointwise value as a 2x2 array [[tl, tr], [bl, br]].
    pub fn eval(&self, z: C64) -> [[C64; 2]; 2] {
        [
            [z * self.b_sharp.eval(z), self.a.eval(z)],
            [z * self.a_sharp.eval(z), self.b.eval(z)],
        ]
    }

    /// The Toeplitz matrix with column (a_n, ..., a_1); empty for n = 0.
    pub fn t_a(&self) -> LowerToeplitz {
        let n = self.n();
        LowerToeplitz::new((0..n).map(|d| self.a.coeff(n - d)).collect())
    }

    /// The Toeplitz matrix with column (b_n, ..., b_1); empty for n = 0.
    pub fn t_b(&self) -> LowerToeplitz {
        let n = self.n();
        LowerToeplitz::new((0..n).map(|d| self.b.coeff(n - d)).collect())
    }

    /// The Toeplitz matrix with column (conj a_0, ..., conj a_{n-1}).
    pub fn t_a_tilde(&self) -> LowerToeplitz {
        let n = self.n();
        LowerToeplitz::new((0..n).map(|d| self.a.coeff(d).conj()).collect())
    }

    /// The Toeplitz matrix with column (1, conj b_1, ..., conj b_{n-1}).
    pub fn t_b_tilde(&self) -> LowerToeplitz {
        let n = self.n();
        LowerToeplitz::new((0..n).map(|d| self.b.coeff(d).conj()).collect())
    }
}

/// The elementary factor contributed by one Schur parameter,
/// [[z, g], [z*conj(g), 1]], evaluated at z.
fn elementary_factor(g: C64, z: C64) -> [[C64; 2]; 2] {
    [[z, g], [z * g.conj(), C64::new(1.0, 0.0)]]
}

fn mat_mul(x: [[C64; 2]; 2], y: [[C64; 2]; 2]) -> [[C64; 2]; 2] {
    let mut out = [[C64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

/// Assembles Theta from the Schur parameters and verifies the two
/// structural identities before returning it. A failure here means the
/// recursion and the closed forms disagree beyond round-off, which is a
/// bug or catastrophically bad data, never a caller mistake.
pub fn build_theta(params: &SchurParams, tols: &Tolerances) -> Result<ThetaMatrix> {
    let (a, b) = build_ab(params);
    let n = params.gammas().len() - 1;
    let a_sharp = a.reflect(n, tols.zero_tol)?;
    let b_sharp = b.reflect(n, tols.zero_tol)?;
    let theta = ThetaMatrix { a, b, a_sharp, b_sharp, gammas: params.clone() };

    // determinant identity: B*B# - A*A# = z^n * prod (1 - |gamma_j|^2)
    let prod: f64 = params.gammas().iter().map(|g| 1.0 - g.norm_sqr()).product();
    let lhs = theta.b.mul(&theta.b_sharp).sub(&theta.a.mul(&theta.a_sharp));
    for (i, &c) in lhs.coeffs().iter().enumerate() {
        let expected = if i == n { C64::new(prod, 0.0) } else { C64::new(0.0, 0.0) };
        if (c - expected).norm() > tols.det_tol * prod {
            return Err(Error::InternalCheck(format!(
                "determinant identity residual {:.3e} at z^{i} exceeds {:.3e}",
                (c - expected).norm(),
                tols.det_tol * prod
            )));
        }
    }

    // product form: Theta(z) equals the ordered product of elementary
    // factors, checked at a handful of fixed random points in the disk
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..5 {
        let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let mut prod_mat = elementary_factor(params.gammas()[0], z);
        for &g in &params.gammas()[1..] {
            prod_mat = mat_mul(prod_mat, elementary_factor(g, z));
        }
        let direct = theta.eval(z);
        let scale = direct
            .iter()
            .flatten()
            .chain(prod_mat.iter().flatten())
            .map(|c| c.norm())
            .fold(1.0, f64::max);
        for i in 0..2 {
            for j in 0..2 {
                let err = (direct[i][j] - prod_mat[i][j]).norm();
                if err > 1e-10 * scale {
                    return Err(Error::InternalCheck(format!(
                        "product form residual {err:.3e} at entry ({i},{j})"
                    )));
                }
            }
        }
    }

    Ok(theta)
}

/// The resolvent-style Toeplitz matrix R: solves Btilde * col(R) = col(A),
/// one forward substitution for the entire column. Its column is
/// (r_n, ..., r_1); empty when n = 0 (no off-diagonal data at all).
pub fn build_r(theta: &ThetaMatrix, tols: &Tolerances) -> Result<LowerToeplitz> {
    if (theta.b.coeff(0) - C64::new(1.0, 0.0)).norm() > tols.zero_tol {
        return Err(Error::InvalidInput(format!(
            "transfer denominator not normalized: B(0) = {}",
            theta.b.coeff(0)
        )));
    }
    let tb_tilde = theta.t_b_tilde();
    let a_col = theta.t_a();
    let column = tb_tilde.solve(a_col.column(), tols.zero_tol)?;
    Ok(LowerToeplitz::new(column))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::schur_parameters;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn worked_params() -> SchurParams {
        schur_parameters(&[c(0.5, 0.0), c(0.3, 0.0)], &Tolerances::default()).unwrap()
    }

    #[test]
    fn recursion_matches_hand_computation() {
        // gammas [0.5, 0.4] -> A = 0.5 + 0.4 z, B = 1 + 0.2 z
        let (a, b) = build_ab(&worked_params());
        assert!((a.coeff(0) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((a.coeff(1) - c(0.4, 0.0)).norm() < 1e-15);
        assert!((b.coeff(0) - c(1.0, 0.0)).norm() < 1e-15);
        assert!((b.coeff(1) - c(0.2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn degenerate_single_parameter() {
        let params = SchurParams::new(vec![c(0.5, 0.0)]).unwrap();
        let theta = build_theta(&params, &Tolerances::default()).unwrap();
        // [[z, 0.5], [0.5 z, 1]]
        assert_eq!(theta.top_left().coeffs(), &[c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(theta.a().coeffs(), &[c(0.5, 0.0)]);
        assert_eq!(theta.bottom_left().coeffs(), &[c(0.0, 0.0), c(0.5, 0.0)]);
        assert_eq!(theta.b().coeffs(), &[c(1.0, 0.0)]);
        // det = 0.75 z at z = 1
        let m = theta.eval(c(1.0, 0.0));
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        assert!((det - c(0.75, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn worked_theta_entries() {
        let theta = build_theta(&worked_params(), &Tolerances::default()).unwrap();
        // top-left 0.2 z + z^2, bottom-left 0.4 z + 0.5 z^2
        let want_tl = [c(0.0, 0.0), c(0.2, 0.0), c(1.0, 0.0)];
        let want_bl = [c(0.0, 0.0), c(0.4, 0.0), c(0.5, 0.0)];
        let tl = theta.top_left();
        let bl = theta.bottom_left();
        assert_eq!(tl.len(), 3);
        assert_eq!(bl.len(), 3);
        for i in 0..3 {
            assert!((tl.coeff(i) - want_tl[i]).norm() < 1e-15);
            assert!((bl.coeff(i) - want_bl[i]).norm() < 1e-15);
        }
    }

    #[test]
    fn all_zero_parameters_give_shift_matrix() {
        // A = 0, B = 1: Theta = [[z^(n+1), 0], [0, 1]] up to padding
        let params = SchurParams::new(vec![c(0.0, 0.0); 3]).unwrap();
        let theta = build_theta(&params, &Tolerances::default()).unwrap();
        assert!(theta.a().is_zero(0.0));
        assert_eq!(theta.b().coeff(0), c(1.0, 0.0));
        let tl = theta.top_left();
        assert_eq!(tl.coeff(3), c(1.0, 0.0));
        assert!((0..3).all(|i| tl.coeff(i).norm() == 0.0));
    }

    #[test]
    fn r_column_for_worked_instance() {
        let tols = Tolerances::default();
        let theta = build_theta(&worked_params(), &tols).unwrap();
        let r = build_r(&theta, &tols).unwrap();
        assert_eq!(r.dim(), 1);
        assert!((r.column()[0] - c(0.4, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn r_is_empty_for_single_coefficient_data() {
        let tols = Tolerances::default();
        let params = SchurParams::new(vec![c(0.3, 0.4)]).unwrap();
        let theta = build_theta(&params, &tols).unwrap();
        assert_eq!(build_r(&theta, &tols).unwrap().dim(), 0);
    }

    #[test]
    fn toeplitz_identity_holds_for_worked_instance() {
        // B Btilde = A Atilde, here 0.2 * 1 = 0.4 * 0.5
        let tols = Tolerances::default();
        let theta = build_theta(&worked_params(), &tols).unwrap();
        let lhs = theta.t_b().mul(&theta.t_b_tilde()).unwrap();
        let rhs = theta.t_a().mul(&theta.t_a_tilde()).unwrap();
        for (x, y) in lhs.column().iter().zip(rhs.column().iter()) {
            assert!((x - y).norm() < 1e-15);
        }
    }
}

//! Aberth-Ehrlich simultaneous root iteration for complex polynomials.
//! All roots at once, cubic local convergence for simple roots, and every
//! root gets a Newton polish at the end. Degrees in this crate stay small
//! (a few dozen at most), so no scaling or deflation heroics are needed.

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::C64;

const MAX_ITERS: usize = 256;
const CONVERGED: f64 = 1e-13;

/// Value and derivative in one Horner pass.
fn eval_with_derivative(coeffs: &[C64], z: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All roots of the effective polynomial (coefficients above the effective
/// degree, per `zero_tol`, are ignored). Exact zero constant terms are
/// split off as exact roots at the origin first; a constant polynomial has
/// no roots and returns the empty vector.
pub fn poly_roots(p: &ComplexPoly, zero_tol: f64) -> Result<Vec<C64>> {
    let deg = match p.effective_degree_opt(zero_tol) {
        None | Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    let mut coeffs: Vec<C64> = p.coeffs()[..=deg].to_vec();

    let mut roots = Vec::with_capacity(deg);
    while coeffs.len() > 1 && coeffs[0].norm() == 0.0 {
        roots.push(C64::new(0.0, 0.0));
        coeffs.remove(0);
    }
    let m = coeffs.len() - 1;
    if m == 0 {
        return Ok(roots);
    }

    // initial guesses on a circle of Cauchy-bound radius, angles offset so
    // no guess sits on a symmetry axis of the polynomial
    let lead = coeffs[m];
    let radius = 1.0
        + coeffs[..m]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);
    let mut zs: Vec<C64> = (0..m)
        .map(|i| {
            let angle = 2.0 * std::f64::consts::PI * (i as f64) / (m as f64) + 0.4;
            C64::from_polar(radius, angle)
        })
        .collect();

    let mut converged = false;
    for _ in 0..MAX_ITERS {
        let mut max_step = 0.0f64;
        for i in 0..m {
            let (pv, dpv) = eval_with_derivative(&coeffs, zs[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let newton = if dpv.norm() > 0.0 {
                pv / dpv
            } else {
                // stationary point: nudge off it and retry next sweep
                zs[i] += C64::new(1e-6, 1e-6);
                max_step = f64::MAX;
                continue;
            };
            let repulsion: C64 = (0..m)
                .filter(|&j| j != i)
                .map(|j| (zs[i] - zs[j]).finv())
                .sum();
            let denom = C64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
            zs[i] -= step;
            max_step = max_step.max(step.norm() / (1.0 + zs[i].norm()));
        }
        if max_step < CONVERGED {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::RootsFailed { degree: m, iterations: MAX_ITERS });
    }

    // Newton polish; multiple roots converge slowly above, and this tightens
    // simple roots to machine precision
    for z in zs.iter_mut() {
        for _ in 0..3 {
            let (pv, dpv) = eval_with_derivative(&coeffs, *z);
            if dpv.norm() == 0.0 {
                break;
            }
            let step = pv / dpv;
            if step.norm() > 1.0 {
                break;
            }
            *z -= step;
        }
    }

    roots.extend(zs);
    Ok(roots)
}

/// Monic product of (z - r) over the given roots, times `lead`.
pub fn poly_from_roots(roots: &[C64], lead: C64) -> ComplexPoly {
    let mut p = ComplexPoly::constant(lead);
    for &r in roots {
        p = p.mul(&ComplexPoly::new(vec![-r, C64::new(1.0, 0.0)]));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    /// Greedy nearest matching; returns the largest pairing distance.
    fn match_sets(found: &[C64], expected: &[C64]) -> f64 {
        assert_eq!(found.len(), expected.len());
        let mut pool: Vec<C64> = found.to_vec();
        let mut worst = 0.0f64;
        for &e in expected {
            let (idx, dist) = pool
                .iter()
                .enumerate()
                .map(|(i, &f)| (i, (f - e).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            worst = worst.max(dist);
            pool.swap_remove(idx);
        }
        worst
    }

    #[test]
    fn quadratic_with_imaginary_roots() {
        let p = ComplexPoly::from_real(&[1.0, 0.0, 1.0]);
        let roots = poly_roots(&p, 1e-12).unwrap();
        assert!(match_sets(&roots, &[c(0.0, 1.0), c(0.0, -1.0)]) < 1e-12);
    }

    #[test]
    fn linear_denominator_of_worked_instance() {
        let p = ComplexPoly::from_real(&[1.0, 0.2]);
        let roots = poly_roots(&p, 1e-12).unwrap();
        assert!(match_sets(&roots, &[c(-5.0, 0.0)]) < 1e-12);
    }

    #[test]
    fn cubic_with_spread_real_roots() {
        // (z - 0.5)(z - 2)(z + 3) = 3 - 6.5 z + 0.5 z^2 + z^3
        let p = ComplexPoly::from_real(&[3.0, -6.5, 0.5, 1.0]);
        let roots = poly_roots(&p, 1e-12).unwrap();
        assert!(match_sets(&roots, &[c(0.5, 0.0), c(2.0, 0.0), c(-3.0, 0.0)]) < 1e-10);
    }

    #[test]
    fn double_root_found_with_reduced_accuracy() {
        let p = ComplexPoly::from_real(&[1.0, -2.0, 1.0]);
        let roots = poly_roots(&p, 1e-12).unwrap();
        assert!(match_sets(&roots, &[c(1.0, 0.0), c(1.0, 0.0)]) < 1e-6);
    }

    #[test]
    fn exact_origin_roots_are_split_off() {
        // z^2 (z - 2)
        let p = ComplexPoly::from_real(&[0.0, 0.0, -2.0, 1.0]);
        let roots = poly_roots(&p, 1e-12).unwrap();
        assert!(match_sets(&roots, &[c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)]) < 1e-12);
    }

    #[test]
    fn constants_have_no_roots() {
        assert!(poly_roots(&ComplexPoly::one(), 1e-12).unwrap().is_empty());
        assert!(poly_roots(&ComplexPoly::zero(), 1e-12).unwrap().is_empty());
    }

    #[test]
    fn random_root_sets_are_recovered() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let deg = rng.gen_range(1..=12);
            let expected: Vec<C64> = (0..deg)
                .map(|_| C64::from_polar(rng.gen_range(0.2..2.5), rng.gen_range(0.0..6.28)))
                .collect();
            let p = poly_from_roots(&expected, c(1.0, 0.0));
            let roots = poly_roots(&p, 1e-12).unwrap();
            assert!(
                match_sets(&roots, &expected) < 1e-8,
                "worst pairing distance too large for degree {deg}"
            );
        }
    }

    #[test]
    fn reconstruction_inverts_factoring() {
        let roots = [c(1.0, 1.0), c(-0.5, 0.0)];
        let p = poly_from_roots(&roots, c(2.0, 0.0));
        // 2 (z - (1+i)) (z + 0.5) = 2 z^2 + (-1 - 2i) z + (-1 - i)
        assert!((p.coeff(0) - c(-1.0, -1.0)).norm() < 1e-15);
        assert!((p.coeff(1) - c(-1.0, -2.0)).norm() < 1e-15);
        assert!((p.coeff(2) - c(2.0, 0.0)).norm() < 1e-15);
    }
}

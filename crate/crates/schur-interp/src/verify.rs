//! Independent verification: Taylor matching, membership, degree
//! accounting, parameter extraction by the backward recursion, and a
//! statistical harness for the one-step degree law.
//!
//! Verification deliberately avoids the construction path: it uses only
//! polynomial/rational primitives plus the membership test, so a bug in
//! the solver cannot certify its own output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::params::schur_membership;
use crate::poly::ComplexPoly;
use crate::rational::RationalFn;
use crate::schur::{backward_schur_step, forward_schur_step, SchurParams};
use crate::solve::ProblemInstance;
use crate::C64;

/// Everything a caller needs to accept or reject a candidate solution.
/// `pass` is the conjunction of the four defining conditions; `reasons`
/// lists each failed condition in plain words.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub taylor_residual: f64,
    pub circle_max: f64,
    pub nearest_pole: f64,
    pub degree: usize,
    pub degree_budget_ok: bool,
    pub roundtrip_residual: Option<f64>,
    pub pass: bool,
    pub reasons: Vec<String>,
}

/// Checks a candidate against the instance: Taylor coefficients within
/// taylor_tol (relative to max(1, largest |c_j|)), Schur membership of the
/// reduced representative, and McMillan degree within budget. Reduction
/// runs first so that removable factors neither inflate the degree nor
/// fake a boundary pole. Never errors: indeterminate checks fail with a
/// reason.
pub fn verify_solution(
    f: &RationalFn,
    instance: &ProblemInstance,
    tols: &Tolerances,
) -> VerificationReport {
    let mut reasons = Vec::new();

    let reduction = f.reduce(tols);
    let g = reduction.f;
    if !reduction.complete {
        reasons.push("common-factor reduction was incomplete; the degree may be overstated".into());
    }

    let n = instance.n();
    let scale = instance
        .data
        .iter()
        .map(|c| c.norm())
        .fold(1.0f64, f64::max);
    let taylor_residual = match g.taylor(n + 1, tols) {
        Ok(t) => t
            .iter()
            .zip(instance.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max)
            / scale,
        Err(_) => {
            reasons.push("candidate has a pole at the origin".into());
            f64::INFINITY
        }
    };
    if taylor_residual > tols.taylor_tol {
        reasons.push(format!(
            "Taylor mismatch: relative residual {taylor_residual:.3e} exceeds {:.1e}",
            tols.taylor_tol
        ));
    }

    let (circle_max, nearest_pole) = match schur_membership(&g, tols) {
        Ok(m) => (m.circle_max, m.nearest_pole),
        Err(_) => {
            reasons.push("denominator root search failed; membership is indeterminate".into());
            (f64::INFINITY, 0.0)
        }
    };
    if circle_max > 1.0 + tols.schur_tol {
        reasons.push(format!(
            "boundary modulus {circle_max:.6} exceeds 1 within tolerance",
        ));
    }
    if nearest_pole < 1.0 + tols.pole_margin {
        reasons.push(format!(
            "pole of modulus {nearest_pole:.6} inside or on the unit circle",
        ));
    }

    let degree = g.mcmillan_degree(tols);
    let degree_budget_ok = degree <= instance.k;
    if !degree_budget_ok {
        reasons.push(format!("degree {degree} exceeds the budget {}", instance.k));
    }

    let pass = taylor_residual <= tols.taylor_tol
        && circle_max <= 1.0 + tols.schur_tol
        && nearest_pole >= 1.0 + tols.pole_margin
        && degree_budget_ok;

    VerificationReport {
        taylor_residual,
        circle_max,
        nearest_pole,
        degree,
        degree_budget_ok,
        roundtrip_residual: None,
        pass,
        reasons,
    }
}

/// Strips the given reflection coefficients off `f` one backward step at a
/// time and returns the terminal parameter E'. Fails (with the offending
/// stage's residual) when some intermediate value at the origin does not
/// match its coefficient — the signature of a non-solution.
pub fn roundtrip_extract(
    f: &RationalFn,
    params: &SchurParams,
    tols: &Tolerances,
) -> Result<RationalFn> {
    let mut cur = f.clone();
    for &g in params.gammas() {
        cur = backward_schur_step(&cur, g, tols)?;
    }
    Ok(cur)
}

/// Maximum pointwise deviation between two rational functions over a fixed
/// seeded sample of the 0.9-disk; the canonical way to compare candidates
/// whose coefficient representations differ by a common factor.
pub fn pointwise_distance(f: &RationalFn, g: &RationalFn, points: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..points {
        let z = C64::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..std::f64::consts::TAU));
        let d = (f.eval(z) - g.eval(z)).norm();
        if d.is_finite() {
            worst = worst.max(d);
        } else {
            return f64::INFINITY;
        }
    }
    worst
}

/// Sample counts from the degree-law harness. `case1`/`case2`/`case3`
/// classify each draw by the gap between the inner function's denominator
/// and numerator degrees (greater than one / less than one / exactly one);
/// jumps count samples whose degree rose by one.
#[derive(Debug, Clone, Copy, Default)]
pub struct DegreeLawStats {
    pub samples: usize,
    pub case1: usize,
    pub case2: usize,
    pub case3: usize,
    pub degree_jumps: usize,
    pub degree_keeps: usize,
    pub chains_checked: usize,
}

fn effective_pair_degrees(f: &RationalFn, tol: f64) -> (Option<usize>, usize) {
    (
        f.num().effective_degree_opt(tol),
        f.den().effective_degree_opt(tol).unwrap_or(0),
    )
}

/// True when the function vanishes at infinity: numerator degree strictly
/// below denominator degree (a zero numerator counts as vanishing).
fn at_infinity_zero(f: &RationalFn, tol: f64) -> bool {
    match effective_pair_degrees(f, tol) {
        (None, _) => true,
        (Some(dn), dd) => dn < dd,
    }
}

/// True when the value at infinity equals 1/conj(gamma): for nonzero gamma
/// this needs equal degrees and the leading-coefficient ratio to match
/// within 1e-9; for gamma = 0 the value "at infinity equals infinity",
/// i.e. numerator degree strictly above denominator degree.
fn at_infinity_matches_inverse(f: &RationalFn, gamma: C64, tol: f64) -> bool {
    let (dn, dd) = effective_pair_degrees(f, tol);
    let Some(dn) = dn else {
        return false; // zero function: equals neither a nonzero value nor infinity
    };
    if gamma.norm() <= tol {
        return dn > dd;
    }
    if dn != dd {
        return false;
    }
    let a = f.num().coeff(dn);
    let b = f.den().coeff(dd);
    (gamma.conj() * a - b).norm() <= 1e-9 * a.norm().max(b.norm())
}

fn pair_degree(f: &RationalFn, tol: f64) -> usize {
    let (dn, dd) = effective_pair_degrees(f, tol);
    dn.unwrap_or(0).max(dd)
}

/// Draws a random rational Schur function as a coprime pair. Most draws
/// compose forward steps over random constants (Schur by construction),
/// which always yields numerator degree >= denominator degree; some draws
/// are strictly proper monomial fractions a z^p / (1 + ...) instead, so
/// the denominator-heavy degree gaps also get exercised. Occasionally the
/// zero function.
fn random_schur_fn(rng: &mut ChaCha8Rng) -> RationalFn {
    use std::f64::consts::TAU;
    let branch = rng.gen_range(0u8..8);
    if branch == 0 {
        return RationalFn::constant(C64::new(0.0, 0.0));
    }
    if branch <= 3 {
        // a z^p / (1 + d_1 z + ... + d_m z^m) with p < m. Keeping
        // sum |d_i| <= 0.5 leaves the denominator zero-free on the closed
        // disk, and |a| <= 0.45 then bounds the modulus by 0.9.
        let m = rng.gen_range(1usize..=3);
        let p = rng.gen_range(0usize..m);
        let cap = 0.5 / m as f64;
        let mut den = vec![C64::new(0.0, 0.0); m + 1];
        den[0] = C64::new(1.0, 0.0);
        for slot in den.iter_mut().skip(1) {
            *slot = C64::from_polar(rng.gen_range(0.2 * cap..cap), rng.gen_range(0.0..TAU));
        }
        let mut num = vec![C64::new(0.0, 0.0); p + 1];
        num[p] = C64::from_polar(rng.gen_range(0.05..0.45), rng.gen_range(0.0..TAU));
        return RationalFn::new(ComplexPoly::new(num), ComplexPoly::new(den)).unwrap();
    }
    let start = C64::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..TAU));
    let mut f = RationalFn::constant(start);
    for _ in 0..rng.gen_range(0usize..4) {
        let g = C64::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..TAU));
        f = forward_schur_step(&f, g);
    }
    f
}

fn random_gamma(rng: &mut ChaCha8Rng) -> C64 {
    if rng.gen_range(0u8..8) == 0 {
        C64::new(0.0, 0.0)
    } else {
        C64::from_polar(rng.gen_range(0.05..0.9), rng.gen_range(0.0..std::f64::consts::TAU))
    }
}

/// Statistical check of the one-step degree law. For each sample it draws
/// an inner Schur function and a reflection coefficient, applies one
/// forward step, and asserts: the degree moves by 0 or 1; the degree is
/// preserved exactly when the inner function vanishes at infinity, and
/// exactly when the outer value at infinity misses 1/conj(gamma); and on
/// multi-step chains, a degree jump at one stage forces jumps at every
/// outer stage while vanishing-at-infinity propagates inward with frozen
/// degree. Any violation is an error carrying the offending sample.
pub fn degree_law_probe(samples: usize, seed: u64, tols: &Tolerances) -> Result<DegreeLawStats> {
    if samples == 0 {
        return Err(Error::InvalidInput("the probe needs at least one sample".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = DegreeLawStats::default();
    let tol = tols.zero_tol;

    for sample in 0..samples {
        let f1 = random_schur_fn(&mut rng);
        let gamma = random_gamma(&mut rng);
        let f = forward_schur_step(&f1, gamma);

        let deg_inner = pair_degree(&f1, tol);
        let deg_outer = pair_degree(&f, tol);
        let vanishes = at_infinity_zero(&f1, tol);
        let outer_hits_inverse = at_infinity_matches_inverse(&f, gamma, tol);

        let fail = |what: &str| -> Error {
            Error::InternalCheck(format!(
                "degree law violated ({what}) at sample {sample}: inner {f1}, \
                 gamma {gamma}, outer {f}"
            ))
        };

        if deg_outer != deg_inner && deg_outer != deg_inner + 1 {
            return Err(fail("dichotomy"));
        }
        let kept = deg_outer == deg_inner;
        if kept != vanishes {
            return Err(fail("vanishing-at-infinity equivalence"));
        }
        if kept != !outer_hits_inverse {
            return Err(fail("value-at-infinity equivalence"));
        }

        // classify by the inner denominator/numerator degree gap
        let (dn, dd) = effective_pair_degrees(&f1, tol);
        match dn {
            None => stats.case1 += 1,
            Some(dn) => {
                if dd > dn + 1 {
                    stats.case1 += 1;
                } else if dd < dn + 1 {
                    stats.case2 += 1;
                } else {
                    stats.case3 += 1;
                }
            }
        }
        if kept {
            stats.degree_keeps += 1;
        } else {
            stats.degree_jumps += 1;
        }
        stats.samples += 1;

        // every eighth sample: a chain, outermost first
        if sample % 8 == 0 {
            let mut chain: Vec<RationalFn> = vec![random_schur_fn(&mut rng)];
            for _ in 0..rng.gen_range(3usize..6) {
                let g = random_gamma(&mut rng);
                let next = forward_schur_step(chain.last().unwrap(), g);
                chain.push(next);
            }
            chain.reverse();
            let degs: Vec<usize> = chain.iter().map(|f| pair_degree(f, tol)).collect();
            let zeros: Vec<bool> = chain.iter().map(|f| at_infinity_zero(f, tol)).collect();
            for i in 0..chain.len() - 1 {
                if degs[i] == degs[i + 1] + 1 {
                    for j in 0..i {
                        if degs[j] != degs[j + 1] + 1 {
                            return Err(Error::InternalCheck(format!(
                                "chain jump at stage {i} did not propagate to stage {j} \
                                 (degrees {degs:?}, sample {sample})"
                            )));
                        }
                    }
                }
                if zeros[i] {
                    for j in i + 1..chain.len() {
                        if !zeros[j] || degs[j] != degs[i] {
                            return Err(Error::InternalCheck(format!(
                                "vanishing at stage {i} did not freeze stage {j} \
                                 (degrees {degs:?}, flags {zeros:?}, sample {sample})"
                            )));
                        }
                    }
                }
            }
            stats.chains_checked += 1;
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ComplexPoly;
    use crate::solve::ProblemInstance;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn tols() -> Tolerances {
        Tolerances::default()
    }

    fn worked_solution() -> RationalFn {
        RationalFn::new(
            ComplexPoly::from_real(&[0.5, 0.4]),
            ComplexPoly::from_real(&[1.0, 0.2]),
        )
        .unwrap()
    }

    #[test]
    fn constant_solution_passes() {
        let instance =
            ProblemInstance::new(vec![c(0.3, 0.0), c(0.0, 0.0), c(0.0, 0.0)], 2).unwrap();
        let report = verify_solution(&RationalFn::constant(c(0.3, 0.0)), &instance, &tols());
        assert!(report.pass, "reasons: {:?}", report.reasons);
        assert_eq!(report.degree, 0);
        assert!(report.taylor_residual < 1e-15);
    }

    #[test]
    fn worked_solution_passes_budget_one() {
        let instance = ProblemInstance::new(vec![c(0.5, 0.0), c(0.3, 0.0)], 1).unwrap();
        let report = verify_solution(&worked_solution(), &instance, &tols());
        assert!(report.pass, "reasons: {:?}", report.reasons);
        assert_eq!(report.degree, 1);
        assert!(report.degree_budget_ok);
    }

    #[test]
    fn perturbed_data_fails_with_taylor_reason() {
        let instance = ProblemInstance::new(vec![c(0.5, 0.0), c(0.31, 0.0)], 1).unwrap();
        let report = verify_solution(&worked_solution(), &instance, &tols());
        assert!(!report.pass);
        assert!((report.taylor_residual - 0.01).abs() < 1e-12);
        assert!(report.reasons.iter().any(|r| r.contains("Taylor")));
    }

    #[test]
    fn interior_pole_fails_membership() {
        let instance = ProblemInstance::new(vec![c(0.5, 0.0), c(0.3, 0.0)], 5).unwrap();
        let f = RationalFn::new(
            ComplexPoly::from_real(&[0.25, 0.0]),
            ComplexPoly::from_real(&[0.5, 1.0]),
        )
        .unwrap();
        let report = verify_solution(&f, &instance, &tols());
        assert!(!report.pass);
        assert!(report.reasons.iter().any(|r| r.contains("pole")));
    }

    #[test]
    fn degree_over_budget_fails() {
        let instance = ProblemInstance::new(vec![c(0.5, 0.0), c(0.3, 0.0)], 0).unwrap();
        let report = verify_solution(&worked_solution(), &instance, &tols());
        assert!(!report.pass);
        assert!(!report.degree_budget_ok);
        assert_eq!(report.degree, 1);
    }

    #[test]
    fn reducible_representation_is_reduced_before_degree_accounting() {
        // (0.3 - 0.3z)/(1 - z): the function is the constant 0.3
        let f = RationalFn::new(
            ComplexPoly::from_real(&[0.3, -0.3]),
            ComplexPoly::from_real(&[1.0, -1.0]),
        )
        .unwrap();
        let instance = ProblemInstance::new(vec![c(0.3, 0.0), c(0.0, 0.0)], 0).unwrap();
        let report = verify_solution(&f, &instance, &tols());
        assert!(report.pass, "reasons: {:?}", report.reasons);
        assert_eq!(report.degree, 0);
    }

    #[test]
    fn extraction_recovers_worked_parameter() {
        let t = tols();
        let params = SchurParams::new(vec![c(0.5, 0.0), c(0.4, 0.0)]).unwrap();
        // the budget-1 candidate built from E = -0.4/(1.5 + z)
        let f = RationalFn::new(
            ComplexPoly::from_real(&[0.75, 1.02]),
            ComplexPoly::from_real(&[1.5, 1.14]),
        )
        .unwrap();
        let e = roundtrip_extract(&f, &params, &t).unwrap();
        let expected = RationalFn::new(
            ComplexPoly::from_real(&[-0.4]),
            ComplexPoly::from_real(&[1.5, 1.0]),
        )
        .unwrap();
        assert!(pointwise_distance(&e, &expected, 50, 11) < 1e-10);
    }

    #[test]
    fn extraction_of_central_solution_is_zero() {
        let t = tols();
        let params = SchurParams::new(vec![c(0.5, 0.0), c(0.4, 0.0)]).unwrap();
        let e = roundtrip_extract(&worked_solution(), &params, &t).unwrap();
        let zero = RationalFn::constant(c(0.0, 0.0));
        assert!(pointwise_distance(&e, &zero, 50, 12) < 1e-12);
    }

    #[test]
    fn extraction_rejects_wrong_origin_value() {
        let t = tols();
        let params = SchurParams::new(vec![c(0.25, 0.0), c(0.4, 0.0)]).unwrap();
        let err = roundtrip_extract(&worked_solution(), &params, &t).unwrap_err();
        assert!(matches!(err, Error::CannotStrip { .. }));
    }

    #[test]
    fn probe_reports_no_violations() {
        let stats = degree_law_probe(400, 21, &tols()).unwrap();
        assert_eq!(stats.samples, 400);
        assert!(stats.case1 > 0);
        assert!(stats.case2 > 0);
        assert!(stats.case3 > 0);
        assert!(stats.degree_jumps > 0);
        assert!(stats.degree_keeps > 0);
        assert!(stats.chains_checked >= 400 / 8);
    }

    #[test]
    fn probe_classifies_zero_inner_function_by_gap() {
        // inner f identically zero, gamma = 0.5: outer is the constant 0.5,
        // degree kept at 0, classified with the large-gap cases
        let t = tols();
        let zero = RationalFn::constant(c(0.0, 0.0));
        let f = forward_schur_step(&zero, c(0.5, 0.0));
        assert_eq!(pair_degree(&f, t.zero_tol), 0);
        assert!(at_infinity_zero(&zero, t.zero_tol));
        assert!(!at_infinity_matches_inverse(&f, c(0.5, 0.0), t.zero_tol));
    }

    #[test]
    fn shift_inner_function_jumps_degree() {
        // inner f(z) = z, gamma = 0.5: degree jumps to 2 and the outer
        // leading-coefficient ratio equals 1/conj(gamma)
        let t = tols();
        let inner = RationalFn::new(
            ComplexPoly::from_real(&[0.0, 1.0]),
            ComplexPoly::one(),
        )
        .unwrap();
        let f = forward_schur_step(&inner, c(0.5, 0.0));
        assert_eq!(pair_degree(&f, t.zero_tol), 2);
        assert!(at_infinity_matches_inverse(&f, c(0.5, 0.0), t.zero_tol));
    }
}

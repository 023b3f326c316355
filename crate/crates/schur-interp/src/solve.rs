//! End-to-end solving: one pass of the coefficient recursion and transfer
//! matrix, then regime dispatch over the degree budget, candidate
//! parameter generation, assembly, and independent verification of every
//! returned solution.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::hankel::hankel_rank;
use crate::params::{
    constraint_residuals, make_param_k_above_n, make_param_k_below_n, make_param_k_equal_n,
    schur_membership, AboveInput, Alpha0Strategy, ParameterSpec,
};
use crate::rational::RationalFn;
use crate::schur::{check_admissible, DataClass};
use crate::theta::{build_r, build_theta, ThetaMatrix};
use crate::toeplitz::LowerToeplitz;
use crate::verify::{pointwise_distance, verify_solution, VerificationReport};
use crate::C64;

/// Candidates per below-budget nullspace search attempt.
const SEARCH_BUDGET: usize = 64;
/// Construction attempts allowed per requested solution before giving up
/// on producing `count` distinct ones.
const ATTEMPTS_PER_SOLUTION: usize = 8;
/// Tolerance for the internal consistency check that structured
/// parameters satisfy their defining linear identities.
const CONSTRAINT_CHECK_TOL: f64 = 1e-8;
/// Two candidates are the same function when they agree pointwise to this
/// tolerance on the dedup sample.
const DISTINCT_TOL: f64 = 1e-8;

/// The data of one problem: Taylor coefficients c_0..c_n and the degree
/// budget k.
#[derive(Debug, Clone)]
pub struct ProblemInstance {
    pub data: Vec<C64>,
    pub k: usize,
}

impl ProblemInstance {
    pub fn new(data: Vec<C64>, k: usize) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::InvalidInput(
                "at least one Taylor coefficient is required".into(),
            ));
        }
        Ok(ProblemInstance { data, k })
    }

    /// Index of the last prescribed coefficient.
    pub fn n(&self) -> usize {
        self.data.len() - 1
    }
}

/// One verified solution with its generating parameter and diagnostics.
#[derive(Debug, Clone)]
pub struct Solution {
    pub f: RationalFn,
    pub parameter: ParameterSpec,
    pub degree: usize,
    pub report: VerificationReport,
}

/// Everything the solve produced: the shared Steps-1..3 artifacts, the
/// verified solutions, and human-readable notes (feasibility thresholds,
/// search outcomes).
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub gammas: Vec<C64>,
    pub pick_min_eigenvalue: f64,
    pub hankel_rank_q: usize,
    pub theta: ThetaMatrix,
    pub r: LowerToeplitz,
    pub solutions: Vec<Solution>,
    pub reports: Vec<String>,
    /// True when the empty result is a proven impossibility rather than a
    /// search miss.
    pub theoretically_infeasible: bool,
}

/// Applies the linear-fractional transform: f = (zB# N_E + A D_E) /
/// (zA# N_E + B D_E). The output pair is coprime by construction (the
/// factor-product determinant identity leaves z = 0 as the only possible
/// common root, excluded because D_E(0) != 0), so no reduction is applied;
/// only near-cancelled leading coefficients are truncated, realizing the
/// degree drop that constrained parameters are built for. The result is
/// normalized to den(0) = 1.
pub fn apply_lft(theta: &ThetaMatrix, e: &RationalFn, tols: &Tolerances) -> Result<RationalFn> {
    let m = schur_membership(e, tols)?;
    if !m.is_schur {
        return Err(Error::RejectedParameter {
            circle_max: m.circle_max,
            nearest_pole: m.nearest_pole,
        });
    }
    let num = theta
        .top_left()
        .mul(e.num())
        .add(&theta.a().mul(e.den()))
        .truncate_trailing(tols.zero_tol);
    let den = theta
        .bottom_left()
        .mul(e.num())
        .add(&theta.b().mul(e.den()))
        .truncate_trailing(tols.zero_tol);
    let d0 = den.eval(C64::new(0.0, 0.0));
    if d0.norm() <= tols.zero_tol * den.max_coeff_norm().max(1.0) {
        return Err(Error::PoleAtOrigin);
    }
    let s = C64::new(1.0, 0.0) / d0;
    RationalFn::new(num.scale(s), den.scale(s))
}

fn random_unit(rng: &mut ChaCha8Rng, max_modulus: f64) -> C64 {
    C64::from_polar(
        rng.gen_range(0.0..max_modulus),
        rng.gen_range(0.0..std::f64::consts::TAU),
    )
}

fn random_vec(rng: &mut ChaCha8Rng, len: usize, amp: f64) -> Vec<C64> {
    (0..len)
        .map(|_| C64::new(rng.gen_range(-amp..amp), rng.gen_range(-amp..amp)))
        .collect()
}

/// Candidate parameters for k = n: the all-zero tail (central solution)
/// first, then random tails.
fn candidate_equal_n(
    r: &LowerToeplitz,
    idx: usize,
    rng: &mut ChaCha8Rng,
    alpha0: Alpha0Strategy,
    tols: &Tolerances,
) -> Result<ParameterSpec> {
    let n = r.dim();
    let tail = if idx == 0 {
        vec![C64::new(0.0, 0.0); n]
    } else {
        random_vec(rng, n, 0.8)
    };
    make_param_k_equal_n(r, &tail, alpha0, tols)
}

/// Candidate parameters for k > n: the zero parameter (central) first,
/// then alternately small free parameters (which push the degree up to
/// n + 1 + deg E) and constrained long-tail parameters (which keep it
/// at most k while exercising the full coefficient space).
fn candidate_above_n(
    r: &LowerToeplitz,
    k: usize,
    idx: usize,
    rng: &mut ChaCha8Rng,
    alpha0: Alpha0Strategy,
    tols: &Tolerances,
) -> Result<ParameterSpec> {
    let n = r.dim();
    if idx == 0 {
        return make_param_k_above_n(
            r,
            k,
            AboveInput::Free(RationalFn::constant(C64::new(0.0, 0.0))),
            tols,
        );
    }
    if idx % 2 == 1 {
        let headroom = k - n - 1;
        let e = if headroom >= 1 && idx % 4 == 3 {
            // a degree-one polynomial parameter: |a| + |b| < 1 keeps it Schur
            let a = random_unit(rng, 0.45);
            let b = C64::from_polar(
                rng.gen_range(0.1..(0.9 - a.norm())),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
            RationalFn::new(
                crate::poly::ComplexPoly::new(vec![a, b]),
                crate::poly::ComplexPoly::one(),
            )?
        } else {
            RationalFn::constant(C64::from_polar(
                rng.gen_range(0.2..0.8),
                rng.gen_range(0.0..std::f64::consts::TAU),
            ))
        };
        make_param_k_above_n(r, k, AboveInput::Free(e), tols)
    } else {
        let alpha_free = random_vec(rng, k, 0.6);
        let beta_free = random_vec(rng, k - n, 0.3);
        make_param_k_above_n(
            r,
            k,
            AboveInput::Constrained { alpha_free, beta_free, strategy: alpha0 },
            tols,
        )
    }
}

/// Solves the instance: checks strict admissibility, runs the recursion
/// and transfer-matrix construction once, then generates, assembles, and
/// verifies candidate solutions per the budget regime. Returns up to
/// `count` distinct verified solutions; for k >= n the zero-parameter
/// central solution always comes first. For k < n an empty list is
/// accompanied by reports stating either a proven impossibility or the
/// exhausted search budget.
pub fn solve_rsp(
    instance: &ProblemInstance,
    count: usize,
    seed: u64,
    alpha0: Alpha0Strategy,
    tols: &Tolerances,
) -> Result<SolveOutcome> {
    if count == 0 {
        return Err(Error::InvalidInput("count must be at least 1".into()));
    }
    let adm = check_admissible(&instance.data, tols)?;
    match adm.class {
        DataClass::StrictlyAdmissible => {}
        DataClass::Singular => {
            return Err(Error::SingularData { min_eig: adm.min_pick_eigenvalue })
        }
        DataClass::Indefinite => {
            return Err(Error::IndefiniteData { min_eig: adm.min_pick_eigenvalue })
        }
    }
    let params = adm.gammas.clone().ok_or_else(|| {
        Error::InternalCheck("admissible data must yield reflection coefficients".into())
    })?;
    let theta = build_theta(&params, tols)?;
    let r = build_r(&theta, tols)?;
    let q = hankel_rank(&instance.data, tols);
    let n = instance.n();
    let k = instance.k;

    let mut outcome = SolveOutcome {
        gammas: params.gammas().to_vec(),
        pick_min_eigenvalue: adm.min_pick_eigenvalue,
        hankel_rank_q: q,
        theta,
        r,
        solutions: Vec::new(),
        reports: Vec::new(),
        theoretically_infeasible: false,
    };

    if k < n {
        outcome.reports.push(format!(
            "complexity thresholds from the interior Hankel rank q = {q}: no interpolant has \
             exact degree below {q} or in ({q}, {}]; infinitely many exist above {}",
            n - q,
            n - q
        ));
        if k < q {
            outcome.reports.push(format!(
                "budget k = {k} is below q = {q}: the problem has no solutions"
            ));
            outcome.theoretically_infeasible = true;
            return Ok(outcome);
        }
        if q < k && k <= n - q {
            // budgets in the gap are only ever served by the unique
            // exact-degree-q interpolant, so the search below either finds
            // that one function or nothing
            outcome.reports.push(format!(
                "any solution within budget k = {k} must have exact degree {q}"
            ));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = count * ATTEMPTS_PER_SOLUTION + ATTEMPTS_PER_SOLUTION;
    let mut rejected = 0usize;

    for idx in 0..attempts {
        if outcome.solutions.len() >= count {
            break;
        }
        let made = if k == n {
            candidate_equal_n(&outcome.r, idx, &mut rng, alpha0, tols)
        } else if k > n {
            candidate_above_n(&outcome.r, k, idx, &mut rng, alpha0, tols)
        } else {
            // k < n, feasible or unknown: seeded nullspace search, varying
            // the stream per attempt
            make_param_k_below_n(&outcome.r, k, SEARCH_BUDGET, seed.wrapping_add(idx as u64), tols)
        };
        let spec = match made {
            Ok(s) => s,
            Err(Error::InfeasibleNullspace { smallest_sv }) if k < n => {
                // the linear system every degree-<=k interpolant must solve
                // has full column rank, which certifies emptiness
                outcome.reports.push(format!(
                    "budget k = {k} is infeasible: the degree-constraint system has a trivial \
                     nullspace (smallest singular value {smallest_sv:.3e})"
                ));
                outcome.theoretically_infeasible = true;
                return Ok(outcome);
            }
            Err(Error::SearchExhausted { .. }) if k < n => {
                rejected += 1;
                if outcome.solutions.is_empty() && idx + 1 >= ATTEMPTS_PER_SOLUTION {
                    break; // repeated exhaustion with no hits: stop early
                }
                continue;
            }
            Err(Error::RejectedParameter { .. }) => {
                rejected += 1;
                continue;
            }
            Err(e) => return Err(e),
        };

        // structured parameters must satisfy their defining identities
        if let Some((r1, r2)) = constraint_residuals(&outcome.theta, &spec)? {
            if r1 > CONSTRAINT_CHECK_TOL || r2 > CONSTRAINT_CHECK_TOL {
                return Err(Error::InternalCheck(format!(
                    "constructed parameter violates its linear constraints: \
                     residuals {r1:.3e}, {r2:.3e}"
                )));
            }
        }

        let f = apply_lft(&outcome.theta, &spec.e, tols)?;
        let report = verify_solution(&f, instance, tols);
        if !report.pass {
            if idx == 0 && k >= n {
                return Err(Error::InternalCheck(format!(
                    "the central solution failed verification: {:?}",
                    report.reasons
                )));
            }
            rejected += 1;
            continue;
        }
        let duplicate = outcome
            .solutions
            .iter()
            .any(|s| pointwise_distance(&s.f, &f, 24, 0x0d5d) < DISTINCT_TOL);
        if duplicate {
            continue;
        }
        outcome.solutions.push(Solution {
            degree: report.degree,
            parameter: spec,
            report,
            f,
        });
    }

    if outcome.solutions.is_empty() {
        outcome.reports.push(format!(
            "search exhausted: no parameter passed membership within the budget \
             ({SEARCH_BUDGET} candidates per attempt); this proves nothing about existence"
        ));
    } else {
        outcome.reports.push(format!(
            "returned {} verified solution(s); {} candidate(s) rejected along the way",
            outcome.solutions.len(),
            rejected
        ));
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ComplexPoly;
    use crate::schur::SchurParams;
    use crate::theta::build_theta;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn tols() -> Tolerances {
        Tolerances::default()
    }

    fn worked_theta() -> ThetaMatrix {
        let params = SchurParams::new(vec![c(0.5, 0.0), c(0.4, 0.0)]).unwrap();
        build_theta(&params, &tols()).unwrap()
    }

    #[test]
    fn lft_with_zero_parameter_is_central() {
        let theta = worked_theta();
        let f = apply_lft(&theta, &RationalFn::constant(c(0.0, 0.0)), &tols()).unwrap();
        assert_eq!(f.num().coeffs(), &[c(0.5, 0.0), c(0.4, 0.0)]);
        assert_eq!(f.den().coeffs(), &[c(1.0, 0.0), c(0.2, 0.0)]);
    }

    #[test]
    fn lft_with_worked_step4_parameter() {
        // E = -0.4/(1.5 + z) gives the raw pair (0.75 + 1.02z, 1.5 + 1.14z),
        // normalized here to den(0) = 1
        let theta = worked_theta();
        let e = RationalFn::new(
            ComplexPoly::from_real(&[-0.4]),
            ComplexPoly::from_real(&[1.5, 1.0]),
        )
        .unwrap();
        let f = apply_lft(&theta, &e, &tols()).unwrap();
        let num = f.num().coeffs();
        let den = f.den().coeffs();
        assert_eq!(num.len(), 2, "degree must drop to 1, got {f}");
        assert!((num[0] - c(0.5, 0.0)).norm() < 1e-14);
        assert!((num[1] - c(0.68, 0.0)).norm() < 1e-14);
        assert!((den[0] - c(1.0, 0.0)).norm() < 1e-14);
        assert!((den[1] - c(0.76, 0.0)).norm() < 1e-14);
        let t = f.taylor(2, &tols()).unwrap();
        assert!((t[0] - c(0.5, 0.0)).norm() < 1e-14);
        assert!((t[1] - c(0.3, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn lft_rejects_non_schur_parameter() {
        let theta = worked_theta();
        let e = RationalFn::constant(c(1.5, 0.0));
        assert!(matches!(
            apply_lft(&theta, &e, &tols()),
            Err(Error::RejectedParameter { .. })
        ));
    }

    #[test]
    fn lft_with_nonzero_constant_jumps_degree() {
        let theta = worked_theta();
        let f = apply_lft(&theta, &RationalFn::constant(c(0.3, 0.0)), &tols()).unwrap();
        assert_eq!(f.mcmillan_degree(&tols()), 2);
        let t = f.taylor(2, &tols()).unwrap();
        assert!((t[0] - c(0.5, 0.0)).norm() < 1e-12);
        assert!((t[1] - c(0.3, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn solve_exact_budget_returns_central_first_and_distinct_extras() {
        let instance = ProblemInstance::new(vec![c(0.5, 0.0), c(0.3, 0.0)], 1).unwrap();
        let out = solve_rsp(&instance, 3, 7, Alpha0Strategy::SufficientBound, &tols()).unwrap();
        assert!(out.solutions.len() >= 2, "got {} solutions", out.solutions.len());
        let first = &out.solutions[0];
        assert!((first.f.num().coeff(0) - c(0.5, 0.0)).norm() < 1e-14);
        assert!((first.f.num().coeff(1) - c(0.4, 0.0)).norm() < 1e-14);
        assert!((first.f.den().coeff(1) - c(0.2, 0.0)).norm() < 1e-14);
        for s in &out.solutions {
            assert!(s.report.pass);
            assert!(s.degree <= 1);
        }
        for i in 0..out.solutions.len() {
            for j in i + 1..out.solutions.len() {
                assert!(
                    pointwise_distance(&out.solutions[i].f, &out.solutions[j].f, 24, 5) > 1e-8
                );
            }
        }
    }

    #[test]
    fn solve_is_deterministic() {
        let instance = ProblemInstance::new(vec![c(0.5, 0.0), c(0.3, 0.0)], 1).unwrap();
        let a = solve_rsp(&instance, 3, 42, Alpha0Strategy::SufficientBound, &tols()).unwrap();
        let b = solve_rsp(&instance, 3, 42, Alpha0Strategy::SufficientBound, &tols()).unwrap();
        assert_eq!(a.solutions.len(), b.solutions.len());
        for (x, y) in a.solutions.iter().zip(b.solutions.iter()) {
            assert_eq!(x.f.num().coeffs(), y.f.num().coeffs());
            assert_eq!(x.f.den().coeffs(), y.f.den().coeffs());
        }
    }

    #[test]
    fn solve_above_budget_realizes_the_degree_jump() {
        let instance = ProblemInstance::new(vec![c(0.5, 0.0), c(0.3, 0.0)], 2).unwrap();
        let out = solve_rsp(&instance, 3, 3, Alpha0Strategy::SufficientBound, &tols()).unwrap();
        assert!(out.solutions.iter().all(|s| s.degree <= 2));
        assert!(
            out.solutions.iter().any(|s| s.degree == 2),
            "expected a degree-2 solution from a nonzero constant parameter"
        );
        assert_eq!(out.solutions[0].degree, 1); // central
    }

    #[test]
    fn solve_flat_data_only_has_the_constant_solution() {
        let instance =
            ProblemInstance::new(vec![c(0.3, 0.0), c(0.0, 0.0), c(0.0, 0.0)], 2).unwrap();
        let out = solve_rsp(&instance, 5, 1, Alpha0Strategy::SufficientBound, &tols()).unwrap();
        assert_eq!(out.solutions.len(), 1, "every parameter collapses to the same function");
        let f = &out.solutions[0].f;
        let constant = RationalFn::constant(c(0.3, 0.0));
        assert!(pointwise_distance(f, &constant, 40, 9) < 1e-12);
    }

    #[test]
    fn solve_rejects_inadmissible_data() {
        let too_big = ProblemInstance::new(vec![c(2.0, 0.0)], 0).unwrap();
        assert!(matches!(
            solve_rsp(&too_big, 1, 0, Alpha0Strategy::SufficientBound, &tols()),
            Err(Error::IndefiniteData { .. })
        ));
        let boundary = ProblemInstance::new(vec![c(1.0, 0.0)], 0).unwrap();
        assert!(matches!(
            solve_rsp(&boundary, 1, 0, Alpha0Strategy::SufficientBound, &tols()),
            Err(Error::SingularData { .. })
        ));
    }

    #[test]
    fn solve_below_budget_proven_infeasible() {
        // q = 1 for this data, so k = 0 is impossible
        let instance = ProblemInstance::new(vec![c(0.5, 0.0), c(0.3, 0.0), c(-0.06, 0.0)], 0)
            .unwrap();
        let out = solve_rsp(&instance, 1, 0, Alpha0Strategy::SufficientBound, &tols()).unwrap();
        assert!(out.solutions.is_empty());
        assert!(out.theoretically_infeasible);
        assert_eq!(out.hankel_rank_q, 1);
        assert!(out.reports.iter().any(|r| r.contains("below q")));
    }

    #[test]
    fn solve_below_budget_finds_the_degree_one_solution() {
        // data generated by a degree-1 function: the k = 1 search succeeds
        let instance = ProblemInstance::new(vec![c(0.5, 0.0), c(0.3, 0.0), c(-0.06, 0.0)], 1)
            .unwrap();
        let out = solve_rsp(&instance, 1, 0, Alpha0Strategy::SufficientBound, &tols()).unwrap();
        assert_eq!(out.solutions.len(), 1);
        let f = &out.solutions[0].f;
        let expected = RationalFn::new(
            ComplexPoly::from_real(&[0.5, 0.4]),
            ComplexPoly::from_real(&[1.0, 0.2]),
        )
        .unwrap();
        assert!(pointwise_distance(f, &expected, 40, 2) < 1e-9);
        assert_eq!(out.solutions[0].degree, 1);
    }

    #[test]
    fn instance_requires_data() {
        assert!(matches!(
            ProblemInstance::new(vec![], 0),
            Err(Error::InvalidInput(_))
        ));
    }
}

//! JSON wire formats and the implementations behind the command-line
//! interface. Complex numbers cross the wire as two-element [re, im]
//! arrays; every response echoes the effective tolerance block so runs
//! are reproducible from their output alone.

use serde::{Deserialize, Serialize};

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::hankel::{hankel_rank, hankel_shape};
use crate::params::Alpha0Strategy;
use crate::poly::ComplexPoly;
use crate::rational::RationalFn;
use crate::schur::{check_admissible, DataClass};
use crate::solve::{solve_rsp, ProblemInstance};
use crate::theta::{build_theta, ThetaMatrix};
use crate::verify::{pointwise_distance, roundtrip_extract, verify_solution};
use crate::C64;

pub const SCHEMA_VERSION: u32 = 1;

fn schema_version_default() -> u32 {
    SCHEMA_VERSION
}

fn count_default() -> usize {
    1
}

fn alpha0_default() -> String {
    "bound".to_string()
}

/// A problem as it arrives over the wire. Budget and count are optional
/// so the same document drives analysis, solving, and verification.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveRequest {
    #[serde(default = "schema_version_default")]
    pub schema_version: u32,
    pub coefficients: Vec<C64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_budget: Option<usize>,
    #[serde(default = "count_default")]
    pub count: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "alpha0_default")]
    pub alpha0_strategy: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerances: Option<Tolerances>,
}

impl SolveRequest {
    pub fn validate(&self) -> Result<()> {
        if self.coefficients.is_empty() {
            return Err(Error::InvalidInput("coefficients must be non-empty".into()));
        }
        if self.count == 0 {
            return Err(Error::InvalidInput("count must be at least 1".into()));
        }
        Ok(())
    }

    /// Effective tolerances: request overrides, then a config-file block,
    /// then a grid override, over the documented defaults.
    pub fn effective_tolerances(
        &self,
        config: Option<Tolerances>,
        grid: Option<usize>,
    ) -> Tolerances {
        let mut t = config.or(self.tolerances.clone()).unwrap_or_default();
        if let Some(g) = grid {
            t.circle_grid = g;
        }
        t
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ThetaOut {
    pub a: Vec<C64>,
    pub b: Vec<C64>,
}

impl ThetaOut {
    fn from_theta(theta: &ThetaMatrix) -> Self {
        ThetaOut { a: theta.a().coeffs().to_vec(), b: theta.b().coeffs().to_vec() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParameterOut {
    pub regime: String,
    pub alpha: Vec<C64>,
    pub beta: Vec<C64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagnosticsOut {
    pub taylor_residual: f64,
    pub circle_max: f64,
    pub nearest_pole: f64,
    pub degree_budget_ok: bool,
    pub pass: bool,
    #[serde(default)]
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolutionOut {
    pub num: Vec<C64>,
    pub den: Vec<C64>,
    pub degree: usize,
    pub parameter: ParameterOut,
    pub diagnostics: DiagnosticsOut,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveResponse {
    pub schema_version: u32,
    pub status: String,
    pub request: SolveRequest,
    pub gammas: Vec<C64>,
    pub hankel_rank_q: usize,
    pub theta: ThetaOut,
    pub r_column: Vec<C64>,
    pub solutions: Vec<SolutionOut>,
    pub reports: Vec<String>,
    pub config: Tolerances,
}

/// Complexity thresholds derived from the interior Hankel rank q: no
/// interpolant has exact McMillan degree below q or inside the half-open
/// range (q, n-q]; every degree above n-q is achieved by infinitely many.
/// A budget inside the gap range is therefore served only by the unique
/// degree-q interpolant, when that one exists. The range is omitted when
/// empty.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Thresholds {
    pub no_solutions_below: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub no_solutions_between: Option<[usize; 2]>,
    pub infinitely_many_above: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalyzeResponse {
    pub schema_version: u32,
    pub status: String,
    pub n: usize,
    pub admissible: bool,
    pub class: String,
    pub pick_min_eigenvalue: f64,
    pub max_gamma_modulus: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gammas: Option<Vec<C64>>,
    pub hankel_rank_q: usize,
    pub hankel_shape: [usize; 2],
    pub thresholds: Thresholds,
    pub reports: Vec<String>,
    pub config: Tolerances,
}

#[derive(Debug, Clone, Deserialize)]
pub struct CandidateIn {
    pub num: Vec<C64>,
    pub den: Vec<C64>,
}

/// Input to verification: either one explicit candidate against a
/// request, or a whole solve response (every listed solution is
/// re-checked against the embedded request).
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum VerifyInput {
    Single { request: SolveRequest, candidate: CandidateIn },
    Piped { request: SolveRequest, solutions: Vec<CandidateIn> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RationalOut {
    pub num: Vec<C64>,
    pub den: Vec<C64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReportOut {
    pub candidate: usize,
    pub taylor_residual: f64,
    pub circle_max: f64,
    pub nearest_pole: f64,
    pub degree: usize,
    pub degree_budget_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extracted_parameter: Option<RationalOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roundtrip_residual: Option<f64>,
    pub pass: bool,
    #[serde(default)]
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyResponse {
    pub schema_version: u32,
    pub status: String,
    pub all_pass: bool,
    pub reports: Vec<VerifyReportOut>,
    pub config: Tolerances,
}

fn class_name(class: DataClass) -> &'static str {
    match class {
        DataClass::StrictlyAdmissible => "strictly_admissible",
        DataClass::Singular => "singular",
        DataClass::Indefinite => "indefinite",
    }
}

fn thresholds_for(n: usize, q: usize) -> Thresholds {
    Thresholds {
        no_solutions_below: q,
        no_solutions_between: if q + 1 <= n - q && q < n {
            Some([q + 1, n - q])
        } else {
            None
        },
        infinitely_many_above: n.saturating_sub(q),
    }
}

/// Admissibility analysis plus feasibility thresholds; never solves.
pub fn cmd_analyze(req: &SolveRequest, tols: &Tolerances) -> Result<AnalyzeResponse> {
    req.validate()?;
    let c = &req.coefficients;
    let n = c.len() - 1;
    let adm = check_admissible(c, tols)?;
    let q = hankel_rank(c, tols);
    let thresholds = thresholds_for(n, q);

    let mut reports = Vec::new();
    reports.push(match adm.class {
        DataClass::StrictlyAdmissible => format!(
            "data is strictly admissible: smallest Pick eigenvalue {:.6e}, largest \
             reflection coefficient modulus {:.6}",
            adm.min_pick_eigenvalue, adm.max_gamma_modulus
        ),
        DataClass::Singular => format!(
            "data is singular (smallest Pick eigenvalue {:.3e}): a unique finite \
             Blaschke-product interpolant exists, but this solver requires strict \
             admissibility",
            adm.min_pick_eigenvalue
        ),
        DataClass::Indefinite => format!(
            "data is not admissible: the Pick matrix has a negative eigenvalue ({:.3e})",
            adm.min_pick_eigenvalue
        ),
    });
    reports.push(format!(
        "interior Hankel rank q = {q}: no interpolant has exact complexity below {q} or \
         in ({q}, {}]; infinitely many exist for every complexity above {}",
        n - q,
        n - q
    ));

    Ok(AnalyzeResponse {
        schema_version: SCHEMA_VERSION,
        status: if adm.admissible { "ok".into() } else { "not_admissible".into() },
        n,
        admissible: adm.admissible,
        class: class_name(adm.class).into(),
        pick_min_eigenvalue: adm.min_pick_eigenvalue,
        max_gamma_modulus: adm.max_gamma_modulus,
        gammas: adm.gammas.as_ref().map(|p| p.gammas().to_vec()),
        hankel_rank_q: q,
        hankel_shape: {
            let (rows, cols) = hankel_shape(n);
            [rows, cols]
        },
        thresholds,
        reports,
        config: tols.clone(),
    })
}

/// Full solve: validates the request, runs the solver, and serializes
/// everything needed for independent re-verification.
pub fn cmd_solve(req: &SolveRequest, tols: &Tolerances) -> Result<SolveResponse> {
    req.validate()?;
    let k = req.degree_budget.ok_or_else(|| {
        Error::InvalidInput("degree_budget is required for solving (or pass --k)".into())
    })?;
    let alpha0: Alpha0Strategy = req.alpha0_strategy.parse()?;
    let instance = ProblemInstance::new(req.coefficients.clone(), k)?;
    let out = solve_rsp(&instance, req.count, req.seed, alpha0, tols)?;

    let status = if !out.solutions.is_empty() {
        "ok"
    } else if out.theoretically_infeasible {
        "infeasible"
    } else {
        "exhausted"
    };
    let solutions = out
        .solutions
        .iter()
        .map(|s| SolutionOut {
            num: s.f.num().coeffs().to_vec(),
            den: s.f.den().coeffs().to_vec(),
            degree: s.degree,
            parameter: ParameterOut {
                regime: s.parameter.regime.as_str().into(),
                alpha: s.parameter.alpha.clone(),
                beta: s.parameter.beta.clone(),
            },
            diagnostics: DiagnosticsOut {
                taylor_residual: s.report.taylor_residual,
                circle_max: s.report.circle_max,
                nearest_pole: s.report.nearest_pole,
                degree_budget_ok: s.report.degree_budget_ok,
                pass: s.report.pass,
                reasons: s.report.reasons.clone(),
            },
        })
        .collect();

    Ok(SolveResponse {
        schema_version: SCHEMA_VERSION,
        status: status.into(),
        request: req.clone(),
        gammas: out.gammas,
        hankel_rank_q: out.hankel_rank_q,
        theta: ThetaOut::from_theta(&out.theta),
        r_column: out.r.column().to_vec(),
        solutions,
        reports: out.reports,
        config: tols.clone(),
    })
}

/// Acceptance threshold for the extraction round trip: rebuilding the
/// candidate from its extracted parameter must reproduce it pointwise.
const ROUNDTRIP_TOL: f64 = 1e-8;
const ROUNDTRIP_POINTS: usize = 50;
const ROUNDTRIP_SEED: u64 = 0x726f756e64;

/// Independent re-verification: re-derives the reflection coefficients
/// from the request data, checks every candidate, and extracts its
/// parameter through the backward recursion. A candidate passes only if
/// the defining conditions hold AND the extraction round trip closes.
pub fn cmd_verify(input: &VerifyInput, tols: &Tolerances) -> Result<VerifyResponse> {
    let (req, candidates) = match input {
        VerifyInput::Single { request, candidate } => (request, std::slice::from_ref(candidate)),
        VerifyInput::Piped { request, solutions } => (request, solutions.as_slice()),
    };
    req.validate()?;
    let k = req.degree_budget.ok_or_else(|| {
        Error::InvalidInput("degree_budget is required for verification (or pass --k)".into())
    })?;
    let instance = ProblemInstance::new(req.coefficients.clone(), k)?;

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

    let mut reports = Vec::new();
    let mut all_pass = true;
    for (i, cand) in candidates.iter().enumerate() {
        if cand.den.iter().all(|x| x.norm() == 0.0) {
            return Err(Error::InvalidInput(format!(
                "candidate {i} has an identically zero denominator"
            )));
        }
        let f = RationalFn::new(
            ComplexPoly::new(cand.num.clone()),
            ComplexPoly::new(cand.den.clone()),
        )?;
        let mut report = verify_solution(&f, &instance, tols);
        let mut extracted = None;
        let mut roundtrip = None;
        if report.taylor_residual <= tols.taylor_tol {
            match roundtrip_extract(&f, &params, tols) {
                Ok(e) => {
                    let rebuilt = crate::solve::apply_lft(&theta, &e, tols)?;
                    let dist =
                        pointwise_distance(&f, &rebuilt, ROUNDTRIP_POINTS, ROUNDTRIP_SEED);
                    if dist > ROUNDTRIP_TOL {
                        report.pass = false;
                        report.reasons.push(format!(
                            "extraction round trip did not close: pointwise deviation {dist:.3e}"
                        ));
                    }
                    roundtrip = Some(dist);
                    extracted = Some(RationalOut {
                        num: e.num().coeffs().to_vec(),
                        den: e.den().coeffs().to_vec(),
                    });
                }
                Err(err) => {
                    report.pass = false;
                    report.reasons.push(format!("parameter extraction failed: {err}"));
                }
            }
        }
        all_pass &= report.pass;
        reports.push(VerifyReportOut {
            candidate: i,
            taylor_residual: report.taylor_residual,
            circle_max: report.circle_max,
            nearest_pole: report.nearest_pole,
            degree: report.degree,
            degree_budget_ok: report.degree_budget_ok,
            extracted_parameter: extracted,
            roundtrip_residual: roundtrip,
            pass: report.pass,
            reasons: report.reasons,
        });
    }

    Ok(VerifyResponse {
        schema_version: SCHEMA_VERSION,
        status: if all_pass { "ok".into() } else { "verification_failed".into() },
        all_pass,
        reports,
        config: tols.clone(),
    })
}

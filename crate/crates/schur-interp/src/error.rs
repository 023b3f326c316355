use thiserror::Error;

/// Everything that can go wrong inside the solver. Variants distinguish
/// between caller mistakes (bad input, wrong regime), mathematical
/// obstructions (inadmissible data, infeasible budget) and numerical
/// breakdowns (root finder stalls, self-check mismatch), because the CLI
/// maps them to different exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("triangular solve hit a zero diagonal entry (|t0| = {modulus:.3e})")]
    SingularDiagonal { modulus: f64 },

    #[error("invalid reflection index {index}: effective degree is {degree}")]
    InvalidReflection { index: usize, degree: usize },

    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("denominator vanishes at the origin; Taylor expansion undefined")]
    PoleAtOrigin,

    #[error("root finder failed to converge (degree {degree}, {iterations} iterations)")]
    RootsFailed { degree: usize, iterations: usize },

    #[error(
        "data not admissible: Schur recursion produced |gamma_{stage}| = {modulus} (need < 1)"
    )]
    NotAdmissible { stage: usize, modulus: f64 },

    #[error(
        "Pick matrix is singular (min eigenvalue {min_eig:.3e}): a unique Blaschke-product \
         solution exists; this solver requires strict admissibility"
    )]
    SingularData { min_eig: f64 },

    #[error("Pick matrix is indefinite (min eigenvalue {min_eig:.3e}): no Schur interpolant exists")]
    IndefiniteData { min_eig: f64 },

    #[error(
        "admissibility cross-check disagreement: min Pick eigenvalue {min_eig:.3e} vs \
         max |gamma| {max_gamma}; numerical instability, refusing to proceed"
    )]
    AdmissibilityMismatch { min_eig: f64, max_gamma: f64 },

    #[error("parameter outside its regime: {0}")]
    WrongRegime(String),

    #[error(
        "parameter rejected: not a Schur-class function (max modulus on circle {circle_max}, \
         nearest denominator root {nearest_pole})"
    )]
    RejectedParameter { circle_max: f64, nearest_pole: f64 },

    #[error(
        "no nontrivial solution of the degree-drop system: smallest singular value \
         {smallest_sv:.3e} exceeds the rank cutoff; budget k is infeasible for this data"
    )]
    InfeasibleNullspace { smallest_sv: f64 },

    #[error(
        "search exhausted after {budget} candidates without a Schur-class parameter; \
         this is not a proof that none exists"
    )]
    SearchExhausted { budget: usize },

    #[error("cannot strip Schur parameter: f(0) mismatch residual {residual:.3e} exceeds tolerance")]
    CannotStrip { residual: f64 },

    #[error("internal consistency check failed: {0}")]
    InternalCheck(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Rational Schur-class interpolation under a McMillan-degree budget.
//!
//! Given Taylor coefficients c_0, ..., c_n at the origin, this crate
//! constructs rational functions f, analytic on the unit disk with
//! |f| <= 1 there, whose first n+1 Taylor coefficients match the data and
//! whose McMillan degree (the larger of the numerator and denominator
//! degrees, in lowest terms) does not exceed a prescribed budget k.
//!
//! The construction runs in four steps:
//!
//! 1. A coefficient recursion turns the data into reflection coefficients
//!    gamma_0, ..., gamma_n; the data admits solutions of this kind
//!    exactly when all of them lie strictly inside the unit disk
//!    (equivalently, the associated Pick matrix is positive definite).
//! 2. The reflection coefficients assemble into a 2x2 polynomial transfer
//!    matrix with entry pair (A, B).
//! 3. A triangular solve produces the coupling column R that links
//!    admissible parameter numerators to their denominators.
//! 4. A free Schur-class parameter E, shaped to the regime of the budget
//!    (k = n, k > n, or k < n), is pushed through the linear-fractional
//!    transform of the transfer matrix to produce f.
//!
//! Every returned solution is re-verified independently: Taylor match,
//! membership (pole locations and boundary modulus), and degree
//! accounting. The backward recursion recovers the generating parameter
//! from a solution, closing the loop.
//!
//! The `io` module and the `schur-interp` binary expose the whole
//! pipeline over JSON: `analyze` (admissibility and feasibility
//! thresholds), `solve`, and `verify`.

pub mod config;
pub mod error;
pub mod hankel;
pub mod io;
pub mod params;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod schur;
pub mod solve;
pub mod theta;
pub mod toeplitz;
pub mod verify;

/// The scalar type everything is built on.
pub type C64 = num_complex::Complex<f64>;

pub use config::Tolerances;
pub use error::{Error, Result};
pub use params::{
    alpha0_sufficient, beta_from_alpha, make_param_k_above_n, make_param_k_below_n,
    make_param_k_equal_n, schur_membership, AboveInput, Alpha0Strategy, Membership,
    ParameterSpec, Regime,
};
pub use poly::ComplexPoly;
pub use rational::RationalFn;
pub use schur::{
    check_admissible, inverse_schur_data, pick_matrix, pick_min_eigenvalue, schur_parameters,
    Admissibility, DataClass, SchurParams,
};
pub use solve::{apply_lft, solve_rsp, ProblemInstance, Solution, SolveOutcome};
pub use theta::{build_r, build_theta, ThetaMatrix};
pub use toeplitz::LowerToeplitz;
pub use verify::{
    degree_law_probe, pointwise_distance, roundtrip_extract, verify_solution, DegreeLawStats,
    VerificationReport,
};

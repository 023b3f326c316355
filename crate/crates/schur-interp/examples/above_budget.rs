//! Budgets above the data order (k > n): any bounded-by-one rational
//! parameter of degree <= k - n - 1 may be passed through freely, or the
//! parameter's leading coefficients can be prescribed and the middle ones
//! forced by the linear constraints.
//!
//! Run with: cargo run --example above_budget

use schur_interp::{
    apply_lft, build_r, build_theta, make_param_k_above_n, schur_parameters, verify_solution,
    AboveInput, Alpha0Strategy, ComplexPoly, ProblemInstance, RationalFn, Tolerances, C64,
};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn main() -> schur_interp::Result<()> {
    let tols = Tolerances::default();
    let data = vec![c(0.5, 0.0), c(0.3, 0.0), c(-0.06, 0.0)];
    let n = data.len() - 1;
    let k = n + 2;
    let instance = ProblemInstance::new(data.clone(), k)?;

    let params = schur_parameters(&data, &tols)?;
    let theta = build_theta(&params, &tols)?;
    let r = build_r(&theta, &tols)?;

    // Free regime: a degree-1 parameter (the cap is k - n - 1 = 1). Its
    // nonzero leading coefficient pushes the result to degree exactly k.
    let line = RationalFn::new(
        ComplexPoly::new(vec![c(0.2, 0.1), c(0.3, -0.2)]),
        ComplexPoly::one(),
    )?;
    let spec = make_param_k_above_n(&r, k, AboveInput::Free(line), &tols)?;
    let f = apply_lft(&theta, &spec.e, &tols)?;
    let report = verify_solution(&f, &instance, &tols);
    println!(
        "free degree-1 parameter: degree {} (budget {k}), taylor residual {:.3e}, pass = {}",
        report.degree, report.taylor_residual, report.pass
    );

    // Constrained regime: prescribe the top denominator and numerator
    // coefficients; the recursion forces the middle numerator block and the
    // strategy certifies the constant coefficient.
    let spec = make_param_k_above_n(
        &r,
        k,
        AboveInput::Constrained {
            alpha_free: vec![c(0.2, 0.0), c(-0.1, 0.1), c(0.15, 0.0), c(0.0, -0.2)],
            beta_free: vec![c(0.1, 0.0), c(0.05, -0.1)],
            strategy: Alpha0Strategy::SufficientBound,
        },
        &tols,
    )?;
    let f = apply_lft(&theta, &spec.e, &tols)?;
    let report = verify_solution(&f, &instance, &tols);
    println!(
        "constrained parameter:   degree {} (budget {k}), taylor residual {:.3e}, pass = {}",
        report.degree, report.taylor_residual, report.pass
    );
    println!(
        "  parameter numerator length {}, denominator length {}",
        spec.e.num().len(),
        spec.e.den().len()
    );
    Ok(())
}

//! Solutions at the exact budget k = n: every free denominator tail yields
//! one interpolant once the forced numerator and a certified constant
//! coefficient are filled in. Shows the three constant-coefficient
//! strategies side by side and the one-call solver on top.
//!
//! Run with: cargo run --example exact_budget_family

use schur_interp::{
    apply_lft, build_r, build_theta, make_param_k_equal_n, schur_parameters, solve_rsp,
    verify_solution, Alpha0Strategy, ProblemInstance, Tolerances, C64,
};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn main() -> schur_interp::Result<()> {
    let tols = Tolerances::default();
    let data = vec![c(0.2, 0.3), c(0.1, -0.2), c(0.05, 0.0), c(-0.04, 0.02)];
    let n = data.len() - 1;
    let instance = ProblemInstance::new(data.clone(), n)?;

    let params = schur_parameters(&data, &tols)?;
    let theta = build_theta(&params, &tols)?;
    let r = build_r(&theta, &tols)?;

    let tail = vec![c(0.4, 0.1), c(-0.2, 0.0), c(0.1, -0.3)];
    for (label, strategy) in [
        ("sum bound", Alpha0Strategy::SufficientBound),
        ("bisected", Alpha0Strategy::MinimizeBisect),
        ("explicit 2.0", Alpha0Strategy::Explicit(c(2.0, 0.0))),
    ] {
        let spec = make_param_k_equal_n(&r, &tail, strategy, &tols)?;
        let a0 = spec.e.den().coeff(0);
        let f = apply_lft(&theta, &spec.e, &tols)?;
        let report = verify_solution(&f, &instance, &tols);
        println!(
            "{label:>12}: constant coefficient {:.6}{:+.6}i, degree {}, taylor residual \
             {:.3e}, pass = {}",
            a0.re, a0.im, report.degree, report.taylor_residual, report.pass
        );
    }

    // The solver wraps the same construction behind one call and returns
    // pairwise-distinct verified solutions.
    let outcome = solve_rsp(&instance, 3, 42, Alpha0Strategy::SufficientBound, &tols)?;
    println!("\nsolver found {} distinct solutions:", outcome.solutions.len());
    for (i, s) in outcome.solutions.iter().enumerate() {
        println!(
            "  #{i}: degree {}, taylor residual {:.3e}, max modulus {:.9}",
            s.degree, s.report.taylor_residual, s.report.circle_max
        );
    }
    for line in &outcome.reports {
        println!("note: {line}");
    }
    Ok(())
}

//! The degree jump: feeding a nonzero constant parameter through the
//! transfer matrix always lands on degree exactly n + 1 — one above the
//! data order — so it satisfies the relaxed budget k = n + 1 and fails
//! k = n on the degree check alone.
//!
//! Run with: cargo run --example degree_jump

use schur_interp::{
    apply_lft, build_r, build_theta, make_param_k_above_n, schur_parameters, verify_solution,
    AboveInput, ProblemInstance, RationalFn, Tolerances, C64,
};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn main() -> schur_interp::Result<()> {
    let tols = Tolerances::default();
    let data = vec![c(0.5, 0.0), c(0.3, 0.0), c(-0.06, 0.0)];
    let n = data.len() - 1;

    let params = schur_parameters(&data, &tols)?;
    let theta = build_theta(&params, &tols)?;
    let r = build_r(&theta, &tols)?;

    for w in [c(0.3, 0.0), c(0.0, 0.5), c(-0.6, 0.2)] {
        let spec = make_param_k_above_n(&r, n + 1, AboveInput::Free(RationalFn::constant(w)), &tols)?;
        let f = apply_lft(&theta, &spec.e, &tols)?;
        let degree = f.mcmillan_degree(&tols);

        let relaxed = verify_solution(&f, &ProblemInstance::new(data.clone(), n + 1)?, &tols);
        let tight = verify_solution(&f, &ProblemInstance::new(data.clone(), n)?, &tols);
        println!(
            "E = {:.2}{:+.2}i: degree {} (n = {n}); budget {} pass = {}, budget {n} pass = {} \
             (degree within budget: {})",
            w.re,
            w.im,
            degree,
            n + 1,
            relaxed.pass,
            tight.pass,
            tight.degree_budget_ok
        );
    }
    println!(
        "\nonly the zero parameter keeps the degree at or below n; any other constant \
         adds exactly one."
    );
    Ok(())
}

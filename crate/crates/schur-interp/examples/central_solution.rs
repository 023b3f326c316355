//! The central solution: run the coefficient recursion, assemble the 2x2
//! transfer matrix, and apply it to the zero parameter. The result is the
//! canonical degree <= n interpolant, printed next to its verification.
//!
//! Run with: cargo run --example central_solution

use schur_interp::{
    apply_lft, build_theta, schur_parameters, verify_solution, ProblemInstance, RationalFn,
    Tolerances, C64,
};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn poly_string(coeffs: &[C64]) -> String {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, x)| match i {
            0 => format!("({:.4}{:+.4}i)", x.re, x.im),
            1 => format!("({:.4}{:+.4}i) z", x.re, x.im),
            _ => format!("({:.4}{:+.4}i) z^{i}", x.re, x.im),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() -> schur_interp::Result<()> {
    let tols = Tolerances::default();
    let data = vec![c(0.5, 0.0), c(0.3, 0.0)];
    let n = data.len() - 1;

    let params = schur_parameters(&data, &tols)?;
    println!("reflection coefficients: {:?}", params.gammas());

    let theta = build_theta(&params, &tols)?;
    println!("A(z) = {}", poly_string(theta.a().coeffs()));
    println!("B(z) = {}", poly_string(theta.b().coeffs()));

    // The zero parameter selects f = A/B.
    let f = apply_lft(&theta, &RationalFn::constant(c(0.0, 0.0)), &tols)?;
    println!("central solution:");
    println!("  num = {}", poly_string(f.num().coeffs()));
    println!("  den = {}", poly_string(f.den().coeffs()));

    let instance = ProblemInstance::new(data, n)?;
    let report = verify_solution(&f, &instance, &tols);
    println!(
        "verification: taylor residual {:.3e}, max modulus on the circle {:.12}, \
         nearest pole {:.6}, degree {} (budget {n}), pass = {}",
        report.taylor_residual, report.circle_max, report.nearest_pole, report.degree, report.pass
    );
    Ok(())
}

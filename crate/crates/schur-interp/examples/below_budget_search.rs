//! Budgets below the data order (k < n): the degree constraints become a
//! rectangular homogeneous system, solutions exist only when it has a
//! nontrivial nullspace, and budgets below the interior Hankel rank are
//! proven impossible rather than searched.
//!
//! Run with: cargo run --example below_budget_search

use schur_interp::{solve_rsp, Alpha0Strategy, ProblemInstance, Tolerances, C64};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn main() -> schur_interp::Result<()> {
    let tols = Tolerances::default();
    // Taylor data of g(z) = (0.5 + 0.4 z) / (1 + 0.2 z): a degree-1
    // function sampled to order n = 2.
    let data = vec![c(0.5, 0.0), c(0.3, 0.0), c(-0.06, 0.0)];

    for k in [1usize, 0] {
        println!("budget k = {k}:");
        let instance = ProblemInstance::new(data.clone(), k)?;
        let outcome = solve_rsp(&instance, 1, 9, Alpha0Strategy::SufficientBound, &tols)?;
        println!("  interior Hankel rank q = {}", outcome.hankel_rank_q);
        for line in &outcome.reports {
            println!("  note: {line}");
        }
        if outcome.solutions.is_empty() {
            println!(
                "  no solutions ({})",
                if outcome.theoretically_infeasible {
                    "proven impossible"
                } else {
                    "search exhausted"
                }
            );
        }
        for s in &outcome.solutions {
            println!(
                "  found degree-{} solution, num = {:?}, den = {:?}, taylor residual {:.3e}",
                s.degree,
                s.f.num().coeffs(),
                s.f.den().coeffs(),
                s.report.taylor_residual
            );
        }
        println!();
    }
    Ok(())
}

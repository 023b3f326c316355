//! Classify Taylor data before solving: reflection coefficients, the Pick
//! matrix spectrum, and the interior Hankel rank that governs which degree
//! budgets are reachable.
//!
//! Run with: cargo run --example analyze_admissibility

use schur_interp::hankel::{hankel_rank, hankel_shape};
use schur_interp::{check_admissible, DataClass, Tolerances, C64};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn main() -> schur_interp::Result<()> {
    let tols = Tolerances::default();
    let datasets: Vec<(&str, Vec<C64>)> = vec![
        ("hand-checked pair", vec![c(0.5, 0.0), c(0.3, 0.0)]),
        ("degree-1 data", vec![c(0.5, 0.0), c(0.3, 0.0), c(-0.06, 0.0)]),
        ("flat data", vec![c(0.3, 0.0), c(0.0, 0.0), c(0.0, 0.0)]),
        (
            "complex data",
            vec![c(0.2, 0.3), c(0.1, -0.2), c(0.05, 0.0), c(-0.04, 0.02)],
        ),
        ("unimodular start", vec![c(1.0, 0.0), c(0.0, 0.0)]),
        ("outside the disk", vec![c(1.2, 0.0)]),
    ];

    for (label, data) in &datasets {
        let n = data.len() - 1;
        let adm = check_admissible(data, &tols)?;
        println!("{label} (n = {n})");
        println!("  smallest Pick eigenvalue: {:+.6e}", adm.min_pick_eigenvalue);
        match adm.class {
            DataClass::StrictlyAdmissible => {
                let gammas = adm.gammas.as_ref().unwrap().gammas();
                let moduli: Vec<String> =
                    gammas.iter().map(|g| format!("{:.4}", g.norm())).collect();
                println!("  strictly admissible; |gamma_j| = [{}]", moduli.join(", "));
                let q = hankel_rank(data, &tols);
                let (rows, cols) = hankel_shape(n);
                println!(
                    "  interior Hankel rank q = {q} ({rows}x{cols} matrix): no interpolant \
                     has degree below {q}; infinitely many exist above {}",
                    n - q
                );
            }
            DataClass::Singular => {
                println!("  boundary case: the Pick matrix is singular, refusing to solve")
            }
            DataClass::Indefinite => {
                println!("  indefinite: no function of the class matches this data")
            }
        }
        println!();
    }
    Ok(())
}

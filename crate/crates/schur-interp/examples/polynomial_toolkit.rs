//! The small complex-algebra layer everything rests on: polynomial
//! reflection, rational Taylor expansion by long division, common-factor
//! reduction, and triangular-Toeplitz solves.
//!
//! Run with: cargo run --example polynomial_toolkit

use schur_interp::{ComplexPoly, LowerToeplitz, RationalFn, Tolerances, C64};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn main() -> schur_interp::Result<()> {
    let tols = Tolerances::default();

    // Reflection at index k reverses and conjugates: coefficient j of the
    // result is the conjugate of coefficient k - j of the input.
    let p = ComplexPoly::new(vec![c(1.0, 2.0), c(0.0, 0.0), c(3.0, -1.0)]);
    let reflected = p.reflect(3, tols.zero_tol)?;
    println!("p coefficients:            {:?}", p.coeffs());
    println!("reflection at index 3:     {:?}", reflected.coeffs());

    // Taylor expansion of a rational function, straight long division.
    let g = RationalFn::new(
        ComplexPoly::new(vec![c(0.5, 0.0), c(0.4, 0.0)]),
        ComplexPoly::new(vec![c(1.0, 0.0), c(0.2, 0.0)]),
    )?;
    println!("taylor of (0.5+0.4z)/(1+0.2z) to order 4: {:?}", g.taylor(4, &tols)?);

    // Reduction strips shared roots; here num and den share (z - 1).
    let num = ComplexPoly::new(vec![c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]); // (z-1)(z+1)
    let den = ComplexPoly::new(vec![c(-2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]); // (z-1)(z+2)
    let f = RationalFn::new(num, den)?;
    let reduced = f.reduce(&tols);
    println!(
        "reduce ((z-1)(z+1))/((z-1)(z+2)): num {:?}, den {:?}, degree {} -> {}",
        reduced.f.num().coeffs(),
        reduced.f.den().coeffs(),
        f.mcmillan_degree(&tols),
        reduced.f.mcmillan_degree(&tols)
    );

    // Lower-triangular Toeplitz matrices: apply and solve are forward
    // substitutions; solve inverts apply exactly.
    let t = LowerToeplitz::new(vec![c(1.0, 0.0), c(0.5, -0.5), c(0.25, 0.0)]);
    let v = vec![c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0)];
    let image = t.apply(&v)?;
    let back = t.solve(&image, tols.zero_tol)?;
    println!("Toeplitz apply then solve restores {:?}", back);
    Ok(())
}

//! Statistical self-check of the degree bookkeeping: random bounded
//! rational functions are pushed through forward steps and the probe
//! asserts, sample by sample, that composed degrees follow the three-case
//! law and that degree growth is monotone along chains. Any violation is
//! an error; the stats show all cases were actually exercised.
//!
//! Run with: cargo run --example degree_law_probe

use schur_interp::{degree_law_probe, Tolerances};

fn main() -> schur_interp::Result<()> {
    let tols = Tolerances::default();
    let stats = degree_law_probe(2000, 123, &tols)?;
    println!("samples checked:            {}", stats.samples);
    println!("denominator-dominant cases: {}", stats.case1);
    println!("numerator-dominant cases:   {}", stats.case2);
    println!("boundary cases:             {}", stats.case3);
    println!("degree jumps observed:      {}", stats.degree_jumps);
    println!("degree keeps observed:      {}", stats.degree_keeps);
    println!("composition chains checked: {}", stats.chains_checked);
    println!("no violations found");
    Ok(())
}

//! The JSON layer behind the command-line tool, used as a library:
//! analyze -> solve -> verify with typed requests and responses. The solve
//! response feeds verify unchanged, so external tools can re-check any
//! published solution set.
//!
//! Run with: cargo run --example json_pipeline

use schur_interp::io::{cmd_analyze, cmd_solve, cmd_verify, SolveRequest, VerifyInput};

fn main() -> schur_interp::Result<()> {
    let request: SolveRequest = serde_json::from_str(
        r#"{
            "coefficients": [[0.5, 0.0], [0.3, 0.0]],
            "degree_budget": 1,
            "count": 2,
            "seed": 7
        }"#,
    )
    .expect("well-formed request");
    let tols = request.effective_tolerances(None, None);

    let analysis = cmd_analyze(&request, &tols)?;
    println!(
        "analyze: status {}, gammas {:?}, interior rank {}",
        analysis.status, analysis.gammas, analysis.hankel_rank_q
    );

    let solved = cmd_solve(&request, &tols)?;
    println!(
        "solve:   status {}, {} solutions, r column {:?}",
        solved.status,
        solved.solutions.len(),
        solved.r_column
    );
    for s in &solved.solutions {
        println!(
            "         degree {} via {} parameter, taylor residual {:.3e}",
            s.degree, s.parameter.regime, s.diagnostics.taylor_residual
        );
    }

    // Round-trip: the solve response re-parses as verify input.
    let as_text = serde_json::to_string(&solved).expect("serializable");
    let verify_input: VerifyInput = serde_json::from_str(&as_text).expect("re-parsable");
    let verdict = cmd_verify(&verify_input, &tols)?;
    println!("verify:  status {}, all candidates pass = {}", verdict.status, verdict.all_pass);
    Ok(())
}

//! Failure-rate sweep comparing peeling, bounded clusters, and unbounded
//! (maximum-likelihood) cluster decoding on a [[1600,64]] hypergraph product
//! code. Prints a table and the CSV emitted by the CLI.
//!
//!     cargo run --release --example failure_rates

use qldpc_erasure::cli::simulate_csv;
use qldpc_erasure::code::{regular_ldpc, CssCode};
use qldpc_erasure::decoder::DecoderKind;
use qldpc_erasure::sim::{run_trials, SimConfig};

fn main() {
    let factor = regular_ldpc(32, 3, 4, 6).unwrap();
    let code = CssCode::hypergraph_product("hgp-reg32", &factor, &factor);
    println!("code [[{},{}]]\n", code.n(), code.k());

    let rates = vec![0.26, 0.30, 0.34];
    let trials = 4000;
    println!("{:>6} {:>14} {:>14} {:>14}", "rate", "peeling", "cluster(20)", "cluster(inf)");
    let mut ml_rows = Vec::new();
    for &rate in &rates {
        let mut row = format!("{rate:>6}");
        for decoder in [
            DecoderKind::Peeling,
            DecoderKind::Cluster { bound: Some(20) },
            DecoderKind::Cluster { bound: None },
        ] {
            let cfg = SimConfig {
                decoder,
                erasure_rates: vec![rate],
                trials,
                master_seed: 7,
            };
            let result = run_trials(&code, &cfg).unwrap();
            row.push_str(&format!(" {:>14.6}", result.per_rate[0].failure_rate));
            if decoder == (DecoderKind::Cluster { bound: None }) {
                ml_rows.push(result.per_rate.into_iter().next().unwrap());
            }
        }
        println!("{row}");
    }

    println!("\nfigure-ready CSV for the unbounded decoder:");
    print!("{}", simulate_csv(&ml_rows));
}

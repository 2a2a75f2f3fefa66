//! Cluster-size census: how often erasure patterns stall peeling, and how
//! often the stalled residual contains a cluster above each size threshold.
//! The bounded decoder's extra failures are exactly the threshold column.
//!
//!     cargo run --release --example cluster_census

use qldpc_erasure::code::{regular_ldpc, CssCode};
use qldpc_erasure::sim::cluster_stats;

fn main() {
    let factor = regular_ldpc(32, 3, 4, 6).unwrap();
    let code = CssCode::hypergraph_product("hgp-reg32", &factor, &factor);
    println!("code [[{},{}]], 3000 trials per rate\n", code.n(), code.k());

    let thresholds = [10, 20, 50, 100, 200];
    let rates: Vec<f64> = (0..6).map(|i| (30 + 4 * i) as f64 / 100.0).collect();
    let rows = cluster_stats(&code, &rates, 3000, 13, &thresholds).unwrap();

    print!("{:>6} {:>14}", "rate", "not peelable");
    for t in thresholds {
        print!(" {:>10}", format!("smax>{t}"));
    }
    println!();
    for row in &rows {
        print!("{:>6} {:>14.4}", row.rate, row.not_peelable_fraction);
        for f in &row.exceed_fractions {
            print!(" {f:>10.4}");
        }
        println!();
    }
    println!("\nthe transition sharpens as the rate crosses the decoder's working range");
}

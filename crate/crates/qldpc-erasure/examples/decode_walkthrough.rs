//! Anatomy of one decode on a hand-built stopping set: peel, decompose the
//! residual into a cluster forest, solve, and verify.
//!
//!     cargo run --release --example decode_walkthrough

use qldpc_erasure::cluster::{cluster_postprocess, ClusterForest, PostOutcome};
use qldpc_erasure::gf2::{BitMatrix, BitVector};
use qldpc_erasure::tanner::TannerGraph;

fn main() {
    // Six checks over eight variables. Erasing everything leaves no check
    // with a single erased neighbor, so peeling cannot start: the whole
    // pattern is a stopping set.
    let check_adjacency: [&[usize]; 6] = [
        &[0, 1],
        &[0, 1, 2, 3, 5],
        &[3, 4],
        &[3, 4, 5],
        &[5, 6],
        &[5, 6, 7],
    ];
    let mut entries = Vec::new();
    for (c, vars) in check_adjacency.iter().enumerate() {
        for &v in *vars {
            entries.push((c, v));
        }
    }
    let h1 = BitMatrix::from_entries(6, 8, &entries);
    let graph = TannerGraph::from_matrix(&h1);

    // True error on variable 0; everything erased.
    let error = BitVector::from_support(8, &[0]);
    let erasure = BitVector::from_support(8, &(0..8).collect::<Vec<_>>());
    let syndrome = h1.mul_vec(&error).unwrap();
    println!("syndrome          {syndrome}");

    let state = graph.peel(&syndrome, &erasure).unwrap();
    println!("peelable          {}", state.is_empty());
    println!("residual vars     {:?}", state.active_vars());

    // The residual graph splits into five clusters joined by three cut
    // nodes; dump the forest rooted at its largest cluster.
    let mut forest = ClusterForest::build(&state, &graph);
    forest.root();
    println!("\ncluster forest:\n{}", forest.dump_text());

    match cluster_postprocess(&state, None, &graph).unwrap() {
        PostOutcome::Solved { solution, cluster_sizes } => {
            println!("cluster sizes     {cluster_sizes:?}");
            println!("estimate          {solution}");
            assert_eq!(h1.mul_vec(&solution).unwrap(), syndrome);
            println!("syndrome check    ok");
        }
        PostOutcome::Oversize { .. } => unreachable!("no bound was set"),
    }

    // A size bound of 2 rejects the three-variable cluster instead.
    match cluster_postprocess(&state, Some(2), &graph).unwrap() {
        PostOutcome::Oversize { cluster_sizes } => {
            println!("bound 2           oversize, sizes {cluster_sizes:?}");
        }
        PostOutcome::Solved { .. } => unreachable!("bound 2 must trip"),
    }
}

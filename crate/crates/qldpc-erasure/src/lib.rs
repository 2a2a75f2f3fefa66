//! Erasure decoding for CSS quantum LDPC codes.
//!
//! The decoder runs in up to three phases. Peeling resolves erased qubits
//! through checks with a single erased neighbor in linear time. When peeling
//! stalls on a stopping set, the residual graph is decomposed into its
//! biconnected components, which form a forest of clusters joined at cut
//! nodes; each cluster is a small linear system solved by elimination, and a
//! two-pass constraint propagation over the forest selects per-cluster
//! solutions that merge into a global one. Left unbounded this recovers
//! every solvable instance; bounding the cluster size trades failures on
//! rare large clusters for linear-time decoding. A one-shot Gaussian
//! elimination decoder over the whole erasure is included as the exact
//! baseline.
//!
//! The [`sim`] module adds the Monte Carlo harness: erasure sampling,
//! outcome classification up to degeneracy, Wilson confidence intervals, and
//! cluster-size statistics. File interchange (alist matrices, code
//! manifests) lives in [`code`]; the `qldpc-erasure` binary in this crate
//! wraps it all behind `hgp`, `simulate`, `decode`, and `stats` subcommands.
//!
//! See the `examples/` directory for runnable walkthroughs of each piece.

pub mod cli;
pub mod cluster;
pub mod code;
pub mod decoder;
pub mod gf2;
pub mod sim;
pub mod tanner;

#[cfg(test)]
pub(crate) mod testutil;

pub use cluster::{biconnected_components, cluster_postprocess, ClusterForest, PostOutcome};
pub use code::CssCode;
pub use decoder::{Decoded, DecoderKind, ErasureDecoder};
pub use gf2::{BitMatrix, BitVector};
pub use sim::{run_trials, SimConfig, SimResult};
pub use tanner::TannerGraph;

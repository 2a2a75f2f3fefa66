//! Erasure decoders for the Pauli-X side of a CSS code.
//!
//! Three strategies share one entry point: plain peeling (linear time, gives
//! up on stopping sets), peeling followed by cluster-decomposition
//! post-processing (optionally bounded cluster size), and one-shot Gaussian
//! elimination over the whole erasure support.

use thiserror::Error;

use crate::cluster::{cluster_postprocess, ClusterError, PostOutcome};
use crate::code::CssCode;
use crate::gf2::{BitVector, Gf2Error};
use crate::tanner::{TannerError, TannerGraph};

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("syndrome is inconsistent with the erasure pattern")]
    InconsistentSyndrome,
    #[error(transparent)]
    Dimension(#[from] Gf2Error),
    #[error(transparent)]
    Graph(#[from] TannerError),
}

/// Decoding strategy. `Cluster { bound: None }` is the unbounded
/// (maximum-likelihood) variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecoderKind {
    Peeling,
    Cluster { bound: Option<usize> },
    Gaussian,
}

impl DecoderKind {
    pub fn label(&self) -> String {
        match self {
            DecoderKind::Peeling => "peeling".into(),
            DecoderKind::Cluster { bound: None } => "cluster(inf)".into(),
            DecoderKind::Cluster { bound: Some(c) } => format!("cluster({c})"),
            DecoderKind::Gaussian => "gaussian".into(),
        }
    }
}

/// Why a decoder declared failure on a trial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureKind {
    /// No estimate matching the syndrome was produced.
    NoSolution,
    /// Cluster decomposition met a cluster above the size bound.
    OversizeCluster,
}

/// Result of one decode call.
#[derive(Debug, Clone)]
pub struct Decoded {
    /// Estimate supported on the erasure and matching the syndrome, when the
    /// decoder found one.
    pub solution: Option<BitVector>,
    pub failure: Option<FailureKind>,
    /// Whether peeling alone recovers this erasure pattern.
    pub peelable: bool,
    /// Cluster sizes of the residual decomposition, when one was built.
    pub cluster_sizes: Vec<usize>,
}

impl Decoded {
    pub fn max_cluster_size(&self) -> Option<usize> {
        self.cluster_sizes.iter().max().copied()
    }
}

/// Decoder bound to one code, reusable across trials from any thread.
pub struct ErasureDecoder<'a> {
    code: &'a CssCode,
    graph: TannerGraph,
    kind: DecoderKind,
}

impl<'a> ErasureDecoder<'a> {
    pub fn new(code: &'a CssCode, kind: DecoderKind) -> Self {
        Self {
            code,
            graph: TannerGraph::from_matrix(code.h1()),
            kind,
        }
    }

    pub fn kind(&self) -> DecoderKind {
        self.kind
    }

    pub fn graph(&self) -> &TannerGraph {
        &self.graph
    }

    /// Decodes one syndrome/erasure pair. A returned solution always
    /// satisfies `solution · h1ᵀ = syndrome` with support inside the erasure;
    /// `Err(InconsistentSyndrome)` means no such vector exists (impossible
    /// when the syndrome comes from an actual error on the erasure).
    pub fn decode(&self, syndrome: &BitVector, erasure: &BitVector) -> Result<Decoded, DecodeError> {
        let state = self.graph.peel(syndrome, erasure)?;
        let peelable = state.is_empty();
        // Peeling that finishes with a leftover syndrome means no vector on
        // the erasure can match it. The Gaussian route discovers the same
        // thing on its own and reports it as an ordinary miss.
        if peelable && !state.residual_syndrome().is_zero() && self.kind != DecoderKind::Gaussian {
            return Err(DecodeError::InconsistentSyndrome);
        }
        match self.kind {
            DecoderKind::Peeling => Ok(Decoded {
                solution: peelable.then(|| state.partial_solution().clone()),
                failure: (!peelable).then_some(FailureKind::NoSolution),
                peelable,
                cluster_sizes: Vec::new(),
            }),
            DecoderKind::Cluster { bound } => {
                match cluster_postprocess(&state, bound, &self.graph) {
                    Ok(PostOutcome::Solved { solution, cluster_sizes }) => {
                        let mut full = state.partial_solution().clone();
                        full.xor_assign(&solution);
                        Ok(Decoded {
                            solution: Some(full),
                            failure: None,
                            peelable,
                            cluster_sizes,
                        })
                    }
                    Ok(PostOutcome::Oversize { cluster_sizes }) => Ok(Decoded {
                        solution: None,
                        failure: Some(FailureKind::OversizeCluster),
                        peelable,
                        cluster_sizes,
                    }),
                    Err(ClusterError::InconsistentSyndrome) => {
                        Err(DecodeError::InconsistentSyndrome)
                    }
                }
            }
            DecoderKind::Gaussian => {
                let solution = self
                    .code
                    .h1()
                    .solve_restricted(syndrome, &erasure.support())?;
                Ok(Decoded {
                    failure: solution.is_none().then_some(FailureKind::NoSolution),
                    solution,
                    peelable,
                    cluster_sizes: Vec::new(),
                })
            }
        }
    }
}

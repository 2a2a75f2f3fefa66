//! Monte Carlo estimation of erasure failure rates and cluster-size
//! statistics.
//!
//! Each trial draws an erasure pattern, a uniform Pauli-X error on it, runs
//! the configured decoder on the induced syndrome, and classifies the result
//! against the true error. Per-trial randomness comes from a counter-based
//! seed over `(master_seed, rate index, trial index)`, so results are
//! bit-identical across thread counts and run order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::code::CssCode;
use crate::decoder::{DecodeError, Decoded, DecoderKind, ErasureDecoder, FailureKind};
use crate::gf2::{BitVector, RowSpace};

#[derive(Debug, Error)]
pub enum SimError {
    #[error("erasure rate {0} is not a probability")]
    BadRate(f64),
    #[error("trial count must be at least 1")]
    NoTrials,
    #[error("confidence interval undefined for zero trials")]
    EmptyInterval,
    #[error("decoder returned a vector that does not match the syndrome")]
    UnsoundDecoder,
    #[error("decode failed: {0}")]
    Decode(#[from] DecodeError),
}

/// How a decoding trial ended. Oversize outcomes only occur under a cluster
/// size bound; degenerate successes differ from the channel error by an
/// element of the row space of `h2` and count as success.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutcomeTag {
    NoSolution,
    ExactMatch,
    DegenerateSuccess,
    LogicalFailure,
    OversizeCluster,
}

impl OutcomeTag {
    pub const ALL: [OutcomeTag; 5] = [
        OutcomeTag::NoSolution,
        OutcomeTag::ExactMatch,
        OutcomeTag::DegenerateSuccess,
        OutcomeTag::LogicalFailure,
        OutcomeTag::OversizeCluster,
    ];

    /// Failures are missing solutions, logical errors, and oversize bails.
    pub fn is_failure(self) -> bool {
        matches!(
            self,
            OutcomeTag::NoSolution | OutcomeTag::LogicalFailure | OutcomeTag::OversizeCluster
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TrialOutcome {
    pub tag: OutcomeTag,
    pub max_cluster_size: Option<usize>,
    pub peelable: bool,
}

/// Simulation request: one decoder, a list of erasure rates, and a trial
/// count per rate.
#[derive(Clone, Debug)]
pub struct SimConfig {
    pub decoder: DecoderKind,
    pub erasure_rates: Vec<f64>,
    pub trials: usize,
    pub master_seed: u64,
}

/// Aggregates for one erasure rate.
#[derive(Clone, Debug, Serialize)]
pub struct RateResult {
    pub rate: f64,
    pub trials: usize,
    pub failures: usize,
    pub failure_rate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    /// Counts by [`OutcomeTag::ALL`] order.
    pub outcome_counts: [usize; 5],
    pub not_peelable_fraction: f64,
    /// Mean of the per-trial maximum cluster size over decomposed trials.
    pub mean_max_cluster_size: f64,
    pub max_cluster_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimResult {
    pub per_rate: Vec<RateResult>,
}

/// Deterministic per-trial generator: the ChaCha seed encodes the master
/// seed and both counters directly.
pub fn trial_rng(master_seed: u64, rate_index: usize, trial_index: usize) -> ChaCha8Rng {
    let mut seed = [0u8; 32];
    seed[0..8].copy_from_slice(&master_seed.to_le_bytes());
    seed[8..16].copy_from_slice(&(rate_index as u64).to_le_bytes());
    seed[16..24].copy_from_slice(&(trial_index as u64).to_le_bytes());
    ChaCha8Rng::from_seed(seed)
}

/// Independent Bernoulli(`p`) erasure marks over `n` positions.
pub fn sample_erasure(n: usize, p: f64, rng: &mut impl Rng) -> BitVector {
    let mut erasure = BitVector::zeros(n);
    for i in 0..n {
        if rng.gen_bool(p) {
            erasure.set(i, true);
        }
    }
    erasure
}

/// Uniform error on the erased coordinates: each erased position carries an
/// independent fair bit.
pub fn sample_error(erasure: &BitVector, rng: &mut impl Rng) -> BitVector {
    let mut error = BitVector::zeros(erasure.len());
    for i in erasure.support() {
        if rng.gen_bool(0.5) {
            error.set(i, true);
        }
    }
    error
}

/// Classifies a decode against the channel error. Fails when a claimed
/// solution does not reproduce the error's syndrome, which indicates a
/// decoder bug rather than a decoding failure.
pub fn classify(
    code: &CssCode,
    error: &BitVector,
    decoded: &Decoded,
) -> Result<TrialOutcome, SimError> {
    let space = RowSpace::new(code.h2());
    classify_with_space(code, &space, error, decoded)
}

/// [`classify`] with a precomputed row space of `h2`, for hot loops.
pub fn classify_with_space(
    code: &CssCode,
    h2_space: &RowSpace,
    error: &BitVector,
    decoded: &Decoded,
) -> Result<TrialOutcome, SimError> {
    let tag = match (&decoded.solution, decoded.failure) {
        (None, Some(FailureKind::OversizeCluster)) => OutcomeTag::OversizeCluster,
        (None, _) => OutcomeTag::NoSolution,
        (Some(estimate), _) => {
            let expected = code.h1().mul_vec(error).map_err(DecodeError::from)?;
            let produced = code.h1().mul_vec(estimate).map_err(DecodeError::from)?;
            if produced != expected {
                return Err(SimError::UnsoundDecoder);
            }
            if estimate == error {
                OutcomeTag::ExactMatch
            } else if h2_space
                .member(&estimate.xor(error))
                .map_err(DecodeError::from)?
            {
                OutcomeTag::DegenerateSuccess
            } else {
                OutcomeTag::LogicalFailure
            }
        }
    };
    Ok(TrialOutcome {
        tag,
        max_cluster_size: decoded.max_cluster_size(),
        peelable: decoded.peelable,
    })
}

const Z_95: f64 = 1.959_963_984_540_054;

/// Two-sided 95% Wilson score interval for `failures` out of `trials`.
pub fn wilson_ci(failures: usize, trials: usize) -> Result<(f64, f64), SimError> {
    if trials == 0 {
        return Err(SimError::EmptyInterval);
    }
    assert!(failures <= trials, "more failures than trials");
    let n = trials as f64;
    let p = failures as f64 / n;
    let z2 = Z_95 * Z_95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z_95 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    Ok(((center - half).max(0.0), (center + half).min(1.0)))
}

fn check_config(cfg: &SimConfig) -> Result<(), SimError> {
    if cfg.trials == 0 {
        return Err(SimError::NoTrials);
    }
    for &rate in &cfg.erasure_rates {
        if !(0.0..=1.0).contains(&rate) || rate.is_nan() {
            return Err(SimError::BadRate(rate));
        }
    }
    Ok(())
}

fn run_one_trial(
    decoder: &ErasureDecoder,
    code: &CssCode,
    h2_space: &RowSpace,
    rate: f64,
    seed: u64,
    rate_index: usize,
    trial_index: usize,
) -> Result<TrialOutcome, SimError> {
    let mut rng = trial_rng(seed, rate_index, trial_index);
    let erasure = sample_erasure(code.n(), rate, &mut rng);
    let error = sample_error(&erasure, &mut rng);
    let syndrome = code.h1().mul_vec(&error).map_err(DecodeError::from)?;
    let decoded = decoder.decode(&syndrome, &erasure)?;
    classify_with_space(code, h2_space, &error, &decoded)
}

/// Runs the full sweep. Trials execute in parallel on the current rayon
/// pool; aggregation folds in trial order, so the result is identical for
/// any thread count.
pub fn run_trials(code: &CssCode, cfg: &SimConfig) -> Result<SimResult, SimError> {
    check_config(cfg)?;
    let decoder = ErasureDecoder::new(code, cfg.decoder);
    let h2_space = RowSpace::new(code.h2());
    let mut per_rate = Vec::with_capacity(cfg.erasure_rates.len());
    for (rate_index, &rate) in cfg.erasure_rates.iter().enumerate() {
        let outcomes: Vec<TrialOutcome> = (0..cfg.trials)
            .into_par_iter()
            .map(|trial| {
                run_one_trial(&decoder, code, &h2_space, rate, cfg.master_seed, rate_index, trial)
            })
            .collect::<Result<_, _>>()?;
        per_rate.push(aggregate(rate, &outcomes)?);
    }
    Ok(SimResult { per_rate })
}

fn aggregate(rate: f64, outcomes: &[TrialOutcome]) -> Result<RateResult, SimError> {
    let trials = outcomes.len();
    let mut outcome_counts = [0usize; 5];
    let mut not_peelable = 0usize;
    let mut size_sum = 0usize;
    let mut size_count = 0usize;
    let mut max_size = 0usize;
    for outcome in outcomes {
        let slot = OutcomeTag::ALL
            .iter()
            .position(|&t| t == outcome.tag)
            .expect("tag in table");
        outcome_counts[slot] += 1;
        not_peelable += usize::from(!outcome.peelable);
        if let Some(s) = outcome.max_cluster_size {
            size_sum += s;
            size_count += 1;
            max_size = max_size.max(s);
        }
    }
    let failures = OutcomeTag::ALL
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_failure())
        .map(|(i, _)| outcome_counts[i])
        .sum::<usize>();
    let (ci_low, ci_high) = wilson_ci(failures, trials)?;
    Ok(RateResult {
        rate,
        trials,
        failures,
        failure_rate: failures as f64 / trials as f64,
        ci_low,
        ci_high,
        outcome_counts,
        not_peelable_fraction: not_peelable as f64 / trials as f64,
        mean_max_cluster_size: if size_count == 0 {
            0.0
        } else {
            size_sum as f64 / size_count as f64
        },
        max_cluster_size: max_size,
    })
}

/// One row of the cluster-size census at a fixed erasure rate.
#[derive(Clone, Debug, Serialize)]
pub struct StatsRow {
    pub rate: f64,
    pub trials: usize,
    pub not_peelable_fraction: f64,
    /// For each requested threshold `t`, the fraction of all trials whose
    /// maximum cluster size exceeds `t` (peelable trials count as zero).
    pub exceed_fractions: Vec<f64>,
}

/// Census of stopping-set cluster sizes: peels each sampled erasure (the
/// structure is syndrome-independent) and decomposes the residual without
/// solving anything.
pub fn cluster_stats(
    code: &CssCode,
    rates: &[f64],
    trials: usize,
    master_seed: u64,
    thresholds: &[usize],
) -> Result<Vec<StatsRow>, SimError> {
    check_config(&SimConfig {
        decoder: DecoderKind::Peeling,
        erasure_rates: rates.to_vec(),
        trials,
        master_seed,
    })?;
    let graph = crate::tanner::TannerGraph::from_matrix(code.h1());
    let zero = BitVector::zeros(code.h1().rows());
    let mut out = Vec::with_capacity(rates.len());
    for (rate_index, &rate) in rates.iter().enumerate() {
        let sizes: Vec<Option<usize>> = (0..trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = trial_rng(master_seed, rate_index, trial);
                let erasure = sample_erasure(code.n(), rate, &mut rng);
                let state = graph.peel(&zero, &erasure).expect("dimensions fixed");
                if state.is_empty() {
                    None
                } else {
                    let forest = crate::cluster::ClusterForest::build(&state, &graph);
                    Some(forest.max_cluster_size())
                }
            })
            .collect();
        let not_peelable = sizes.iter().filter(|s| s.is_some()).count();
        let exceed_fractions = thresholds
            .iter()
            .map(|&t| {
                let over = sizes.iter().filter(|s| s.is_some_and(|m| m > t)).count();
                over as f64 / trials as f64
            })
            .collect();
        out.push(StatsRow {
            rate,
            trials,
            not_peelable_fraction: not_peelable as f64 / trials as f64,
            exceed_fractions,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::repetition_code;

    fn rep3_code() -> CssCode {
        CssCode::hypergraph_product("hgp-rep3", &repetition_code(3), &repetition_code(3))
    }

    #[test]
    fn erasure_extremes() {
        let mut rng = trial_rng(0, 0, 0);
        assert!(sample_erasure(100, 0.0, &mut rng).is_zero());
        assert_eq!(sample_erasure(100, 1.0, &mut rng).weight(), 100);
    }

    #[test]
    fn erasure_weight_concentrates() {
        let mut rng = trial_rng(1, 0, 0);
        let n = 10_000;
        let weight = sample_erasure(n, 0.5, &mut rng).weight() as f64;
        // Four sigmas around n/2 for a binomial(n, 1/2).
        let sigma = (n as f64 * 0.25).sqrt();
        assert!((weight - 5000.0).abs() < 4.0 * sigma, "weight {weight}");
    }

    #[test]
    fn error_stays_on_erasure() {
        let mut rng = trial_rng(2, 0, 0);
        let erasure = sample_erasure(500, 0.3, &mut rng);
        let error = sample_error(&erasure, &mut rng);
        for v in error.support() {
            assert!(erasure.get(v));
        }
        assert!(sample_error(&BitVector::zeros(10), &mut rng).is_zero());
        let full = BitVector::from_bools(&vec![true; 10_000]);
        let weight = sample_error(&full, &mut rng).weight() as f64;
        let sigma = (10_000f64 * 0.25).sqrt();
        assert!((weight - 5000.0).abs() < 4.0 * sigma);
    }

    #[test]
    fn classify_cases() {
        let code = rep3_code();
        let error = BitVector::from_support(code.n(), &[0, 3]);
        let exact = Decoded {
            solution: Some(error.clone()),
            failure: None,
            peelable: true,
            cluster_sizes: vec![],
        };
        assert_eq!(classify(&code, &error, &exact).unwrap().tag, OutcomeTag::ExactMatch);

        // Differ by a row of h2: degenerate success.
        let mut degenerate = error.clone();
        degenerate.xor_assign(&code.h2().row(0));
        let decoded = Decoded {
            solution: Some(degenerate),
            failure: None,
            peelable: false,
            cluster_sizes: vec![2, 1],
        };
        let outcome = classify(&code, &error, &decoded).unwrap();
        assert_eq!(outcome.tag, OutcomeTag::DegenerateSuccess);
        assert_eq!(outcome.max_cluster_size, Some(2));

        // Differ by a logical operator: in the kernel of h1 but outside the
        // row space of h2. Found by scanning the kernel.
        let h2_space = RowSpace::new(code.h2());
        let logical = (0u32..1 << 13)
            .map(|mask| {
                BitVector::from_bools(&(0..13).map(|i| (mask >> i) & 1 == 1).collect::<Vec<_>>())
            })
            .find(|v| {
                !v.is_zero()
                    && code.h1().mul_vec(v).unwrap().is_zero()
                    && !h2_space.member(v).unwrap()
            })
            .expect("a [[13,1]] code has a logical X representative");
        let mut shifted = error.clone();
        shifted.xor_assign(&logical);
        let decoded = Decoded {
            solution: Some(shifted),
            failure: None,
            peelable: false,
            cluster_sizes: vec![],
        };
        assert_eq!(classify(&code, &error, &decoded).unwrap().tag, OutcomeTag::LogicalFailure);

        let missing = Decoded {
            solution: None,
            failure: Some(FailureKind::NoSolution),
            peelable: false,
            cluster_sizes: vec![],
        };
        assert_eq!(classify(&code, &error, &missing).unwrap().tag, OutcomeTag::NoSolution);
        let oversize = Decoded {
            solution: None,
            failure: Some(FailureKind::OversizeCluster),
            peelable: false,
            cluster_sizes: vec![30],
        };
        assert_eq!(
            classify(&code, &error, &oversize).unwrap().tag,
            OutcomeTag::OversizeCluster
        );
    }

    #[test]
    fn classify_rejects_unsound_solutions() {
        let code = rep3_code();
        let error = BitVector::from_support(code.n(), &[0]);
        let bogus = Decoded {
            solution: Some(BitVector::from_support(code.n(), &[1])),
            failure: None,
            peelable: true,
            cluster_sizes: vec![],
        };
        assert!(matches!(
            classify(&code, &error, &bogus),
            Err(SimError::UnsoundDecoder)
        ));
    }

    #[test]
    fn wilson_reference_values() {
        let (low, high) = wilson_ci(0, 100).unwrap();
        assert!(low.abs() < 1e-12);
        assert!((high - 0.03699349820698568).abs() < 1e-12);

        let (low, high) = wilson_ci(50, 100).unwrap();
        assert!((low - 0.4038315303659956).abs() < 1e-12);
        assert!((high - 0.5961684696340044).abs() < 1e-12);
        assert!(((high - low) - 0.19233693926800877).abs() < 1e-12);

        let (_, high) = wilson_ci(100, 100).unwrap();
        assert_eq!(high, 1.0);

        assert!(wilson_ci(0, 0).is_err());
    }

    #[test]
    fn zero_rate_never_fails() {
        let code = rep3_code();
        for decoder in [
            DecoderKind::Peeling,
            DecoderKind::Cluster { bound: Some(1) },
            DecoderKind::Gaussian,
        ] {
            let cfg = SimConfig {
                decoder,
                erasure_rates: vec![0.0],
                trials: 50,
                master_seed: 9,
            };
            let result = run_trials(&code, &cfg).unwrap();
            assert_eq!(result.per_rate[0].failures, 0);
            assert_eq!(result.per_rate[0].not_peelable_fraction, 0.0);
        }
    }

    #[test]
    fn identical_seeds_reproduce_results() {
        let code = rep3_code();
        let cfg = SimConfig {
            decoder: DecoderKind::Cluster { bound: Some(3) },
            erasure_rates: vec![0.2, 0.35],
            trials: 400,
            master_seed: 77,
        };
        let a = run_trials(&code, &cfg).unwrap();
        let serial_pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = serial_pool.install(|| run_trials(&code, &cfg)).unwrap();
        for (x, y) in a.per_rate.iter().zip(&b.per_rate) {
            assert_eq!(x.outcome_counts, y.outcome_counts);
            assert_eq!(x.failure_rate, y.failure_rate);
            assert_eq!(x.ci_low, y.ci_low);
            assert_eq!(x.not_peelable_fraction, y.not_peelable_fraction);
        }
    }

    #[test]
    fn peeling_dominates_cluster_failures_with_shared_seeds() {
        let code = rep3_code();
        let base = SimConfig {
            decoder: DecoderKind::Peeling,
            erasure_rates: vec![0.3],
            trials: 1500,
            master_seed: 5,
        };
        let peeling = run_trials(&code, &base).unwrap();
        let cluster = run_trials(
            &code,
            &SimConfig {
                decoder: DecoderKind::Cluster { bound: None },
                ..base.clone()
            },
        )
        .unwrap();
        let no_solution = |r: &SimResult| r.per_rate[0].outcome_counts[0];
        assert!(no_solution(&peeling) >= no_solution(&cluster));
        assert_eq!(no_solution(&cluster), 0, "unbounded clusters always solve");
    }

    #[test]
    fn bounded_failures_shrink_with_looser_bounds() {
        let code = rep3_code();
        let counts: Vec<usize> = [Some(1), Some(3), None]
            .into_iter()
            .map(|bound| {
                let cfg = SimConfig {
                    decoder: DecoderKind::Cluster { bound },
                    erasure_rates: vec![0.4],
                    trials: 1200,
                    master_seed: 21,
                };
                let r = run_trials(&code, &cfg).unwrap();
                // NoSolution + OversizeCluster counts.
                r.per_rate[0].outcome_counts[0] + r.per_rate[0].outcome_counts[4]
            })
            .collect();
        assert!(counts[0] >= counts[1]);
        assert!(counts[1] >= counts[2]);
        assert_eq!(counts[2], 0);
    }

    #[test]
    fn stats_trivial_and_monotone() {
        let code = rep3_code();
        let rows = cluster_stats(&code, &[0.0, 1.0], 200, 3, &[1, 2, 10]).unwrap();
        assert_eq!(rows[0].not_peelable_fraction, 0.0);
        assert_eq!(rows[0].exceed_fractions, vec![0.0, 0.0, 0.0]);
        // Fully erased: every check keeps at least two neighbors, so nothing
        // peels.
        assert_eq!(rows[1].not_peelable_fraction, 1.0);
        // Larger thresholds are exceeded no more often.
        for row in &rows {
            for pair in row.exceed_fractions.windows(2) {
                assert!(pair[0] >= pair[1]);
            }
        }
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let code = rep3_code();
        let bad_rate = SimConfig {
            decoder: DecoderKind::Peeling,
            erasure_rates: vec![1.5],
            trials: 10,
            master_seed: 0,
        };
        assert!(matches!(run_trials(&code, &bad_rate), Err(SimError::BadRate(_))));
        let no_trials = SimConfig {
            decoder: DecoderKind::Peeling,
            erasure_rates: vec![0.1],
            trials: 0,
            master_seed: 0,
        };
        assert!(matches!(run_trials(&code, &no_trials), Err(SimError::NoTrials)));
    }
}

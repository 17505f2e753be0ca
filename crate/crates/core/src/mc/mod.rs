//! Monte Carlo cross-validation: sample the Wishart realization of the
//! delay-time distribution and estimate tau_k numerically, independently of
//! every exact route in this crate.
//!
//! Reproducibility contract: samples are partitioned into fixed blocks of
//! [`SAMPLES_PER_BLOCK`]; block b draws from ChaCha8 seeded with seed + b,
//! and matrix entries are consumed row-major, real part before imaginary
//! part. Block summaries are folded in block order, so the estimate is
//! bit-identical for any worker count: `shards` sizes the thread pool and
//! nothing else.

mod jacobi;

pub use jacobi::{eigvals_hermitian, eigvals_symmetric, MAX_DIM};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moments::Beta;

/// Fixed substream length of the sampling protocol.
pub const SAMPLES_PER_BLOCK: u64 = 1024;

/// The generator and draw protocol, recorded in outputs for reproducibility.
pub const RNG_SPEC: &str = "ChaCha8 (rand_chacha 0.3); block b of 1024 samples seeded seed+b; \
                            X drawn row-major, re before im";

/// A Monte Carlo estimate of tau_k at finite N. `stderr` is the sample
/// standard deviation over samples divided by sqrt(samples) (zero when a
/// single sample gives it no meaning); the estimate is deterministic given
/// (seed, samples) alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MCEstimate {
    pub beta: u32,
    pub n: usize,
    pub k: u32,
    pub samples: u64,
    pub mean: f64,
    pub stderr: f64,
    pub seed: u64,
    pub shards: usize,
}

/// Running mean and centered second moment (Welford), merged pairwise in
/// fixed order so the reduction does not depend on scheduling.
#[derive(Clone, Copy)]
struct Summary {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Summary {
    fn empty() -> Summary {
        Summary { count: 0, mean: 0.0, m2: 0.0 }
    }

    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Summary) -> Summary {
        if other.count == 0 {
            return self;
        }
        if self.count == 0 {
            return other;
        }
        let total = self.count + other.count;
        let delta = other.mean - self.mean;
        Summary {
            count: total,
            mean: self.mean + delta * (other.count as f64 / total as f64),
            m2: self.m2
                + other.m2
                + delta * delta * (self.count as f64 * other.count as f64 / total as f64),
        }
    }
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    StandardNormal.sample(rng)
}

/// One Wishart draw W = X X^dagger and its eigenvalues. For beta = 2, X is
/// N x 2N with complex entries whose real and imaginary parts are each
/// Normal(0, 1/2) (unit variance per entry); for beta = 1, X is N x (2N+1)
/// real standard normal. Entry order is part of the protocol.
fn wishart_eigenvalues(beta: Beta, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<f64>> {
    match beta {
        Beta::Two => {
            let m = 2 * n;
            let root_half = std::f64::consts::FRAC_1_SQRT_2;
            let mut xre = vec![vec![0.0; m]; n];
            let mut xim = vec![vec![0.0; m]; n];
            for i in 0..n {
                for t in 0..m {
                    xre[i][t] = root_half * standard_normal(rng);
                    xim[i][t] = root_half * standard_normal(rng);
                }
            }
            let mut wre = vec![vec![0.0; n]; n];
            let mut wim = vec![vec![0.0; n]; n];
            for i in 0..n {
                for j in i..n {
                    let mut re = 0.0;
                    let mut im = 0.0;
                    for t in 0..m {
                        re += xre[i][t] * xre[j][t] + xim[i][t] * xim[j][t];
                        im += xim[i][t] * xre[j][t] - xre[i][t] * xim[j][t];
                    }
                    wre[i][j] = re;
                    wre[j][i] = re;
                    wim[i][j] = im;
                    wim[j][i] = -im;
                }
                wim[i][i] = 0.0;
            }
            eigvals_hermitian(&wre, &wim)
        }
        Beta::One => {
            let m = 2 * n + 1;
            let mut x = vec![vec![0.0; m]; n];
            for row in x.iter_mut() {
                for entry in row.iter_mut() {
                    *entry = standard_normal(rng);
                }
            }
            let mut w = vec![vec![0.0; n]; n];
            for i in 0..n {
                for j in i..n {
                    let dot: f64 = (0..m).map(|t| x[i][t] * x[j][t]).sum();
                    w[i][j] = dot;
                    w[j][i] = dot;
                }
            }
            eigvals_symmetric(&w)
        }
    }
}

fn block_summary(beta: Beta, n: usize, k: u32, count: u64, block_seed: u64) -> Result<Summary> {
    let mut rng = ChaCha8Rng::seed_from_u64(block_seed);
    let scale = (n as f64).powi(k as i32 - 1);
    let mut summary = Summary::empty();
    for _ in 0..count {
        let eigenvalues = wishart_eigenvalues(beta, n, &mut rng)?;
        let trace: f64 = eigenvalues.iter().map(|l| l.powi(-(k as i32))).sum();
        summary.push(scale * trace);
    }
    Ok(summary)
}

/// Estimate tau_k^(beta)(N) = N^(k-1) E[Tr W^(-k)] by direct sampling of the
/// Wishart realization, diagonalizing each draw. Requires N > k (beta = 2)
/// resp. N > 2k (beta = 1, conservative) so the estimated moment is finite;
/// the eigensolver caps N at 128 (beta = 2, embedded) resp. 256 (beta = 1).
pub fn sample_delay_moment(
    beta: Beta,
    n: usize,
    k: u32,
    samples: u64,
    seed: u64,
    shards: usize,
) -> Result<MCEstimate> {
    if k == 0 {
        return Err(Error::InvalidArgument { what: "moment order k must be positive".to_string() });
    }
    if samples == 0 {
        return Err(Error::InvalidArgument { what: "need at least one sample".to_string() });
    }
    if shards == 0 {
        return Err(Error::InvalidArgument { what: "need at least one shard".to_string() });
    }
    let required = match beta {
        Beta::Two => k as usize,
        Beta::One => 2 * k as usize,
    };
    if n <= required {
        return Err(Error::DivergentMoment {
            context: format!(
                "beta = {}, N = {n}, k = {k}: the estimator requires N > {required}",
                beta.value()
            ),
        });
    }
    let blocks = samples.div_ceil(SAMPLES_PER_BLOCK);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(shards).build().map_err(|e| {
        Error::CheckFailed { what: format!("could not build sampling thread pool: {e}") }
    })?;
    let summaries: Result<Vec<Summary>> = pool.install(|| {
        (0..blocks)
            .into_par_iter()
            .map(|b| {
                let count = SAMPLES_PER_BLOCK.min(samples - b * SAMPLES_PER_BLOCK);
                block_summary(beta, n, k, count, seed.wrapping_add(b))
            })
            .collect()
    });
    let merged = summaries?.into_iter().fold(Summary::empty(), Summary::merge);
    debug_assert_eq!(merged.count, samples);
    let stderr = if merged.count >= 2 {
        (merged.m2 / (merged.count - 1) as f64).sqrt() / (merged.count as f64).sqrt()
    } else {
        0.0
    };
    Ok(MCEstimate {
        beta: beta.value(),
        n,
        k,
        samples,
        mean: merged.mean,
        stderr,
        seed,
        shards,
    })
}

use thiserror::Error;

/// Errors surfaced by the exact computations. Verification *failures* are not
/// errors: verifiers return a verdict instead (see `integrality`).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("branch undefined: series square root requires constant term 1, got {got}")]
    BranchUndefined { got: String },

    #[error("series inversion requires nonzero constant term")]
    NonInvertibleSeries,

    #[error("expansion in 1/N undefined: numerator degree {num_deg} exceeds denominator degree {den_deg}")]
    PositiveLeadingPower { num_deg: usize, den_deg: usize },

    #[error("pole: denominator vanishes at N = {at}")]
    Pole { at: String },

    #[error("unsupported symmetry class beta = {beta}; only beta = 1 and beta = 2 have recursions")]
    UnsupportedBeta { beta: u32 },

    #[error("moment diverges or Gamma argument non-positive: k = {k}, N = {n}")]
    GammaDomain { k: u32, n: u32 },

    #[error("singular recursion coefficient at k = {k}: {context}")]
    SingularCoefficient { k: i64, context: String },

    #[error("divergent moment: {context}")]
    DivergentMoment { context: String },

    #[error("pole of J_k at zeta^2 = 1/{j}^2")]
    JPole { j: u32 },

    #[error("functional form violated: coefficient of z^{index} in R_{g} product is nonzero")]
    FunctionalFormViolated { g: u32, index: usize },

    #[error("degenerate index: B_k requires k >= 2, got {k}")]
    DegenerateIndex { k: u32 },

    #[error("monotonicity failure: C_{index} is smaller than its predecessor in the bound sequence")]
    MonotonicityFailure { index: usize },

    #[error("matrix not symmetric: relative asymmetry {asymmetry:.3e} exceeds 1e-10")]
    NotSymmetric { asymmetry: f64 },

    #[error("eigenvalue iteration did not converge after {sweeps} sweeps")]
    NonConvergence { sweeps: usize },

    #[error("internal consistency check failed: {what}")]
    CheckFailed { what: String },

    #[error("invalid argument: {what}")]
    InvalidArgument { what: String },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("invalid factor index {index} for basis with {n_factors} factors")]
    InvalidFactor { index: usize, n_factors: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("degenerate band: gap {gap:.3e} too small relative to splitting {splitting:.3e}")]
    DegenerateBand { gap: f64, splitting: f64 },

    #[error("initial state `{which}` is not available for {n} particle(s)")]
    InvalidInitialState { which: String, n: usize },

    #[error("state norm grew by {drift:.3e} within one step; integration unstable")]
    NormDrift { drift: f64 },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("relaxation fit did not converge: {0}")]
    FitNonConvergent(String),

    #[error("series shows no resolvable damping (fitted tau {tau:.3e} exceeds {limit:.3e})")]
    UndefinedRelaxation { tau: f64, limit: f64 },

    #[error("series covers {covered:.1} time units but the fit needs roughly {needed:.1}; rerun with a longer t_max")]
    SeriesTooShort { covered: f64, needed: f64 },

    #[error("steady-state solve failed: {0}")]
    SteadyState(String),

    #[error("trajectory {traj_index} failed: {source}")]
    Trajectory {
        traj_index: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("while sweeping u0 = {u0}: {source}")]
    Sweep {
        u0: f64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

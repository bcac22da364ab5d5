use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the simulation pipeline.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parameter domain: {0}")]
    ParamDomain(String),

    #[error("exchange energy singular: |eps_m| >= U")]
    ExchangeSingularity,

    #[error("charge-basis cutoff too small or not converged: {0}")]
    CutoffConvergence(String),

    #[error("no bias in (0, 0.5) reaches the requested parity splitting")]
    InfeasibleBias,

    #[error("degenerate conditional ladder: delta_omega_c = 0")]
    DegenerateLadder,

    #[error("time {t} ns outside pulse support [0, {t_g}] ns")]
    OutsidePulse { t: f64, t_g: f64 },

    #[error("numerical differentiation step underflowed")]
    StepUnderflow,

    #[error("integration failed: {0}")]
    Integration(String),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("pulse synthesis failed, best residuals |r0|={r0:.3e} |r1|={r1:.3e} |r2|={r2:.3e}")]
    Synthesis { r0: f64, r1: f64, r2: f64 },

    #[error("no stage-2 phase reaches the target conditional phase")]
    PhaseInfeasible,

    #[error("conditional phases ill-defined, residual excitation per block {0:?}")]
    Leakage([f64; 4]),

    #[error("matrix is not unitary")]
    NonUnitary,

    #[error("capacitance network: {0}")]
    Network(String),

    #[error("noise model: {0}")]
    Noise(String),

    #[error("analytic dephasing requires beta = 1, got {0}; use the spectral or Monte-Carlo path")]
    UnsupportedBeta(f64),

    #[error("dephasing formula domain: omega_l * t = {0} >= 1")]
    DephasingDomain(f64),
}

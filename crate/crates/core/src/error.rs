use thiserror::Error;

/// Which Nikiforov-Uvarov constant had a negative radicand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Radicand {
    C8,
    C9,
}

impl std::fmt::Display for Radicand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Radicand::C8 => f.write_str("c8"),
            Radicand::C9 => f.write_str("c9"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{what} must be finite")]
    NonFinite { what: &'static str },

    #[error("{which} = {value:e} is negative; no normalizable solution")]
    NegativeRadicand { which: Radicand, value: f64 },

    #[error("radius must be positive, got {0}")]
    Domain(f64),

    #[error("no bound state for n = {n}, kappa = {kappa}")]
    NoBoundState { n: u32, kappa: i32 },

    #[error("both energy roots {roots:?} pass the bound-state filters for n = {n}, kappa = {kappa}")]
    AmbiguousBranch { n: u32, kappa: i32, roots: [f64; 2] },

    #[error("energy {energy} sits on the threshold where the companion component is undefined")]
    ThresholdEnergy { energy: f64 },

    #[error("energy condition residual {residual:e} exceeds tolerance at E = {energy}")]
    ResidualTooLarge { energy: f64, residual: f64 },

    #[error("grid too short: tail amplitude {tail:e} relative to peak")]
    UnconvergedTail { tail: f64 },

    #[error("secant iteration did not converge in {iterations} steps (last E = {last_energy})")]
    NoConvergence { iterations: usize, last_energy: f64 },

    #[error("grid has no eigenvector with {nodes} nodes")]
    NodeCountUnavailable { nodes: usize },

    #[error("converged energy {energy} is not bound (beta^2 = {beta_sq:e})")]
    NotBound { energy: f64, beta_sq: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

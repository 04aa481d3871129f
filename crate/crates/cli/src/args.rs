use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dirac_hulthen::SymmetryLimit;

#[derive(Parser, Debug)]
#[command(name = "dirac-hulthen", version, about = "Dirac bound states in Hulthén potentials with a Hulthén tensor term")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Energy of a single state
    Solve,
    /// The eight-row energy table at --u0 and at U0 = 0
    Table,
    /// Doublet splitting against the tensor strength
    Doublets(DoubletArgs),
    /// The centrifugal approximant against 1/r²
    Approx(ApproxArgs),
    /// Normalized radial components F(r), G(r)
    Wavefunction(WavefunctionArgs),
    /// Finite-difference cross-check of the closed-form energies
    Oracle(OracleArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    #[arg(long, global = true, default_value = "pspin", value_parser = parse_symmetry)]
    pub symmetry: SymmetryLimit,

    /// Fermion mass, fm⁻¹
    #[arg(long, global = true, default_value_t = 5.0, allow_negative_numbers = true)]
    pub mass: f64,

    /// Screening parameter, fm⁻¹
    #[arg(long, global = true, default_value_t = 0.1, allow_negative_numbers = true)]
    pub delta: f64,

    /// Vector potential strength, fm⁻¹
    #[arg(long, global = true, default_value_t = 2.5, allow_negative_numbers = true)]
    pub v0: f64,

    /// Scalar potential strength, fm⁻¹
    #[arg(long, global = true, default_value_t = 2.9, allow_negative_numbers = true)]
    pub s0: f64,

    /// Tensor strength, fm⁻¹
    #[arg(long, global = true, default_value_t = 0.1, allow_negative_numbers = true)]
    pub u0: f64,

    /// Symmetry constant C_ps or C_s, fm⁻¹
    #[arg(long = "c-sym", global = true, default_value_t = 0.0, allow_negative_numbers = true)]
    pub c_sym: f64,

    /// Radial quantum number entering the energy formula
    #[arg(long, global = true)]
    pub n: Option<u32>,

    #[arg(long, global = true, allow_negative_numbers = true)]
    pub kappa: Option<i32>,

    /// State by spectroscopic name, e.g. 1d5/2 (alternative to --n/--kappa)
    #[arg(long, global = true, conflicts_with_all = ["n", "kappa"])]
    pub state: Option<String>,

    /// Write the CSV here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Decimal places for energies
    #[arg(long, global = true, default_value_t = 9)]
    pub precision: usize,
}

#[derive(Args, Debug, Clone)]
pub struct DoubletArgs {
    /// One member of the doublet by spectroscopic name
    #[arg(long)]
    pub pair: Option<String>,

    #[arg(long, default_value_t = 0.0)]
    pub u0_start: f64,

    #[arg(long, default_value_t = 1.0)]
    pub u0_stop: f64,

    #[arg(long, default_value_t = 0.1)]
    pub u0_step: f64,
}

#[derive(Args, Debug, Clone)]
pub struct ApproxArgs {
    /// Screening parameters to scan, fm⁻¹
    #[arg(long, value_delimiter = ',', default_values_t = [0.01, 0.1])]
    pub deltas: Vec<f64>,

    #[arg(long, default_value_t = 0.25)]
    pub r_start: f64,

    #[arg(long, default_value_t = 10.0)]
    pub r_stop: f64,

    #[arg(long, default_value_t = 0.25)]
    pub r_step: f64,
}

#[derive(Args, Debug, Clone)]
pub struct WavefunctionArgs {
    /// Outer radius, fm (default: 40 decay lengths)
    #[arg(long)]
    pub r_max: Option<f64>,

    #[arg(long)]
    pub points: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OdeKind {
    Approximated,
    Exact,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedRoot {
    /// The closed-form (q > 0) energy
    Analytic,
    /// The other root of the reduced quadratic
    Conjugate,
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    /// Every state of both tables at --u0 and at U0 = 0
    #[arg(long)]
    pub all_tables: bool,

    #[arg(long, value_enum, default_value = "approximated")]
    pub ode: OdeKind,

    #[arg(long, value_enum, default_value = "analytic")]
    pub seed: SeedRoot,

    /// Inner wall, fm (default 1e-3)
    #[arg(long)]
    pub r_min: Option<f64>,

    /// Outer wall, fm (default 60/δ)
    #[arg(long)]
    pub r_max: Option<f64>,

    /// Coarse grid points (default 8001)
    #[arg(long)]
    pub grid_points: Option<usize>,
}

fn parse_symmetry(s: &str) -> Result<SymmetryLimit, String> {
    s.parse().map_err(|e: dirac_hulthen::Error| e.to_string())
}

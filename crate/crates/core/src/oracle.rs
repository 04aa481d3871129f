//! Finite-difference eigensolver for the effective radial equations.
//!
//! Independent of the Nikiforov-Uvarov route: the radial equation
//! ψ'' = [W(r; E) + β²(E)] ψ is discretized with second-order central
//! differences on a uniform grid with Dirichlet ends, the eigenvalue with
//! the requested node count is extracted by Sturm bisection, and E is
//! iterated by the secant method until λ_n(E) + β²(E) = 0.

use crate::error::{Error, Result};
use crate::hulthen::{hulthen_term, pekeris_approximant, PhysicalParameters, SymmetryLimit};
use crate::tridiag::{sign_changes, SymTridiagonal};

/// Which radial equation the oracle discretizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EffectivePotentialKind {
    /// Centrifugal 1/r² and tensor 1/r replaced by their Hulthén-type
    /// approximants, the equation the closed form solves.
    ApproximatedOde,
    /// True 1/r² and 1/r terms.
    ExactOde,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub grid_points: usize,
    pub energy_tol: f64,
    pub max_outer_iters: usize,
}

impl OracleConfig {
    /// r ∈ [10⁻³, 60/δ] fm with 8001 points.
    pub fn for_params(params: &PhysicalParameters) -> Self {
        Self {
            r_min: 1e-3,
            r_max: 60.0 / params.delta,
            grid_points: 8001,
            energy_tol: 1e-11,
            max_outer_iters: 60,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.r_min > 0.0
            && self.r_max > self.r_min
            && self.grid_points >= 64
            && self.energy_tol > 0.0
            && self.max_outer_iters > 0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!("invalid oracle config {self:?}")))
        }
    }
}

/// Result of [`fd_eigenvalue`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdSolution {
    /// Richardson-extrapolated energy, fm⁻¹.
    pub energy: f64,
    /// Energy on the configured grid.
    pub energy_coarse: f64,
    /// Energy on the grid with half the spacing.
    pub energy_fine: f64,
    pub h_coarse: f64,
    pub h_fine: f64,
    /// Secant iterations summed over both grids.
    pub iterations: usize,
    /// Interior sign changes of the fine-grid eigenvector.
    pub nodes: usize,
}

/// W(r; E) such that the radial equation reads ψ'' − W ψ = β²(E) ψ.
pub fn build_effective_potential(
    params: &PhysicalParameters,
    limit: SymmetryLimit,
    kappa: i32,
    energy: f64,
    kind: EffectivePotentialKind,
    r: f64,
) -> Result<f64> {
    let (fixed, slope) = potential_parts(params, limit, kappa, kind, r)?;
    Ok(fixed + slope * energy)
}

/// W split as fixed + slope·E.
fn potential_parts(
    params: &PhysicalParameters,
    limit: SymmetryLimit,
    kappa: i32,
    kind: EffectivePotentialKind,
    r: f64,
) -> Result<(f64, f64)> {
    let h = hulthen_term(params.delta, r)?;
    let h2 = h * h;
    let d = params.delta;
    let u0 = params.tensor_u0;
    let k = f64::from(kappa);
    let (m, c) = (params.mass, params.symmetry_c);
    let centrifugal = match limit {
        SymmetryLimit::PSpin => k * (k - 1.0),
        SymmetryLimit::Spin => k * (k + 1.0),
    };
    let (inv_r2, inv_r) = match kind {
        EffectivePotentialKind::ApproximatedOde => (pekeris_approximant(d, r)?, d * h),
        EffectivePotentialKind::ExactOde => (1.0 / (r * r), 1.0 / r),
    };
    let tensor = centrifugal * inv_r2 + 2.0 * k * u0 * h * inv_r + u0 * u0 * h2;
    Ok(match limit {
        // γ̃Δ0 h with γ̃ = E − M − C_ps
        SymmetryLimit::PSpin => {
            let d0 = params.delta0();
            (tensor - u0 * d * (h + h2) - (m + c) * d0 * h, d0 * h)
        }
        // γΣ0 h with γ = M + E − C_s
        SymmetryLimit::Spin => {
            let s0 = params.sigma0();
            (tensor + u0 * d * (h + h2) + (m - c) * s0 * h, s0 * h)
        }
    })
}

/// Uniform-grid discretization with the E-independent and E-linear parts
/// of W precomputed.
struct Discretization {
    h: f64,
    fixed: Vec<f64>,
    slope: Vec<f64>,
}

impl Discretization {
    fn new(
        params: &PhysicalParameters,
        limit: SymmetryLimit,
        kappa: i32,
        kind: EffectivePotentialKind,
        r_min: f64,
        r_max: f64,
        points: usize,
    ) -> Result<Self> {
        let h = (r_max - r_min) / (points - 1) as f64;
        let mut fixed = Vec::with_capacity(points - 2);
        let mut slope = Vec::with_capacity(points - 2);
        for i in 1..points - 1 {
            let (a, b) = potential_parts(params, limit, kappa, kind, r_min + h * i as f64)?;
            fixed.push(a);
            slope.push(b);
        }
        Ok(Self { h, fixed, slope })
    }

    fn matrix(&self, energy: f64) -> SymTridiagonal {
        let inv_h2 = 1.0 / (self.h * self.h);
        let diag = self
            .fixed
            .iter()
            .zip(&self.slope)
            .map(|(a, b)| 2.0 * inv_h2 + a + b * energy)
            .collect();
        SymTridiagonal { diag, off: vec![-inv_h2; self.fixed.len() - 1] }
    }

    fn eigenvalue(&self, energy: f64, nodes: usize) -> Result<f64> {
        self.matrix(energy)
            .eigenvalue(nodes)
            .ok_or(Error::NodeCountUnavailable { nodes })
    }
}

struct Secant {
    energy: f64,
    iterations: usize,
}

fn secant(
    mut f: impl FnMut(f64) -> Result<f64>,
    e0: f64,
    e1: f64,
    tol: f64,
    max_iters: usize,
) -> Result<Secant> {
    let (mut x0, mut x1) = (e0, e1);
    let mut f0 = f(x0)?;
    let mut f1 = f(x1)?;
    for it in 1..=max_iters {
        let denom = f1 - f0;
        if denom == 0.0 || !denom.is_finite() {
            return Err(Error::NoConvergence { iterations: it, last_energy: x1 });
        }
        let x2 = x1 - f1 * (x1 - x0) / denom;
        if !x2.is_finite() {
            return Err(Error::NoConvergence { iterations: it, last_energy: x1 });
        }
        if (x2 - x1).abs() <= tol {
            return Ok(Secant { energy: x2, iterations: it });
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1)?;
    }
    Err(Error::NoConvergence { iterations: max_iters, last_energy: x1 })
}

/// Energy of the state with `node_target` interior nodes, iterated from
/// `seed` ± 10⁻³ fm⁻¹ on the configured grid and refined on a grid of half
/// the spacing; the two are Richardson-extrapolated.
pub fn fd_eigenvalue(
    params: &PhysicalParameters,
    limit: SymmetryLimit,
    kappa: i32,
    kind: EffectivePotentialKind,
    node_target: usize,
    config: &OracleConfig,
    seed: f64,
) -> Result<FdSolution> {
    params.validate()?;
    config.validate()?;
    let beta_sq = |e: f64| params.beta_sq(limit, e);

    let coarse = Discretization::new(params, limit, kappa, kind, config.r_min, config.r_max, config.grid_points)?;
    let sc = secant(
        |e| Ok(coarse.eigenvalue(e, node_target)? + beta_sq(e)),
        seed - 1e-3,
        seed + 1e-3,
        config.energy_tol,
        config.max_outer_iters,
    )?;

    let fine_points = 2 * config.grid_points - 1;
    let fine = Discretization::new(params, limit, kappa, kind, config.r_min, config.r_max, fine_points)?;
    let sf = secant(
        |e| Ok(fine.eigenvalue(e, node_target)? + beta_sq(e)),
        sc.energy - 1e-5,
        sc.energy + 1e-5,
        config.energy_tol,
        config.max_outer_iters,
    )?;

    let energy = sf.energy + (sf.energy - sc.energy) / 3.0;
    let b2 = beta_sq(energy);
    if !(b2 > 0.0) {
        return Err(Error::NotBound { energy, beta_sq: b2 });
    }

    let matrix = fine.matrix(sf.energy);
    let lambda = fine.eigenvalue(sf.energy, node_target)?;
    let vector = matrix.eigenvector(lambda);
    let peak = vector.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let nodes = sign_changes(&vector, 1e-10 * peak);

    Ok(FdSolution {
        energy,
        energy_coarse: sc.energy,
        energy_fine: sf.energy,
        h_coarse: coarse.h,
        h_fine: fine.h,
        iterations: sc.iterations + sf.iterations,
        nodes,
    })
}

/// One row of the centrifugal-approximation comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxRow {
    pub delta: f64,
    pub r: f64,
    pub exact: f64,
    pub approximant: f64,
    /// (exact − approximant)/exact
    pub relative_error: f64,
}

pub const DEFAULT_SCAN_DELTAS: [f64; 2] = [0.01, 0.1];

/// r = 0.25, 0.5, …, 10 fm.
pub fn default_scan_radii() -> Vec<f64> {
    (1..=40).map(|i| 0.25 * f64::from(i)).collect()
}

/// 1/r² against its approximant for every (δ, r) pair, δ-major.
pub fn approx_error_scan(delta_values: &[f64], radii: &[f64]) -> Result<Vec<ApproxRow>> {
    let mut rows = Vec::with_capacity(delta_values.len() * radii.len());
    for &delta in delta_values {
        for &r in radii {
            let exact = 1.0 / (r * r);
            let approximant = pekeris_approximant(delta, r)?;
            rows.push(ApproxRow {
                delta,
                r,
                exact,
                approximant,
                relative_error: (exact - approximant) / exact,
            });
        }
    }
    Ok(rows)
}

//! Closed-form energy spectrum, state enumeration and doublet splitting.
//!
//! With Ñ = n + ½ + η the energy condition reduces to
//!
//! ```text
//! q(E) = (Ñ² − K + T(E)) / (2Ñ),     δ² q(E)² = β²(E)
//! ```
//!
//! where q = √β²/δ, K = (κ ∓ ½)² + u(u + 2κ) − ¼ with u = U0/δ, and T(E) is
//! γ̃Δ0/δ² (pseudospin) or γΣ0/δ² (spin). q is affine in E and β² is
//! quadratic, so the pair is a quadratic equation in E.

use crate::error::{Error, Result};
use crate::hulthen::{to_nu_problem, PhysicalParameters, StateLabel, SymmetryLimit};
use crate::nu::{derive_constants, energy_residual};

/// Largest accepted |residual| of the energy condition.
pub const RESIDUAL_TOL: f64 = 1e-10;

/// Energies within this distance of M + C_ps (or −M + C_s) are rejected.
pub const THRESHOLD_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub label: StateLabel,
    pub limit: SymmetryLimit,
    pub params: PhysicalParameters,
    /// fm⁻¹
    pub energy: f64,
    /// √β²/δ
    pub q: f64,
    /// η̃ (pseudospin) or η (spin)
    pub eta: f64,
    /// n + ½ + η
    pub n_tilde: f64,
    /// Energy-condition residual at `energy`.
    pub residual: f64,
}

impl BoundState {
    pub fn beta_sq(&self) -> f64 {
        self.params.beta_sq(self.limit, self.energy)
    }

    /// Decay rate √β² = δq of the radial tail, fm⁻¹.
    pub fn decay_rate(&self) -> f64 {
        self.params.delta * self.q
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubletReport {
    pub partner_a: BoundState,
    pub partner_b: BoundState,
    /// E_a − E_b, fm⁻¹
    pub splitting: f64,
}

/// One point of a U0 sweep. `report` is `None` when either partner has no
/// bound state at that U0.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub u0: f64,
    pub report: Option<DoubletReport>,
}

/// η = |κ + u − ½| (pseudospin) or |κ + u + ½| (spin), the square root of
/// (κ ∓ ½)² + u(u + 2κ ∓ 1).
pub fn eta(limit: SymmetryLimit, kappa: i32, u: f64) -> f64 {
    let k = f64::from(kappa);
    match limit {
        SymmetryLimit::PSpin => (k + u - 0.5).abs(),
        SymmetryLimit::Spin => (k + u + 0.5).abs(),
    }
}

/// (κ ∓ ½)² + u(u + 2κ) − ¼.
fn k_constant(limit: SymmetryLimit, kappa: i32, u: f64) -> f64 {
    let k = f64::from(kappa);
    let shifted = match limit {
        SymmetryLimit::PSpin => k - 0.5,
        SymmetryLimit::Spin => k + 0.5,
    };
    shifted * shifted + u * (u + 2.0 * k) - 0.25
}

/// The reduced energy condition for one state: q(E) = q0 + q1·E.
#[derive(Debug, Clone, Copy)]
struct Reduction {
    q0: f64,
    q1: f64,
    eta: f64,
    n_tilde: f64,
}

impl Reduction {
    fn new(params: &PhysicalParameters, limit: SymmetryLimit, label: StateLabel) -> Self {
        let u = params.tensor_ratio();
        let eta = eta(limit, label.kappa, u);
        let n_tilde = f64::from(label.n) + 0.5 + eta;
        assert!(n_tilde > 0.0);
        let d2 = params.delta * params.delta;
        let (m, c) = (params.mass, params.symmetry_c);
        // T(E) = t0 + t1 E
        let (t0, t1) = match limit {
            SymmetryLimit::PSpin => {
                let d0 = params.delta0() / d2;
                (-(m + c) * d0, d0)
            }
            SymmetryLimit::Spin => {
                let s0 = params.sigma0() / d2;
                ((m - c) * s0, s0)
            }
        };
        let k = k_constant(limit, label.kappa, u);
        let two_n = 2.0 * n_tilde;
        Self {
            q0: (n_tilde * n_tilde - k + t0) / two_n,
            q1: t1 / two_n,
            eta,
            n_tilde,
        }
    }

    fn q(&self, energy: f64) -> f64 {
        self.q0 + self.q1 * energy
    }

    /// Roots of δ² q(E)² − β²(E) = 0, polished by Newton steps.
    fn roots(&self, params: &PhysicalParameters, limit: SymmetryLimit) -> Vec<f64> {
        let d2 = params.delta * params.delta;
        let (m, c) = (params.mass, params.symmetry_c);
        // β²(E) = −E² + C E + M(M ± C)
        let mc = match limit {
            SymmetryLimit::PSpin => m * (m + c),
            SymmetryLimit::Spin => m * (m - c),
        };
        let a = d2 * self.q1 * self.q1 + 1.0;
        let b = 2.0 * d2 * self.q0 * self.q1 - c;
        let cc = d2 * self.q0 * self.q0 - mc;
        let disc = b * b - 4.0 * a * cc;
        if disc < 0.0 {
            return Vec::new();
        }
        let sq = disc.sqrt();
        let t = -0.5 * (b + b.signum() * sq);
        let mut roots = if t == 0.0 {
            vec![0.0]
        } else {
            vec![t / a, cc / t]
        };
        let g = |e: f64| {
            let q = self.q(e);
            d2 * q * q - params.beta_sq(limit, e)
        };
        let dg = |e: f64| 2.0 * d2 * self.q(e) * self.q1 + 2.0 * e - c;
        for root in roots.iter_mut() {
            for _ in 0..3 {
                let slope = dg(*root);
                if slope == 0.0 {
                    break;
                }
                let step = g(*root) / slope;
                if !step.is_finite() {
                    break;
                }
                *root -= step;
            }
        }
        roots
    }
}

/// Closed-form bound-state energy for `label`.
///
/// Of the two roots of the reduced quadratic, the one with q(E) > 0 and
/// β²(E) > 0 is returned.
pub fn solve_energy(
    params: &PhysicalParameters,
    limit: SymmetryLimit,
    label: StateLabel,
) -> Result<BoundState> {
    params.validate()?;
    if label.kappa == 0 {
        return Err(Error::InvalidParameters("kappa must be nonzero".into()));
    }
    let red = Reduction::new(params, limit, label);
    let threshold = params.threshold_energy(limit);
    let accepted: Vec<f64> = red
        .roots(params, limit)
        .into_iter()
        .filter(|&e| red.q(e) > 0.0 && params.beta_sq(limit, e) > 0.0)
        .filter(|&e| (e - threshold).abs() > THRESHOLD_TOL)
        .collect();

    let energy = match accepted.as_slice() {
        [] => return Err(Error::NoBoundState { n: label.n, kappa: label.kappa }),
        [e] => *e,
        [a, b, ..] => {
            return Err(Error::AmbiguousBranch {
                n: label.n,
                kappa: label.kappa,
                roots: [*a, *b],
            })
        }
    };

    let problem = to_nu_problem(params, limit, label.kappa, energy);
    let constants = derive_constants(&problem)?;
    let residual = energy_residual(&problem, &constants, label.n);
    if !(residual.abs() <= RESIDUAL_TOL) {
        return Err(Error::ResidualTooLarge { energy, residual });
    }

    Ok(BoundState {
        label,
        limit,
        params: *params,
        energy,
        q: params.beta_sq(limit, energy).sqrt() / params.delta,
        eta: red.eta,
        n_tilde: red.n_tilde,
        residual,
    })
}

/// The other root of the reduced quadratic, where q(E) < 0.
///
/// At this energy the approximated radial equation has a polynomial
/// solution decaying as e^{−δ|q|r}, so it is the eigenvalue a direct
/// numerical solve of that equation finds. Returns `None` when the root is
/// missing or unbound.
pub fn conjugate_energy(
    params: &PhysicalParameters,
    limit: SymmetryLimit,
    label: StateLabel,
) -> Option<f64> {
    let red = Reduction::new(params, limit, label);
    red.roots(params, limit)
        .into_iter()
        .find(|&e| red.q(e) < 0.0 && params.beta_sq(limit, e) > 0.0)
}

/// All bound states for κ in `kappas` (zero skipped) and n ≤ `n_max`,
/// sorted by (κ, n).
pub fn enumerate_states(
    params: &PhysicalParameters,
    limit: SymmetryLimit,
    kappas: impl IntoIterator<Item = i32>,
    n_max: u32,
) -> Vec<BoundState> {
    let mut kappas: Vec<i32> = kappas.into_iter().filter(|&k| k != 0).collect();
    kappas.sort_unstable();
    kappas.dedup();
    let mut out = Vec::new();
    for kappa in kappas {
        for n in 0..=n_max {
            let label = StateLabel { n, kappa };
            if let Ok(state) = solve_energy(params, limit, label) {
                out.push(state);
            }
        }
    }
    out
}

/// κ → 1 − κ (pseudospin) or κ → −1 − κ (spin) at the same n. `None` when
/// the partner would have κ = 0 (the s1/2 spin singlet, the p1/2
/// pseudospin singlet).
pub fn doublet_partner(label: StateLabel, limit: SymmetryLimit) -> Option<StateLabel> {
    let kappa = match limit {
        SymmetryLimit::PSpin => 1 - label.kappa,
        SymmetryLimit::Spin => -1 - label.kappa,
    };
    (kappa != 0).then_some(StateLabel { n: label.n, kappa })
}

pub fn doublet(
    params: &PhysicalParameters,
    limit: SymmetryLimit,
    label: StateLabel,
) -> Result<DoubletReport> {
    let partner = doublet_partner(label, limit).ok_or_else(|| {
        Error::InvalidParameters(format!("kappa = {} has no {limit} doublet partner", label.kappa))
    })?;
    let partner_a = solve_energy(params, limit, label)?;
    let partner_b = solve_energy(params, limit, partner)?;
    Ok(DoubletReport {
        partner_a,
        partner_b,
        splitting: partner_a.energy - partner_b.energy,
    })
}

/// Doublet splitting as a function of the tensor strength, in input order.
pub fn splitting_sweep(
    params: &PhysicalParameters,
    limit: SymmetryLimit,
    label: StateLabel,
    u0_values: &[f64],
) -> Vec<SweepPoint> {
    u0_values
        .iter()
        .map(|&u0| SweepPoint {
            u0,
            report: doublet(&params.with_u0(u0), limit, label).ok(),
        })
        .collect()
}

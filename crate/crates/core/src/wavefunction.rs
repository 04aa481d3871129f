//! Radial spinor components.
//!
//! The dominant component (G in the pseudospin limit, F in the spin limit)
//! has the closed form
//!
//! ```text
//! e^{−δq r} (1 − e^{−δr})^{η+½} P_n^(2q, 2η)(1 − 2e^{−δr})
//! ```
//!
//! and the companion follows from the first-order Dirac relation:
//!
//! ```text
//! PSpin:  F = (d/dr − κ/r + U) G / (M − E + C_ps)
//! Spin:   G = (d/dr + κ/r − U) F / (M + E − C_s)
//! ```

use crate::error::{Error, Result};
use crate::hulthen::SymmetryLimit;
use crate::spectrum::BoundState;
use crate::tridiag::sign_changes;

pub use crate::special::{jacobi_deriv, jacobi_eval};

/// Denominators of the companion relation below this are rejected.
pub const THRESHOLD_TOL: f64 = 1e-12;

/// Default grid: geometric from `GRID_R_MIN` to `GRID_DECAY_LENGTHS/(δq)`.
pub const GRID_R_MIN: f64 = 1e-6;
pub const GRID_DECAY_LENGTHS: f64 = 40.0;
pub const GRID_POINTS: usize = 4001;

/// Sampled upper (F) and lower (G) components on a common grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction {
    pub grid: Vec<f64>,
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
    /// Factor applied to the raw closed form; 1 before normalization.
    pub norm_constant: f64,
    pub state: BoundState,
}

impl RadialFunction {
    /// Raw (unnormalized) components of `state` on `grid`.
    pub fn sample(state: &BoundState, grid: &[f64]) -> Result<Self> {
        let dominant = grid
            .iter()
            .map(|&r| dominant_component(state, r))
            .collect::<Result<Vec<_>>>()?;
        let companion = companion_component(state, grid)?;
        let (upper, lower) = match state.limit {
            SymmetryLimit::PSpin => (companion, dominant),
            SymmetryLimit::Spin => (dominant, companion),
        };
        Ok(Self {
            grid: grid.to_vec(),
            upper,
            lower,
            norm_constant: 1.0,
            state: *state,
        })
    }

    /// Normalized components on [`default_grid`].
    pub fn normalized(state: &BoundState) -> Result<Self> {
        normalize(Self::sample(state, &default_grid(state))?)
    }

    pub fn dominant(&self) -> &[f64] {
        match self.state.limit {
            SymmetryLimit::PSpin => &self.lower,
            SymmetryLimit::Spin => &self.upper,
        }
    }

    pub fn companion(&self) -> &[f64] {
        match self.state.limit {
            SymmetryLimit::PSpin => &self.upper,
            SymmetryLimit::Spin => &self.lower,
        }
    }

    /// ∫(F² + G²) dr over the grid.
    pub fn norm_integral(&self) -> f64 {
        let density: Vec<f64> = self
            .upper
            .iter()
            .zip(&self.lower)
            .map(|(f, g)| f * f + g * g)
            .collect();
        simpson(&self.grid, &density)
    }

    /// Interior sign changes of the dominant component.
    pub fn dominant_nodes(&self) -> usize {
        let peak = peak_abs(self.dominant());
        sign_changes(self.dominant(), 1e-12 * peak)
    }

    /// Relative residual of the first-order relation that defines the
    /// companion, with d/dr of the dominant component taken numerically.
    ///
    /// PSpin: |(d/dr − κ/r + U) G − (M − E + C_ps) F|;
    /// Spin: |(d/dr + κ/r − U) F − (M + E − C_s) G|; both divided by the
    /// peak of the right-hand side.
    pub fn first_order_residual(&self) -> Result<f64> {
        let st = &self.state;
        let kappa = f64::from(st.label.kappa);
        let (sign, denom) = companion_sign_and_denominator(st)?;
        let scale = self.norm_constant;
        let mut max_res: f64 = 0.0;
        let mut max_rhs: f64 = 0.0;
        for (i, &r) in self.grid.iter().enumerate() {
            let step = 1e-3 * r.min(1.0 / st.decay_rate());
            let f = |x: f64| dominant_component(st, x).map(|v| v * scale);
            let d = five_point_derivative(f, r, step)?;
            let dom = self.dominant()[i];
            let u = st.params.tensor_potential(r)?;
            let lhs = d + sign * (kappa / r - u) * dom;
            let rhs = denom * self.companion()[i];
            max_res = max_res.max((lhs - rhs).abs());
            max_rhs = max_rhs.max(rhs.abs());
        }
        Ok(max_res / max_rhs)
    }
}

fn five_point_derivative(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    let (fm2, fm1, fp1, fp2) = (f(x - 2.0 * h)?, f(x - h)?, f(x + h)?, f(x + 2.0 * h)?);
    Ok((fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h))
}

fn peak_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

/// Geometric grid from [`GRID_R_MIN`] to 25/(δq) with [`GRID_POINTS`] points.
pub fn default_grid(state: &BoundState) -> Vec<f64> {
    geometric_grid(GRID_R_MIN, GRID_DECAY_LENGTHS / state.decay_rate(), GRID_POINTS)
}

pub fn geometric_grid(r_min: f64, r_max: f64, points: usize) -> Vec<f64> {
    assert!(points >= 2 && r_min > 0.0 && r_max > r_min);
    let ratio = (r_max / r_min).ln() / (points - 1) as f64;
    (0..points).map(|i| r_min * (ratio * i as f64).exp()).collect()
}

/// Unnormalized dominant component at r.
pub fn dominant_component(state: &BoundState, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(r));
    }
    let d = state.params.delta;
    let s = (-d * r).exp();
    let one_minus_s = -(-d * r).exp_m1();
    let (alpha, beta) = (2.0 * state.q, 2.0 * state.eta);
    Ok((-state.decay_rate() * r).exp()
        * one_minus_s.powf(state.eta + 0.5)
        * jacobi_eval(state.label.n, alpha, beta, 1.0 - 2.0 * s))
}

/// Analytic d/dr of [`dominant_component`].
pub fn dominant_derivative(state: &BoundState, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(r));
    }
    let d = state.params.delta;
    let n = state.label.n;
    let s = (-d * r).exp();
    let one_minus_s = -(-d * r).exp_m1();
    let p = state.eta + 0.5;
    let (alpha, beta) = (2.0 * state.q, 2.0 * state.eta);
    let x = 1.0 - 2.0 * s;
    let poly = jacobi_eval(n, alpha, beta, x);
    let dpoly = jacobi_deriv(n, alpha, beta, x);
    let decay = (-state.decay_rate() * r).exp();
    // d/dr (1−s)^p = p (1−s)^(p−1) δ s ;  dx/dr = 2δ s
    let weight = one_minus_s.powf(p);
    let dweight = p * one_minus_s.powf(p - 1.0) * d * s;
    Ok(decay * (-state.decay_rate() * weight * poly + dweight * poly + weight * dpoly * 2.0 * d * s))
}

fn companion_sign_and_denominator(state: &BoundState) -> Result<(f64, f64)> {
    let p = &state.params;
    let (sign, denom) = match state.limit {
        SymmetryLimit::PSpin => (-1.0, p.mass - state.energy + p.symmetry_c),
        SymmetryLimit::Spin => (1.0, p.mass + state.energy - p.symmetry_c),
    };
    if denom.abs() <= THRESHOLD_TOL {
        return Err(Error::ThresholdEnergy { energy: state.energy });
    }
    Ok((sign, denom))
}

/// Unnormalized companion component on `grid`.
pub fn companion_component(state: &BoundState, grid: &[f64]) -> Result<Vec<f64>> {
    let (sign, denom) = companion_sign_and_denominator(state)?;
    let kappa = f64::from(state.label.kappa);
    grid.iter()
        .map(|&r| {
            let value = dominant_component(state, r)?;
            let deriv = dominant_derivative(state, r)?;
            let u = state.params.tensor_potential(r)?;
            Ok((deriv + sign * (kappa / r - u) * value) / denom)
        })
        .collect()
}

/// Largest tail amplitude accepted by [`normalize`], relative to the peak.
pub const TAIL_TOL: f64 = 1e-10;

/// Scales both components so that ∫(F² + G²) dr = 1.
pub fn normalize(raw: RadialFunction) -> Result<RadialFunction> {
    let peak = peak_abs(&raw.upper).max(peak_abs(&raw.lower));
    let tail = raw.upper.last().unwrap_or(&0.0).abs().max(raw.lower.last().unwrap_or(&0.0).abs());
    if !(peak > 0.0) || tail > TAIL_TOL * peak {
        return Err(Error::UnconvergedTail { tail: tail / peak });
    }
    let scale = raw.norm_integral().sqrt().recip();
    let RadialFunction { grid, upper, lower, norm_constant, state } = raw;
    Ok(RadialFunction {
        grid,
        upper: upper.into_iter().map(|v| v * scale).collect(),
        lower: lower.into_iter().map(|v| v * scale).collect(),
        norm_constant: norm_constant * scale,
        state,
    })
}

/// Composite Simpson rule on an arbitrary ascending grid. Each pair of
/// intervals is integrated exactly for quadratics; a trailing single
/// interval uses the quadratic through the last three points.
pub fn simpson(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    if n < 2 {
        return 0.0;
    }
    if n == 2 {
        return 0.5 * (x[1] - x[0]) * (y[0] + y[1]);
    }
    let mut total = 0.0;
    let mut i = 0;
    while i + 2 < n {
        let h0 = x[i + 1] - x[i];
        let h1 = x[i + 2] - x[i + 1];
        let hs = h0 + h1;
        total += hs / 6.0
            * (y[i] * (2.0 - h1 / h0) + y[i + 1] * hs * hs / (h0 * h1) + y[i + 2] * (2.0 - h0 / h1));
        i += 2;
    }
    if i + 1 < n {
        // last interval [x[n-2], x[n-1]] from the quadratic through n-3..n-1
        let (h0, h1) = (x[n - 2] - x[n - 3], x[n - 1] - x[n - 2]);
        total += h1 / 6.0
            * (-y[n - 3] * h1 * h1 / (h0 * (h0 + h1))
                + y[n - 2] * (3.0 + h1 / h0)
                + y[n - 1] * (3.0 * h0 + 2.0 * h1) / (h0 + h1));
    }
    total
}

//! Hulthén potentials, the Pekeris-type centrifugal approximation and the
//! mapping of a physical state onto the Nikiforov-Uvarov template.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::nu::NuProblem;

/// Potential strengths and mass, all in fm⁻¹.
///
/// `tensor_u0` enters only through U0 and U0/δ. `symmetry_c` is C_s in the
/// spin limit and C_ps in the pseudospin limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParameters {
    pub mass: f64,
    pub delta: f64,
    pub vector_v0: f64,
    pub scalar_s0: f64,
    pub tensor_u0: f64,
    pub symmetry_c: f64,
}

impl PhysicalParameters {
    pub fn new(
        mass: f64,
        delta: f64,
        vector_v0: f64,
        scalar_s0: f64,
        tensor_u0: f64,
        symmetry_c: f64,
    ) -> Result<Self> {
        let p = Self { mass, delta, vector_v0, scalar_s0, tensor_u0, symmetry_c };
        p.validate()?;
        Ok(p)
    }

    /// M = 5, δ = 0.1, V0 = 2.5, S0 = 2.9, C = 0 with the given tensor strength.
    pub fn reference(tensor_u0: f64) -> Self {
        Self {
            mass: 5.0,
            delta: 0.1,
            vector_v0: 2.5,
            scalar_s0: 2.9,
            tensor_u0,
            symmetry_c: 0.0,
        }
    }

    pub fn with_u0(self, tensor_u0: f64) -> Self {
        Self { tensor_u0, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("mass", self.mass),
            ("delta", self.delta),
            ("V0", self.vector_v0),
            ("S0", self.scalar_s0),
            ("U0", self.tensor_u0),
            ("C", self.symmetry_c),
        ];
        for (what, v) in fields {
            if !v.is_finite() {
                return Err(Error::NonFinite { what });
            }
        }
        if self.mass <= 0.0 {
            return Err(Error::InvalidParameters(format!("mass must be positive, got {}", self.mass)));
        }
        if self.delta <= 0.0 {
            return Err(Error::InvalidParameters(format!(
                "screening delta must be positive, got {}",
                self.delta
            )));
        }
        Ok(())
    }

    /// Δ0 = V0 + S0, strength of Δ(r) in the pseudospin limit.
    pub fn delta0(&self) -> f64 {
        self.vector_v0 + self.scalar_s0
    }

    /// Σ0 = V0 − S0, strength of Σ(r) in the spin limit.
    pub fn sigma0(&self) -> f64 {
        self.vector_v0 - self.scalar_s0
    }

    /// U0/δ.
    pub fn tensor_ratio(&self) -> f64 {
        self.tensor_u0 / self.delta
    }

    /// U(r) = −U0 e^{−δr}/(1 − e^{−δr}).
    pub fn tensor_potential(&self, r: f64) -> Result<f64> {
        Ok(-self.tensor_u0 * hulthen_term(self.delta, r)?)
    }

    /// Energy at which the companion component is undefined: M + C_ps
    /// (pseudospin) or −M + C_s (spin).
    pub fn threshold_energy(&self, limit: SymmetryLimit) -> f64 {
        match limit {
            SymmetryLimit::PSpin => self.mass + self.symmetry_c,
            SymmetryLimit::Spin => -self.mass + self.symmetry_c,
        }
    }

    /// β²(E): (M + E)(M − E + C_ps) or (M − E)(M + E − C_s).
    pub fn beta_sq(&self, limit: SymmetryLimit, energy: f64) -> f64 {
        let (m, c) = (self.mass, self.symmetry_c);
        match limit {
            SymmetryLimit::PSpin => (m + energy) * (m - energy + c),
            SymmetryLimit::Spin => (m - energy) * (m + energy - c),
        }
    }
}

/// Which component obeys the solvable second-order equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryLimit {
    /// Σ(r) = V + S is constant, Δ(r) is Hulthén; lower component G.
    PSpin,
    /// Δ(r) = V − S is constant, Σ(r) is Hulthén; upper component F.
    Spin,
}

impl SymmetryLimit {
    pub fn name(self) -> &'static str {
        match self {
            SymmetryLimit::PSpin => "pspin",
            SymmetryLimit::Spin => "spin",
        }
    }
}

impl fmt::Display for SymmetryLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryLimit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pspin" | "p-spin" | "pseudospin" => Ok(SymmetryLimit::PSpin),
            "spin" => Ok(SymmetryLimit::Spin),
            other => Err(Error::InvalidParameters(format!("unknown symmetry '{other}'"))),
        }
    }
}

const ORBITAL_LETTERS: &[u8] = b"spdfghiklmnoqrtuvwxyz";

/// Radial quantum number and spin-orbit number κ.
///
/// `n` is the value that enters the energy formula. In the pseudospin limit
/// the κ > 0 member of a doublet is conventionally displayed as n − 1, see
/// [`StateLabel::display_n`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateLabel {
    pub n: u32,
    pub kappa: i32,
}

impl StateLabel {
    pub fn new(n: u32, kappa: i32) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::InvalidParameters("kappa must be nonzero".into()));
        }
        Ok(Self { n, kappa })
    }

    /// Orbital angular momentum: κ(κ+1) = l(l+1).
    pub fn l(&self) -> u32 {
        if self.kappa > 0 {
            self.kappa as u32
        } else {
            (-self.kappa - 1) as u32
        }
    }

    /// Pseudo-orbital angular momentum: κ(κ−1) = l̃(l̃+1).
    pub fn l_tilde(&self) -> u32 {
        if self.kappa > 0 {
            (self.kappa - 1) as u32
        } else {
            (-self.kappa) as u32
        }
    }

    /// 2j = 2|κ| − 1.
    pub fn two_j(&self) -> u32 {
        2 * self.kappa.unsigned_abs() - 1
    }

    pub fn j(&self) -> f64 {
        f64::from(self.two_j()) / 2.0
    }

    pub fn display_n(&self, limit: SymmetryLimit) -> i64 {
        match limit {
            SymmetryLimit::PSpin if self.kappa > 0 => i64::from(self.n) - 1,
            _ => i64::from(self.n),
        }
    }

    /// Spectroscopic name such as `1s1/2` or `0d3/2`.
    pub fn spectroscopic(&self, limit: SymmetryLimit) -> String {
        let l = self.l() as usize;
        let letter = ORBITAL_LETTERS.get(l).map(|&c| c as char);
        match letter {
            Some(c) => format!("{}{}{}/2", self.display_n(limit), c, self.two_j()),
            None => format!("{}[l={}]{}/2", self.display_n(limit), l, self.two_j()),
        }
    }

    /// Parses a spectroscopic name back into a label for the given limit.
    pub fn parse_spectroscopic(name: &str, limit: SymmetryLimit) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("cannot parse orbital '{name}'"));
        let name = name.trim();
        let letter_pos = name.find(|c: char| c.is_ascii_alphabetic()).ok_or_else(bad)?;
        let display_n: i64 = name[..letter_pos].parse().map_err(|_| bad())?;
        let letter = name.as_bytes()[letter_pos].to_ascii_lowercase();
        let l = ORBITAL_LETTERS.iter().position(|&c| c == letter).ok_or_else(bad)? as i32;
        let j_part = name[letter_pos + 1..].strip_suffix("/2").ok_or_else(bad)?;
        let two_j: i32 = j_part.parse().map_err(|_| bad())?;
        let kappa = if two_j == 2 * l + 1 {
            -(l + 1)
        } else if two_j == 2 * l - 1 && l > 0 {
            l
        } else {
            return Err(bad());
        };
        let n = match limit {
            SymmetryLimit::PSpin if kappa > 0 => display_n + 1,
            _ => display_n,
        };
        let n = u32::try_from(n).map_err(|_| bad())?;
        Self::new(n, kappa)
    }
}

/// e^{−δr}/(1 − e^{−δr}).
pub fn hulthen_term(delta: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(r));
    }
    Ok(1.0 / (delta * r).exp_m1())
}

/// δ² e^{−2δr}/(1 − e^{−δr})², the approximant of 1/r².
pub fn pekeris_approximant(delta: f64, r: f64) -> Result<f64> {
    let h = hulthen_term(delta, r)?;
    Ok(delta * delta * h * h)
}

/// Approximant divided by the exact 1/r², i.e. (x/(eˣ − 1))² with x = δr.
pub fn pekeris_ratio(delta: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(r));
    }
    let x = delta * r;
    let t = x / x.exp_m1();
    Ok(t * t)
}

/// Coefficients of the Pekeris-approximated radial equation written as
/// ψ'' = [A h² − B h + β²] ψ with h = e^{−δr}/(1 − e^{−δr}). In the variable
/// s = e^{−δr} this is the (−A s² + B s(1−s) − β²(1−s)²) form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeCoefficients {
    pub a: f64,
    pub b: f64,
    pub beta_sq: f64,
}

/// A, B and β² at energy `energy`.
///
/// Pseudospin: Ã = κ(κ−1)δ² + U0(U0 + 2κδ − δ), B̃ = −γ̃Δ0 + U0δ with
/// γ̃ = E − M − C_ps.
///
/// Spin: A = κ(κ+1)δ² + U0(U0 + 2κδ + δ), B = −γΣ0 − U0δ with
/// γ = M + E − C_s. The sign of the γΣ0 term follows from eliminating G
/// from the first-order system; it is the sign for which the spin spectrum
/// and the closed-form energy formula agree.
pub fn ode_coefficients(
    params: &PhysicalParameters,
    limit: SymmetryLimit,
    kappa: i32,
    energy: f64,
) -> OdeCoefficients {
    let k = f64::from(kappa);
    let d = params.delta;
    let u0 = params.tensor_u0;
    match limit {
        SymmetryLimit::PSpin => {
            let gamma = energy - params.mass - params.symmetry_c;
            OdeCoefficients {
                a: k * (k - 1.0) * d * d + u0 * (u0 + 2.0 * k * d - d),
                b: -gamma * params.delta0() + u0 * d,
                beta_sq: params.beta_sq(limit, energy),
            }
        }
        SymmetryLimit::Spin => {
            let gamma = params.mass + energy - params.symmetry_c;
            OdeCoefficients {
                a: k * (k + 1.0) * d * d + u0 * (u0 + 2.0 * k * d + d),
                b: -gamma * params.sigma0() - u0 * d,
                beta_sq: params.beta_sq(limit, energy),
            }
        }
    }
}

/// Nikiforov-Uvarov template for the state after s = e^{−δr}:
/// c1 = c2 = c3 = 1, p0 = β²/δ², p1 = (B + 2β²)/δ², p2 = (A + B + β²)/δ².
pub fn to_nu_problem(
    params: &PhysicalParameters,
    limit: SymmetryLimit,
    kappa: i32,
    energy: f64,
) -> NuProblem {
    let OdeCoefficients { a, b, beta_sq } = ode_coefficients(params, limit, kappa, energy);
    let d2 = params.delta * params.delta;
    NuProblem {
        c1: 1.0,
        c2: 1.0,
        c3: 1.0,
        p0: beta_sq / d2,
        p1: (b + 2.0 * beta_sq) / d2,
        p2: (a + b + beta_sq) / d2,
    }
}

//! Parametric Nikiforov-Uvarov method.
//!
//! Handles second-order equations of the form
//!
//! ```text
//! ψ'' + (c1 − c2 s)/(s(1 − c3 s)) ψ' + (−p2 s² + p1 s − p0)/(s²(1 − c3 s)²) ψ = 0
//! ```
//!
//! The module knows nothing about the potential; [`crate::hulthen`] builds
//! the [`NuProblem`] for a given physical state.

use crate::error::{Error, Radicand, Result};
use crate::special::{jacobi_eval, laguerre_eval};

/// Template coefficients (c1, c2, c3) and (p0, p1, p2). Dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuProblem {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
}

/// Derived constants c4..c13.
///
/// `c10` and `c12` use the `+√c8` branch, the one for which the weight
/// s^c12 vanishes at s = 0. When `c3 == 0` the fields `c11` and `c13` hold
/// the Laguerre-limit parameters: the argument scale of L_n^c10(c11 s) and
/// the exponent of e^(c13 s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuConstants {
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub c7: f64,
    pub c8: f64,
    pub c9: f64,
    pub c10: f64,
    pub c11: f64,
    pub c12: f64,
    pub c13: f64,
    pub sqrt_c8: f64,
    pub sqrt_c9: f64,
}

/// Exponents and Jacobi parameters of
/// ψ(s) = N s^c12 (1 − c3 s)^c13 P_n^(c10, c11)(1 − 2 c3 s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionShape {
    pub jacobi_alpha: f64,
    pub jacobi_beta: f64,
    pub s_exponent: f64,
    pub one_minus_s_exponent: f64,
}

impl NuProblem {
    pub fn new(c1: f64, c2: f64, c3: f64, p0: f64, p1: f64, p2: f64) -> Self {
        Self { c1, c2, c3, p0, p1, p2 }
    }

    pub fn constants(&self) -> Result<NuConstants> {
        derive_constants(self)
    }

    /// Derives the constants and evaluates the energy condition for level `n`.
    pub fn residual(&self, n: u32) -> Result<f64> {
        let constants = derive_constants(self)?;
        Ok(energy_residual(self, &constants, n))
    }

    fn check_finite(&self) -> Result<()> {
        let fields = [
            ("c1", self.c1),
            ("c2", self.c2),
            ("c3", self.c3),
            ("p0", self.p0),
            ("p1", self.p1),
            ("p2", self.p2),
        ];
        for (what, v) in fields {
            if !v.is_finite() {
                return Err(Error::NonFinite { what });
            }
        }
        Ok(())
    }
}

pub fn derive_constants(problem: &NuProblem) -> Result<NuConstants> {
    problem.check_finite()?;
    let NuProblem { c1, c2, c3, p0, p1, p2 } = *problem;

    let c4 = 0.5 * (1.0 - c1);
    let c5 = 0.5 * (c2 - 2.0 * c3);
    let c6 = c5 * c5 + p2;
    let c7 = 2.0 * c4 * c5 - p1;
    let c8 = c4 * c4 + p0;
    let c9 = c3 * (c7 + c3 * c8) + c6;

    if c8 < 0.0 {
        return Err(Error::NegativeRadicand { which: Radicand::C8, value: c8 });
    }
    if c9 < 0.0 {
        return Err(Error::NegativeRadicand { which: Radicand::C9, value: c9 });
    }
    let sqrt_c8 = c8.sqrt();
    let sqrt_c9 = c9.sqrt();

    let c10 = c1 + 2.0 * c4 + 2.0 * sqrt_c8 - 1.0;
    let c12 = c4 + sqrt_c8;
    let (c11, c13) = if c3 == 0.0 {
        // (1 − c3 s)^c13 → e^{−(√c9 − c5) s}; P_n^(c10, 2√c9/c3)(1 − 2 c3 s) → L_n^c10(2√c9 s)
        (2.0 * sqrt_c9, c5 - sqrt_c9)
    } else {
        (
            1.0 - c1 - 2.0 * c4 + 2.0 * sqrt_c9 / c3,
            -c4 + (sqrt_c9 - c5) / c3,
        )
    };

    Ok(NuConstants {
        c4,
        c5,
        c6,
        c7,
        c8,
        c9,
        c10,
        c11,
        c12,
        c13,
        sqrt_c8,
        sqrt_c9,
    })
}

/// Left-hand side of the energy condition
///
/// ```text
/// c2 n − (2n+1) c5 + (2n+1)(√c9 − c3 √c8) + n(n−1) c3 + c7 + 2 c3 c8 − 2 √(c8 c9)
/// ```
///
/// which vanishes on-shell.
pub fn energy_residual(problem: &NuProblem, constants: &NuConstants, n: u32) -> f64 {
    let n = f64::from(n);
    let two_n1 = 2.0 * n + 1.0;
    let c3 = problem.c3;
    problem.c2 * n - two_n1 * constants.c5
        + two_n1 * (constants.sqrt_c9 - c3 * constants.sqrt_c8)
        + n * (n - 1.0) * c3
        + constants.c7
        + 2.0 * c3 * constants.c8
        - 2.0 * constants.sqrt_c8 * constants.sqrt_c9
}

pub fn wavefunction_spec(constants: &NuConstants) -> WavefunctionShape {
    WavefunctionShape {
        jacobi_alpha: constants.c10,
        jacobi_beta: constants.c11,
        s_exponent: constants.c12,
        one_minus_s_exponent: constants.c13,
    }
}

/// Unnormalized ψ(s) = s^c12 (1 − c3 s)^c13 P_n^(c10, c11)(1 − 2 c3 s) for c3 ≠ 0.
pub fn jacobi_form(problem: &NuProblem, n: u32, s: f64) -> Result<f64> {
    if problem.c3 == 0.0 {
        return laguerre_limit(problem, n, s);
    }
    let k = derive_constants(problem)?;
    let c3 = problem.c3;
    Ok(s.powf(k.c12) * (1.0 - c3 * s).powf(k.c13) * jacobi_eval(n, k.c10, k.c11, 1.0 - 2.0 * c3 * s))
}

/// Unnormalized ψ(s) = s^c12 e^(c13 s) L_n^c10(c11 s), valid for c3 = 0.
pub fn laguerre_limit(problem: &NuProblem, n: u32, s: f64) -> Result<f64> {
    if problem.c3 != 0.0 {
        return Err(Error::InvalidParameters(format!(
            "Laguerre limit needs c3 = 0, got {}",
            problem.c3
        )));
    }
    let k = derive_constants(problem)?;
    Ok(s.powf(k.c12) * (k.c13 * s).exp() * laguerre_eval(n, k.c10, k.c11 * s))
}

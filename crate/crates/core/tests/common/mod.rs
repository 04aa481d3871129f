#![allow(dead_code)]

use dirac_hulthen::{PhysicalParameters, StateLabel, SymmetryLimit};

/// (n, κ, E at U0 = 0.1, E at U0 = 0) in fm⁻¹, with n the radial quantum
/// number entering the energy formula (pseudospin κ > 0 states are labelled
/// n − 1).
pub type Entry = (u32, i32, f64, f64);

pub const PSPIN_TABLE: [Entry; 16] = [
    (1, -1, 4.999528842, 4.998866406),
    (1, 2, 4.998896324, 4.998866406),
    (1, -2, 4.999147492, 4.998655904),
    (1, 3, 4.998720844, 4.998655904),
    (1, -3, 4.998896324, 4.998512210),
    (1, 4, 4.998591717, 4.998512210),
    (1, -4, 4.998720844, 4.998407889),
    (1, 5, 4.998492820, 4.998407889),
    (2, -1, 4.998552452, 4.997499195),
    (2, 2, 4.997268501, 4.997499195),
    (2, -2, 4.997816234, 4.996981851),
    (2, 3, 4.996848860, 4.996981851),
    (2, -3, 4.997268501, 4.996589219),
    (2, 4, 4.996517976, 4.996589219),
    (2, -4, 4.996848860, 4.996281439),
    (2, 5, 4.996250655, 4.996281439),
];

pub const SPIN_TABLE: [Entry; 16] = [
    (0, -2, -4.999038017, -4.999752463),
    (0, 1, -4.999559444, -4.999752463),
    (0, -3, -4.999445752, -4.999751647),
    (0, 2, -4.999611783, -4.999751647),
    (0, -4, -4.999559444, -4.999751236),
    (0, 3, -4.999641705, -4.999751236),
    (0, -5, -4.999611783, -4.999750989),
    (0, 4, -4.999661028, -4.999750989),
    (1, -2, -4.998475156, -4.998659482),
    (1, 1, -4.998134589, -4.998659482),
    (1, -3, -4.998252842, -4.998456496),
    (1, 2, -4.998061278, -4.998456496),
    (1, -4, -4.998134589, -4.998327074),
    (1, 3, -4.998011397, -4.998327074),
    (1, -5, -4.998061278, -4.998237543),
    (1, 4, -4.997975269, -4.998237543),
];

pub const TENSOR_U0: f64 = 0.1;

pub fn table(limit: SymmetryLimit) -> &'static [Entry; 16] {
    match limit {
        SymmetryLimit::PSpin => &PSPIN_TABLE,
        SymmetryLimit::Spin => &SPIN_TABLE,
    }
}

/// Every reference energy as (limit, U0, label, value), 64 in total.
pub fn all_table_energies() -> Vec<(SymmetryLimit, f64, StateLabel, f64)> {
    let mut out = Vec::with_capacity(64);
    for limit in [SymmetryLimit::PSpin, SymmetryLimit::Spin] {
        for &(n, kappa, e_tensor, e_free) in table(limit) {
            let label = StateLabel::new(n, kappa).unwrap();
            out.push((limit, TENSOR_U0, label, e_tensor));
            out.push((limit, 0.0, label, e_free));
        }
    }
    out
}

pub fn params(u0: f64) -> PhysicalParameters {
    PhysicalParameters::reference(u0)
}

//! Row layout of the reference energy tables.
//!
//! Each row pairs the κ < 0 state with its κ > 0 doublet partner at the
//! same energy-formula n. Pseudospin rows are indexed by l̃, spin rows by l.

use crate::hulthen::{StateLabel, SymmetryLimit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    /// l̃ (pseudospin) or l (spin)
    pub angular: u32,
    pub negative: StateLabel,
    pub positive: StateLabel,
}

/// Eight rows: n ∈ {1, 2} (pseudospin) or {0, 1} (spin) by angular
/// momentum 1..=4.
pub fn table_rows(limit: SymmetryLimit) -> Vec<TableRow> {
    let ns: [u32; 2] = match limit {
        SymmetryLimit::PSpin => [1, 2],
        SymmetryLimit::Spin => [0, 1],
    };
    let mut rows = Vec::with_capacity(8);
    for n in ns {
        for ang in 1..=4u32 {
            let a = ang as i32;
            let (neg, pos) = match limit {
                SymmetryLimit::PSpin => (-a, a + 1),
                SymmetryLimit::Spin => (-(a + 1), a),
            };
            rows.push(TableRow {
                angular: ang,
                negative: StateLabel { n, kappa: neg },
                positive: StateLabel { n, kappa: pos },
            });
        }
    }
    rows
}

/// Every state appearing in the table, 16 in total.
pub fn table_states(limit: SymmetryLimit) -> Vec<StateLabel> {
    table_rows(limit)
        .into_iter()
        .flat_map(|r| [r.negative, r.positive])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::doublet_partner;

    #[test]
    fn rows_are_doublets() {
        for limit in [SymmetryLimit::PSpin, SymmetryLimit::Spin] {
            let rows = table_rows(limit);
            assert_eq!(rows.len(), 8);
            for r in rows {
                assert_eq!(doublet_partner(r.negative, limit), Some(r.positive));
            }
        }
    }

    #[test]
    fn pspin_names() {
        let names: Vec<String> = table_states(SymmetryLimit::PSpin)
            .iter()
            .map(|s| s.spectroscopic(SymmetryLimit::PSpin))
            .collect();
        assert_eq!(&names[..4], ["1s1/2", "0d3/2", "1p3/2", "0f5/2"]);
        assert_eq!(names[15], "1h9/2");
    }

    #[test]
    fn spin_names() {
        let names: Vec<String> = table_states(SymmetryLimit::Spin)
            .iter()
            .map(|s| s.spectroscopic(SymmetryLimit::Spin))
            .collect();
        assert_eq!(&names[..4], ["0p3/2", "0p1/2", "0d5/2", "0d3/2"]);
        assert_eq!(names[15], "1g7/2");
    }
}

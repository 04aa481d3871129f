//! Symmetric tridiagonal eigenproblems by Sturm-sequence bisection.

/// Symmetric tridiagonal matrix with diagonal `diag` and off-diagonal `off`
/// (`off.len() == diag.len() - 1`).
pub(crate) struct SymTridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut d = self.diag[0] - x;
        if d < 0.0 {
            count += 1;
        }
        for i in 1..self.diag.len() {
            let e = self.off[i - 1];
            if d == 0.0 {
                d = f64::EPSILON * (e.abs() + f64::MIN_POSITIVE);
            }
            d = self.diag[i] - x - e * e / d;
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// The `index`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, index: usize) -> Option<f64> {
        if index >= self.len() {
            return None;
        }
        let (mut lo, mut hi) = self.gershgorin();
        let scale = lo.abs().max(hi.abs());
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 2.0 * f64::EPSILON * scale {
                break;
            }
        }
        Some(0.5 * (lo + hi))
    }

    /// Eigenvector for an eigenvalue estimate by inverse iteration.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        let (lo, hi) = self.gershgorin();
        let shift = lambda - 1e-10 * (lo.abs().max(hi.abs()));
        let mut v = vec![1.0; n];
        for _ in 0..4 {
            v = self.solve_shifted(shift, &v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.0 && norm.is_finite() {
                v.iter_mut().for_each(|x| *x /= norm);
            }
        }
        v
    }

    /// Solves (T − shift·I) x = rhs with the Thomas algorithm.
    fn solve_shifted(&self, shift: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.len();
        let tiny = f64::EPSILON * f64::EPSILON;
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut b = self.diag[0] - shift;
        if b == 0.0 {
            b = tiny;
        }
        if n > 1 {
            c[0] = self.off[0] / b;
        }
        d[0] = rhs[0] / b;
        for i in 1..n {
            let a = self.off[i - 1];
            let mut m = self.diag[i] - shift - a * c[i - 1];
            if m == 0.0 {
                m = tiny;
            }
            if i + 1 < n {
                c[i] = self.off[i] / m;
            }
            d[i] = (rhs[i] - a * d[i - 1]) / m;
        }
        let mut x = vec![0.0; n];
        x[n - 1] = d[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = d[i] - c[i] * x[i + 1];
        }
        x
    }
}

/// Sign changes of `values`, ignoring entries below `floor` in magnitude.
pub(crate) fn sign_changes(values: &[f64], floor: f64) -> usize {
    let mut last = 0.0_f64;
    let mut changes = 0;
    for &v in values {
        if v.abs() <= floor {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            changes += 1;
        }
        last = v;
    }
    changes
}

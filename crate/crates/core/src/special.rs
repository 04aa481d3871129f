//! Jacobi and generalized Laguerre polynomials with real parameters.

/// Jacobi polynomial P_n^(α,β)(x) by the three-term recurrence.
///
/// α and β may be non-integer. Parameters at or below −1 are evaluated
/// formally; the recurrence can divide by zero when α + β is a negative
/// integer.
pub fn jacobi_eval(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let ab = alpha + beta;
    let mut p_prev = 1.0;
    let mut p = (alpha + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0);
    for k in 2..=n {
        let k = f64::from(k);
        let two_k_ab = 2.0 * k + ab;
        let a1 = 2.0 * k * (k + ab) * (two_k_ab - 2.0);
        let a2 = (two_k_ab - 1.0) * (alpha * alpha - beta * beta);
        let a3 = (two_k_ab - 2.0) * (two_k_ab - 1.0) * two_k_ab;
        let a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * two_k_ab;
        let next = ((a2 + a3 * x) * p - a4 * p_prev) / a1;
        p_prev = p;
        p = next;
    }
    p
}

/// dP_n^(α,β)/dx = ½(n + α + β + 1) P_{n−1}^(α+1,β+1)(x).
pub fn jacobi_deriv(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    0.5 * (f64::from(n) + alpha + beta + 1.0) * jacobi_eval(n - 1, alpha + 1.0, beta + 1.0, x)
}

/// Generalized Laguerre polynomial L_n^(a)(x).
pub fn laguerre_eval(n: u32, a: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut l_prev = 1.0;
    let mut l = 1.0 + a - x;
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + a - x) * l - (k + a) * l_prev) / (k + 1.0);
        l_prev = l;
        l = next;
    }
    l
}

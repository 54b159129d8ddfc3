//! Truncated power-series kernels on coefficient slices.
//!
//! All inputs share one length `n`; outputs are truncated to `n`.

pub(crate) fn mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len();
    (0..n).map(|k| (0..=k).map(|j| a[j] * b[k - j]).sum()).collect()
}

/// Returns `None` when the constant term vanishes.
pub(crate) fn recip(a: &[f64]) -> Option<Vec<f64>> {
    if a[0] == 0.0 {
        return None;
    }
    let n = a.len();
    let mut out = vec![0.0; n];
    out[0] = 1.0 / a[0];
    for k in 1..n {
        let s: f64 = (1..=k).map(|j| a[j] * out[k - j]).sum();
        out[k] = -s / a[0];
    }
    Some(out)
}

pub(crate) fn exp(a: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut out = vec![0.0; n];
    out[0] = a[0].exp();
    for k in 1..n {
        let s: f64 = (1..=k).map(|j| j as f64 * a[j] * out[k - j]).sum();
        out[k] = s / k as f64;
    }
    out
}

/// Taylor coefficients c_k = f^{(k)}/k! from derivative values.
pub(crate) fn from_derivatives(derivs: &[f64]) -> Vec<f64> {
    let mut fact = 1.0;
    derivs
        .iter()
        .enumerate()
        .map(|(k, d)| {
            if k > 0 {
                fact *= k as f64;
            }
            d / fact
        })
        .collect()
}

/// k! c_k, the k-th derivative read back from a coefficient.
pub(crate) fn derivative_value(coeffs: &[f64], k: usize) -> f64 {
    let fact: f64 = (1..=k).map(|i| i as f64).product();
    coeffs[k] * fact
}

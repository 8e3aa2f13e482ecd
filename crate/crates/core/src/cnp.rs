//! Coefficient sequences for kernels with the complete Nevanlinna–Pick
//! property on `D_d`, Kaluza log-convexity, and Pick matrices.
//!
//! A kernel `Σ a_n (z̄w)ⁿ` with `a_0 = 1` and a positive log-convex sequence
//! (`a_n² ≤ a_{n-1} a_{n+1}`) has the CNP property. The sequence used here is
//! `a_n ∝ log^{d-1}(M(n+1)) / (n+1)`, with `M` past the point where
//! `η(x) = α log log x - log x` becomes convex.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernels::DiskPoint;
use crate::matrix::HermitianMatrix;
pub use crate::matrix::{psd_check, PsdReport};
use crate::series::{self, MAX_TERMS};

/// Relative slack in the log-convexity test.
pub const CONVEXITY_SLACK: f64 = 1e-12;

/// `η''(x) = (log²x - α log x - α) / (x² log²x)`.
pub fn eta_second_derivative(alpha: f64, x: f64) -> f64 {
    let l = x.ln();
    (l * l - alpha * l - alpha) / (x * x * l * l)
}

/// `η(x) = α log log x - log x`.
pub fn eta(alpha: f64, x: f64) -> f64 {
    alpha * x.ln().ln() - x.ln()
}

/// Threshold past which `η'' ≥ 0`: `exp((α + √(α² + 4α))/2)`, the larger
/// root of the quadratic in `log x`, clamped below by `e` so that
/// `log log x ≥ 0`.
pub fn eta_threshold(alpha: f64) -> Result<f64> {
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidParameter(format!("alpha must be a finite nonnegative number, got {alpha}")));
    }
    let root = (alpha + (alpha * alpha + 4.0 * alpha).sqrt()) / 2.0;
    Ok(root.exp().max(std::f64::consts::E))
}

/// The normalized sequence `a_n = raw_n / raw_0` with
/// `raw_n = log^{d-1}(M(n+1)) / (log M · (n+1))` and `M = eta_threshold(d-1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CnpSequence {
    d: u32,
    threshold: f64,
    a: Vec<f64>,
}

impl CnpSequence {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn values(&self) -> &[f64] {
        &self.a
    }

    /// `a_n` for any `n`, beyond the stored range included.
    pub fn coefficient(&self, n: usize) -> f64 {
        if let Some(&v) = self.a.get(n) {
            return v;
        }
        cnp_value(self.d, self.threshold, n)
    }
}

fn cnp_value(d: u32, m: f64, n: usize) -> f64 {
    let p = d as i32 - 1;
    let n1 = n as f64 + 1.0;
    // raw_n / raw_0 = (log(M(n+1)) / log M)^{d-1} / (n+1)
    ((m.ln() + n1.ln()) / m.ln()).powi(p) / n1
}

/// The CNP coefficient sequence for `D_d`, `n = 0..=nmax`.
pub fn cnp_coefficients(d: u32, nmax: usize) -> Result<CnpSequence> {
    if d == 0 {
        return Err(Error::InvalidParameter("degree d must be at least 1".into()));
    }
    let threshold = eta_threshold((d - 1) as f64)?;
    let a = (0..=nmax).map(|n| cnp_value(d, threshold, n)).collect();
    Ok(CnpSequence { d, threshold, a })
}

/// First `n` with `a_n² > a_{n-1} a_{n+1} (1 + slack)`, if any.
pub fn check_log_convexity(a: &[f64]) -> Result<Option<usize>> {
    if let Some(i) = a.iter().position(|&x| !(x > 0.0)) {
        return Err(Error::InvalidParameter(format!("sequence entry {i} is not positive")));
    }
    Ok((1..a.len().saturating_sub(1)).find(|&n| a[n] * a[n] > a[n - 1] * a[n + 1] * (1.0 + CONVEXITY_SLACK)))
}

/// `Σ a_n (z̄w)ⁿ` truncated with a certified tail below `tail_tol`.
pub fn cnp_kernel_eval(z: DiskPoint, w: DiskPoint, seq: &CnpSequence, tail_tol: f64) -> Result<Complex64> {
    let x = z.value().conj() * w.value();
    let r = x.norm();
    if r == 0.0 {
        return Ok(Complex64::new(seq.coefficient(0), 0.0));
    }
    let nmax = truncation(seq, r, tail_tol)?;
    let mut p = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..=nmax {
        sum += seq.coefficient(n) * p;
        p *= x;
    }
    Ok(sum)
}

/// `a_{n+1}/a_n ≤ (log(M(n+2))/log(M(n+1)))^{d-1}`, which decreases in n.
fn truncation(seq: &CnpSequence, r: f64, tail_tol: f64) -> Result<usize> {
    let lm = seq.threshold.ln();
    let p = seq.d as i32 - 1;
    series::terms_needed(
        |n| seq.coefficient(n) * r.powi(n as i32),
        |n| {
            let n = n as f64;
            r * ((lm + (n + 2.0).ln()) / (lm + (n + 1.0).ln())).powi(p)
        },
        tail_tol,
        MAX_TERMS,
    )
}

/// Pick matrix with entries `(1 - w_i w̄_j) K(z_j, z_i)` for the CNP kernel
/// `K(z, w) = Σ a_n (z̄w)ⁿ`.
pub fn pick_matrix(
    nodes: &[DiskPoint],
    targets: &[Complex64],
    seq: &CnpSequence,
    tail_tol: f64,
) -> Result<HermitianMatrix> {
    if nodes.len() != targets.len() {
        return Err(Error::InvalidParameter(format!("{} nodes but {} targets", nodes.len(), targets.len())));
    }
    for (i, n) in nodes.iter().enumerate() {
        if nodes[..i].contains(n) {
            return Err(Error::InvalidParameter(format!("node {} is repeated", n.value())));
        }
    }
    if let Some(t) = targets.iter().find(|t| t.norm() > 1.0) {
        return Err(Error::InvalidParameter(format!("target {t} lies outside the closed unit disc")));
    }
    let n = nodes.len();
    let mut kernel = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in i..n {
            kernel[i * n + j] = cnp_kernel_eval(nodes[j], nodes[i], seq, tail_tol)?;
        }
    }
    Ok(HermitianMatrix::from_upper(n, |i, j| {
        (Complex64::new(1.0, 0.0) - targets[i] * targets[j].conj()) * kernel[i * n + j]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_examples() {
        assert_eq!(eta_threshold(0.0).unwrap(), std::f64::consts::E);
        let m1 = eta_threshold(1.0).unwrap();
        assert!((m1 - ((1.0 + 5f64.sqrt()) / 2.0).exp()).abs() < 1e-12);
        assert!((m1 - 5.0432).abs() < 1e-4);
        let m2 = eta_threshold(2.0).unwrap();
        assert!((m2 - 15.366).abs() < 1e-2);
        assert!(eta_threshold(-1.0).is_err());
    }

    /// Central second difference of η, independent of the closed-form η''.
    fn eta_second_difference(alpha: f64, x: f64) -> f64 {
        let h = x * 1e-4;
        (eta(alpha, x + h) - 2.0 * eta(alpha, x) + eta(alpha, x - h)) / (h * h)
    }

    #[test]
    fn threshold_sign_contract() {
        for alpha in [0.5, 1.0, 2.0, 3.0, 4.0] {
            let m = eta_threshold(alpha).unwrap();
            assert!(eta_second_difference(alpha, m * 1.01) > 0.0, "alpha={alpha}");
            assert!(eta_second_derivative(alpha, m * (1.0 + 1e-6)) >= 0.0);
            if m > std::f64::consts::E {
                assert!(eta_second_difference(alpha, m * 0.99) < 0.0, "alpha={alpha}");
                assert!(eta_second_derivative(alpha, m * (1.0 - 1e-6)) < 0.0);
            }
        }
    }

    #[test]
    fn coefficient_examples() {
        let s1 = cnp_coefficients(1, 50).unwrap();
        for (n, &a) in s1.values().iter().enumerate() {
            assert!((a - 1.0 / (n as f64 + 1.0)).abs() < 1e-16);
        }
        let s2 = cnp_coefficients(2, 5).unwrap();
        let m = eta_threshold(1.0).unwrap();
        assert!((s2.values()[1] / s2.values()[0] - (2.0 * m).ln() / (2.0 * m.ln())).abs() < 1e-15);
        assert_eq!(cnp_coefficients(3, 5).unwrap().values()[0], 1.0);
        assert_eq!(s2.coefficient(100), cnp_value(2, m, 100));
    }

    #[test]
    fn convexity_examples() {
        let a: Vec<f64> = (0..100).map(|n| 1.0 / (n as f64 + 1.0)).collect();
        assert_eq!(check_log_convexity(&a).unwrap(), None);
        assert_eq!(check_log_convexity(&[1.0, 1.0, 4.0]).unwrap(), None);
        assert_eq!(check_log_convexity(&[1.0, 2.0, 1.0]).unwrap(), Some(1));
        assert!(check_log_convexity(&[1.0, 0.0, 1.0]).is_err());
        assert_eq!(check_log_convexity(&cnp_coefficients(3, 10_000).unwrap().a).unwrap(), None);
    }

    #[test]
    fn kernel_examples() {
        let s1 = cnp_coefficients(1, 10).unwrap();
        let o = DiskPoint::origin();
        let w = DiskPoint::from_re_im(0.4, 0.3).unwrap();
        assert_eq!(cnp_kernel_eval(o, w, &s1, 1e-12).unwrap(), Complex64::new(1.0, 0.0));
        let h = DiskPoint::from_re_im(0.5f64.sqrt(), 0.0).unwrap();
        let v = cnp_kernel_eval(h, h, &s1, 1e-13).unwrap();
        assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-12);
        let s2 = cnp_coefficients(2, 10).unwrap();
        let v = cnp_kernel_eval(h, h, &s2, 1e-12).unwrap();
        let oracle: f64 = (0..400).map(|n| s2.coefficient(n) * 0.5f64.powi(n as i32)).sum();
        assert!((v.re - oracle).abs() < 1e-12);
    }

    #[test]
    fn pick_examples() {
        let s = cnp_coefficients(2, 10).unwrap();
        let o = DiskPoint::origin();
        let m = pick_matrix(&[o], &[Complex64::new(0.0, 0.0)], &s, 1e-12).unwrap();
        assert_eq!(m.get(0, 0), Complex64::new(1.0, 0.0));
        assert!(psd_check(&m, 1e-12).is_psd);
        let m = pick_matrix(&[o], &[Complex64::from_polar(1.0, 0.3)], &s, 1e-12).unwrap();
        assert!(m.get(0, 0).norm() < 1e-15);
        assert!(psd_check(&m, 1e-12).is_psd);
        let nodes = [DiskPoint::from_re_im(0.2, 0.1).unwrap(), DiskPoint::from_re_im(-0.5, 0.4).unwrap()];
        let m = pick_matrix(&nodes, &[Complex64::new(0.0, 0.0); 2], &s, 1e-12).unwrap();
        assert!(psd_check(&m, 1e-12).is_psd);
        assert!(pick_matrix(&nodes, &[Complex64::new(0.0, 0.0)], &s, 1e-12).is_err());
        assert!(pick_matrix(&[o, o], &[Complex64::new(0.0, 0.0); 2], &s, 1e-12).is_err());
        assert!(pick_matrix(&[o], &[Complex64::new(1.5, 0.0)], &s, 1e-12).is_err());
    }

    #[test]
    fn infeasible_pick_data_fails() {
        // |f(0)| = 0.9 and f(0.1) = -0.9 is impossible for a contractive multiplier
        let s = cnp_coefficients(1, 10).unwrap();
        let nodes = [DiskPoint::origin(), DiskPoint::from_re_im(0.1, 0.0).unwrap()];
        let targets = [Complex64::new(0.9, 0.0), Complex64::new(-0.9, 0.0)];
        let m = pick_matrix(&nodes, &targets, &s, 1e-12).unwrap();
        let report = psd_check(&m, 1e-12);
        assert!(!report.is_psd);
        assert_eq!(report.witness, Some(2));
    }
}

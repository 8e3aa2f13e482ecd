//! The Dirichlet kernel `k_z(w) = (z̄w)⁻¹ log(1/(1-z̄w))`, its powers, and
//! Gram matrices of kernel functions in `D_d` and `HS_d`.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
pub use crate::matrix::HermitianMatrix;
use crate::series::{self, MAX_TERMS};
use crate::spaces::{CoefficientFunction, Space, SpaceSpec};
use crate::weights;

/// Below this `|z̄w|` the kernel is summed as a series.
const SERIES_SWITCH: f64 = 1e-4;

/// Default certified tail for truncated kernel sums.
pub const DEFAULT_TAIL_TOL: f64 = 1e-10;

/// A point of the open unit disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        if !(z.norm() < 1.0) {
            return Err(Error::InvalidParameter(format!("point {z} is not in the open unit disc")));
        }
        Ok(DiskPoint(z))
    }

    pub fn from_re_im(re: f64, im: f64) -> Result<Self> {
        Self::new(Complex64::new(re, im))
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(Complex64::from_polar(r, theta))
    }

    /// A point drawn uniformly (by area) from the disc `|z| ≤ radius`, `radius < 1`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&radius) {
            return Err(Error::InvalidParameter(format!("sampling radius {radius} must lie in [0, 1)")));
        }
        let r = radius * rng.gen::<f64>().sqrt();
        Self::from_polar(r, rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))
    }

    pub fn origin() -> Self {
        DiskPoint(Complex64::new(0.0, 0.0))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    pub fn modulus(&self) -> f64 {
        self.0.norm()
    }
}

/// `Σ xⁿ/(n+1) = x⁻¹ log(1/(1-x))` for `|x| < 1`.
fn log_kernel(x: Complex64) -> Complex64 {
    if x.norm() < SERIES_SWITCH {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut p = Complex64::new(1.0, 0.0);
        let mut n = 0.0;
        while p.norm() > 1e-18 {
            sum += p / (n + 1.0);
            p *= x;
            n += 1.0;
        }
        sum
    } else {
        -log_one_minus(x) / x
    }
}

/// Principal `log(1 - x)` for `|x| < 1`. `1 - x` stays in the disc of
/// radius 1 about 1, away from the branch cut; the modulus goes through
/// `ln_1p` so small `x` keeps full relative precision.
fn log_one_minus(x: Complex64) -> Complex64 {
    let re = 0.5 * (x.norm_sqr() - 2.0 * x.re).ln_1p();
    let im = (-x.im).atan2(1.0 - x.re);
    Complex64::new(re, im)
}

/// `k_z(w) = k(w, z) = Σ (z̄w)ⁿ/(n+1)`.
pub fn kernel_eval(z: DiskPoint, w: DiskPoint) -> Complex64 {
    log_kernel(z.0.conj() * w.0)
}

/// `k_z(w)^d`, the reproducing kernel of `D_d`.
pub fn kernel_power_eval(z: DiskPoint, w: DiskPoint, d: u32) -> Complex64 {
    kernel_eval(z, w).powu(d)
}

/// The Taylor coefficients of `k_z` up to degree `n`: `z̄^k/(k+1)`.
pub fn kernel_coefficients(z: DiskPoint, n: usize) -> CoefficientFunction {
    let zc = z.0.conj();
    let mut p = Complex64::new(1.0, 0.0);
    let mut v = Vec::with_capacity(n + 1);
    for k in 0..=n {
        v.push(p / (k as f64 + 1.0));
        p *= zc;
    }
    CoefficientFunction::new(v)
}

/// Number of terms `K` such that `Σ_{k>K} a_d(k) rᵏ ≤ tol`.
///
/// Uses `a_d(k) ≤ H_{k+1}^{d-1} ≤ (1 + log(k+1))^{d-1}`, whose successive
/// term ratios decrease in k.
pub fn hs_truncation(d: u32, r: f64, tol: f64) -> Result<usize> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::InvalidParameter(format!("series ratio must lie in [0, 1), got {r}")));
    }
    if r == 0.0 {
        return Ok(0);
    }
    let p = d as i32 - 1;
    let term = |k: usize| (1.0 + (k as f64 + 1.0).ln()).powi(p) * r.powi(k as i32);
    let ratio = |k: usize| {
        let k = k as f64;
        r * ((1.0 + (k + 2.0).ln()) / (1.0 + (k + 1.0).ln())).powi(p)
    };
    series::terms_needed(term, ratio, tol, MAX_TERMS)
}

fn check_distinct(points: &[DiskPoint]) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(Error::InvalidParameter(format!("point {} is repeated", p.0)));
        }
    }
    Ok(())
}

/// Gram matrix of the Dirichlet kernel functions `k_{λ_i}` in the space of
/// `spec`, with entry `(i, j)` equal to `⟨k_{λ_j}, k_{λ_i}⟩` conjugated, i.e.
/// `Σ a_d(k) (λ̄_i λ_j)^k`.
///
/// For `D_d` the functions are the kernels `k_λ^d` and the entries come from
/// the closed form. For `HS_d` the coefficient sum is truncated with a
/// certified tail below `tail_tol`. The norm variant of `spec` is ignored.
pub fn gram_matrix(points: &[DiskPoint], spec: SpaceSpec, tail_tol: f64) -> Result<HermitianMatrix> {
    check_distinct(points)?;
    let d = spec.d;
    match spec.space {
        Space::Dd => Ok(HermitianMatrix::from_upper(points.len(), |i, j| kernel_power_eval(points[i], points[j], d))),
        Space::HSd => {
            let rmax = points.iter().map(|p| p.modulus()).fold(0.0, f64::max);
            let kmax = hs_truncation(d, rmax * rmax, tail_tol)?;
            let a = weights::compute_weights(d, kmax)?;
            Ok(HermitianMatrix::from_upper(points.len(), |i, j| {
                let x = points[i].0.conj() * points[j].0;
                let mut p = Complex64::new(1.0, 0.0);
                let mut sum = Complex64::new(0.0, 0.0);
                for &ak in a.values() {
                    sum += ak * p;
                    p *= x;
                }
                sum
            }))
        }
    }
}

/// Result of comparing the `HS_d` and `D_d` Gram matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitaryCheck {
    pub max_deviation: f64,
    /// Certified truncation error of each `HS_d` entry.
    pub tail_tol: f64,
}

impl UnitaryCheck {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_deviation <= tol + self.tail_tol
    }
}

/// `max |Gram_{HS_d} - Gram_{D_d}|` over the given points.
///
/// `k_λ ↦ k_λ^d` is isometric from `HS_d` onto `D_d` exactly when the two
/// Gram matrices coincide.
pub fn verify_unitary(points: &[DiskPoint], d: u32, tol: f64) -> Result<UnitaryCheck> {
    let tail_tol = (tol * 1e-2).min(DEFAULT_TAIL_TOL);
    let hs = gram_matrix(points, SpaceSpec::new(d, Space::HSd, crate::spaces::NormVariant::Coeff)?, tail_tol)?;
    let dd = gram_matrix(points, SpaceSpec::new(d, Space::Dd, crate::spaces::NormVariant::Coeff)?, tail_tol)?;
    Ok(UnitaryCheck { max_deviation: hs.max_abs_diff(&dd)?, tail_tol })
}

/// Partial sums `Σ_{k≤K} 1/((k+1)² a_d(k))` of the `HS_d` kernel diagonal
/// at the boundary, sampled at each `K` in `checkpoints` (ascending).
pub fn hs_kernel_boundary_partial_sums(d: u32, checkpoints: &[usize]) -> Result<Vec<(usize, f64)>> {
    let kmax = checkpoints.iter().copied().max().unwrap_or(0);
    let a = weights::compute_weights(d, kmax)?;
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut sum = 0.0;
    let mut next = 0;
    for (k, ak) in a.values().iter().enumerate() {
        sum += 1.0 / ((k as f64 + 1.0).powi(2) * ak);
        while next < checkpoints.len() && checkpoints[next] == k {
            out.push((k, sum));
            next += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{duality_pairing, NormVariant};

    fn p(re: f64, im: f64) -> DiskPoint {
        DiskPoint::from_re_im(re, im).unwrap()
    }

    fn series_oracle(x: Complex64, terms: usize) -> Complex64 {
        (0..terms).map(|n| x.powu(n as u32) / (n as f64 + 1.0)).sum()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_eval(DiskPoint::origin(), p(0.3, 0.4)), Complex64::new(1.0, 0.0));
        let s = p(0.5f64.sqrt(), 0.0);
        let v = kernel_eval(s, s);
        assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-14);
        let half = Complex64::new(0.5, 0.0);
        assert!((series_oracle(half, 200) - log_kernel(half)).norm() < 1e-14);
        assert!((log_kernel(half).re - 1.386294).abs() < 1e-6);
        let z = p(0.9f64.sqrt(), 0.0);
        let v = kernel_eval(z, z);
        assert!((v.re - 10f64.ln() / 0.9).abs() < 1e-13);
        assert!((v.re - 2.558428).abs() < 1e-6);
    }

    #[test]
    fn kernel_power_examples() {
        let o = DiskPoint::origin();
        assert_eq!(kernel_power_eval(o, p(0.9, 0.0), 7), Complex64::new(1.0, 0.0));
        let a = p(0.5f64.sqrt(), 0.0);
        let v = kernel_power_eval(a, a, 2);
        assert!((v.re - (2.0 * 2f64.ln()).powi(2)).abs() < 1e-14);
        assert!((v.re - 1.921812).abs() < 1e-6);
        assert_eq!(kernel_power_eval(a, p(0.1, 0.2), 1), kernel_eval(a, p(0.1, 0.2)));
    }

    #[test]
    fn series_and_closed_form_agree_on_grid() {
        for i in 0..20 {
            for j in 0..16 {
                let r = 0.95 * i as f64 / 19.0;
                let x = Complex64::from_polar(r, j as f64 * std::f64::consts::PI / 8.0);
                let terms = if r == 0.0 { 1 } else { (40.0 / -r.ln()).ceil() as usize + 10 };
                let s = series_oracle(x, terms.min(4000));
                let c = log_kernel(x);
                assert!((s - c).norm() <= 1e-12 * c.norm(), "x={x}");
            }
        }
    }

    #[test]
    fn series_switch_is_continuous() {
        for r in [0.99e-4, 1.01e-4] {
            let x = Complex64::from_polar(r, 1.0);
            assert!((log_kernel(x) - series_oracle(x, 10)).norm() < 2e-16);
        }
    }

    #[test]
    fn reproducing_property() {
        let f = CoefficientFunction::new(vec![
            Complex64::new(1.0, 0.5),
            Complex64::new(-2.0, 0.0),
            Complex64::new(0.0, 0.3),
            Complex64::new(0.7, -0.1),
        ]);
        for z in [p(0.3, -0.2), p(-0.6, 0.5), p(0.0, 0.95)] {
            let kz = kernel_coefficients(z, 10);
            let lhs = duality_pairing(&f, &kz);
            assert!((lhs - f.eval(z.value())).norm() < 1e-12);
        }
    }

    #[test]
    fn gram_examples() {
        let s = |space| SpaceSpec::new(3, space, NormVariant::Coeff).unwrap();
        let g = gram_matrix(&[DiskPoint::origin()], s(Space::Dd), 1e-10).unwrap();
        assert_eq!(g.get(0, 0), Complex64::new(1.0, 0.0));
        let pts = [p(0.3, 0.1), p(-0.2, 0.5)];
        let g = gram_matrix(&pts, SpaceSpec::new(1, Space::Dd, NormVariant::Coeff).unwrap(), 1e-10).unwrap();
        let x = pts[0].value().conj() * pts[1].value();
        assert!((g.get(0, 1) - series_oracle(x, 100)).norm() < 1e-14);
        assert!((g.get(1, 0) - series_oracle(x.conj(), 100)).norm() < 1e-14);
        assert!(gram_matrix(&[pts[0], pts[0]], s(Space::Dd), 1e-10).is_err());
    }

    #[test]
    fn truncation_near_boundary() {
        let r: f64 = 0.99 * 0.99;
        let k = hs_truncation(2, r, 1e-10).unwrap();
        let geometric = ((1e-10 * (1.0 - r)).ln() / r.ln()).ceil() as usize;
        assert!(k >= geometric && k < 10 * geometric, "k={k} geometric={geometric}");
        assert!(matches!(hs_truncation(2, 0.999_999_9, 1e-10), Err(Error::TruncationBudget { .. })));
        assert!(hs_truncation(2, 1.0, 1e-10).is_err());
    }

    #[test]
    fn unitary_examples() {
        let one = verify_unitary(&[DiskPoint::origin()], 3, 1e-8).unwrap();
        assert_eq!(one.max_deviation, 0.0);
        let pts = [p(0.1, 0.2), p(-0.7, 0.1), p(0.0, -0.5)];
        let d1 = verify_unitary(&pts, 1, 1e-12).unwrap();
        assert!(d1.max_deviation <= 1e-12 + d1.tail_tol);
    }

    #[test]
    fn boundary_diagonal_partial_sums() {
        let sums = hs_kernel_boundary_partial_sums(3, &[0, 10, 100]).unwrap();
        assert_eq!(sums[0], (0, 1.0));
        assert!(sums[1].1 < sums[2].1);
    }
}

//! Coefficient weights `a_d(k)`, their logarithmic comparison weights, and
//! log-weighted radial moments on `(0, 1)`.
//!
//! `a_d(k)` is the sum of `Π 1/(n_i + 1)` over all compositions
//! `n_1 + … + n_d = k`, i.e. the k-th Taylor coefficient of
//! `L(x)^d` with `L(x) = x⁻¹ log(1/(1-x)) = Σ xⁿ/(n+1)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quad;

/// Largest index accepted by the exact rational oracle.
pub const EXACT_KMAX: usize = 64;

/// Default relative tolerance for radial quadrature.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// The sequence `a_d(0..=kmax)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSequence {
    d: u32,
    values: Vec<f64>,
}

impl WeightSequence {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn kmax(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, k: usize) -> Option<f64> {
        self.values.get(k).copied()
    }
}

impl std::ops::Index<usize> for WeightSequence {
    type Output = f64;
    fn index(&self, k: usize) -> &f64 {
        &self.values[k]
    }
}

fn check_degree(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameter("degree d must be at least 1".into()));
    }
    Ok(())
}

fn dirichlet_weights(kmax: usize) -> Vec<f64> {
    (0..=kmax).map(|k| 1.0 / (k as f64 + 1.0)).collect()
}

/// `a_d(0..=kmax)` in double precision.
///
/// Differentiating `F_d = L^d` gives `x(1-x)F_d' = d F_{d-1} - d(1-x) F_d`,
/// which on coefficients reads
/// `(k+d) a_d(k) = (k-1+d) a_d(k-1) + d a_{d-1}(k)`.
/// Every term is positive, so the recurrence is as accurate as the
/// convolution while costing `O(d·kmax)` instead of `O(d·kmax²)`.
pub fn compute_weights(d: u32, kmax: usize) -> Result<WeightSequence> {
    check_degree(d)?;
    let mut current = dirichlet_weights(kmax);
    for j in 2..=d {
        let jf = j as f64;
        let mut next = Vec::with_capacity(kmax + 1);
        next.push(1.0);
        for k in 1..=kmax {
            let kf = k as f64;
            let v = ((kf - 1.0 + jf) * next[k - 1] + jf * current[k]) / (kf + jf);
            next.push(v);
        }
        current = next;
    }
    Ok(WeightSequence { d, values: current })
}

/// `a_d(0..=kmax)` by `(d-1)`-fold Cauchy self-convolution of `1/(n+1)`,
/// each coefficient summed in ascending index order.
pub fn compute_weights_by_convolution(d: u32, kmax: usize) -> Result<WeightSequence> {
    check_degree(d)?;
    let base = dirichlet_weights(kmax);
    let mut current = base.clone();
    for _ in 1..d {
        current = (0..=kmax).map(|k| (0..=k).map(|n| base[n] * current[k - n]).sum()).collect();
    }
    Ok(WeightSequence { d, values: current })
}

/// `a_d(0..=kmax)` in exact rational arithmetic.
pub fn compute_weights_exact(d: u32, kmax: usize) -> Result<Vec<BigRational>> {
    check_degree(d)?;
    if kmax > EXACT_KMAX {
        return Err(Error::OracleRange(format!("exact weights limited to kmax <= {EXACT_KMAX}, got {kmax}")));
    }
    let base: Vec<BigRational> = (0..=kmax).map(|k| BigRational::new(BigInt::one(), BigInt::from(k + 1))).collect();
    let mut current = base.clone();
    for _ in 1..d {
        current =
            (0..=kmax).map(|k| (0..=k).fold(BigRational::zero(), |acc, n| acc + &base[n] * &current[k - n])).collect();
    }
    Ok(current)
}

/// `log^{d-1}(k+2)/(k+1)` with the natural logarithm.
pub fn comparison_weight(d: u32, k: usize) -> f64 {
    let k = k as f64;
    (k + 2.0).ln().powi(d as i32 - 1) / (k + 1.0)
}

/// Minimum and maximum of a ratio over an index range, with their positions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioRange {
    pub min: f64,
    pub argmin: usize,
    pub max: f64,
    pub argmax: usize,
}

impl RatioRange {
    pub fn from_pairs<I: IntoIterator<Item = (usize, f64)>>(pairs: I) -> Option<Self> {
        let mut it = pairs.into_iter();
        let (k0, r0) = it.next()?;
        let mut out = RatioRange { min: r0, argmin: k0, max: r0, argmax: k0 };
        for (k, r) in it {
            if r < out.min {
                out.min = r;
                out.argmin = k;
            }
            if r > out.max {
                out.max = r;
                out.argmax = k;
            }
        }
        Some(out)
    }

    pub fn spread(&self) -> f64 {
        self.max / self.min
    }
}

/// `comparison_weight(d, k) / a_d(k)` for `k = 0..=kmax`.
pub fn lemma1_ratios(d: u32, kmax: usize) -> Result<Vec<f64>> {
    let a = compute_weights(d, kmax)?;
    Ok(a.values().iter().enumerate().map(|(k, &ak)| comparison_weight(d, k) / ak).collect())
}

/// Range of `comparison_weight(d, k) / a_d(k)` over `0 ≤ k ≤ kmax`.
pub fn lemma1_ratio_range(d: u32, kmax: usize) -> Result<RatioRange> {
    if d > 6 {
        return Err(Error::InvalidParameter(format!("lemma 1 sweep supports d <= 6, got {d}")));
    }
    if kmax < 16 {
        return Err(Error::InvalidParameter(format!("lemma 1 sweep needs kmax >= 16, got {kmax}")));
    }
    let ratios = lemma1_ratios(d, kmax)?;
    let range = RatioRange::from_pairs(ratios.into_iter().enumerate()).expect("kmax >= 16");
    if !(range.min > 0.0 && range.max.is_finite()) {
        return Err(Error::InvalidParameter("non-finite lemma 1 ratio".into()));
    }
    Ok(range)
}

/// Shape of a radial weight on `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialKind {
    /// `w_d(t) = (t⁻¹ log(1/(1-t)))^d`, equal to 1 at `t = 0`.
    W,
    /// `1 / w_d(t)`.
    InvW,
    /// `log^d(1/(1-t))`, increasing in `t`.
    LogPower,
}

/// A radial weight of a given kind and exponent. Exponent 0 is the constant weight 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadialWeight {
    pub kind: RadialKind,
    pub exponent: u32,
}

impl RadialWeight {
    pub fn w(exponent: u32) -> Self {
        RadialWeight { kind: RadialKind::W, exponent }
    }

    pub fn inv_w(exponent: u32) -> Self {
        RadialWeight { kind: RadialKind::InvW, exponent }
    }

    pub fn log_power(exponent: u32) -> Self {
        RadialWeight { kind: RadialKind::LogPower, exponent }
    }

    /// Weight at `t ∈ [0, 1)`.
    pub fn eval(&self, t: f64) -> f64 {
        self.eval_at_u(-(-t).ln_1p())
    }

    /// Weight at the point `t = 1 - e^{-u}`, i.e. with `u = log(1/(1-t))`.
    pub fn eval_at_u(&self, u: f64) -> f64 {
        let p = self.exponent as i32;
        match self.kind {
            RadialKind::LogPower => u.powi(p),
            RadialKind::W => u_over_t(u).powi(p),
            RadialKind::InvW => u_over_t(u).recip().powi(p),
        }
    }

    /// `∫_U^∞ weight(u) e^{-u} du` upper bound, valid for `U ≥ 1`.
    fn tail_bound(&self, big_u: f64) -> f64 {
        let (c, p) = match self.kind {
            RadialKind::LogPower => (1.0, self.exponent),
            // u/t ≤ u/(1-e^{-1}) on u ≥ 1
            RadialKind::W => ((1.0 - (-1.0f64).exp()).recip().powi(self.exponent as i32), self.exponent),
            // t ≤ u everywhere
            RadialKind::InvW => (1.0, 0),
        };
        c * upper_gamma_int(p, big_u)
    }
}

/// `u / (1 - e^{-u})`, continuous at 0.
fn u_over_t(u: f64) -> f64 {
    if u == 0.0 {
        1.0
    } else {
        u / -(-u).exp_m1()
    }
}

/// `∫_U^∞ u^p e^{-u} du = e^{-U} Σ_{j≤p} p!/j! U^j` for integer `p`.
fn upper_gamma_int(p: u32, big_u: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for i in 1..=p {
        term *= big_u / i as f64;
        sum += term;
    }
    // sum = Σ_{i≤p} U^i/i!
    let fact: f64 = (1..=p).map(|i| i as f64).product();
    fact * sum * (-big_u).exp()
}

fn check_rel_tol(rel_tol: f64) -> Result<()> {
    if !(rel_tol > 1e-14 && rel_tol < 1e-3) {
        return Err(Error::InvalidParameter(format!("relative tolerance must lie in (1e-14, 1e-3), got {rel_tol}")));
    }
    Ok(())
}

/// `∫_{t0}^1 t^k weight(t) dt` for `t0 ∈ [0, 1)`.
///
/// Substituting `t = 1 - e^{-u}` turns the logarithmic endpoint
/// singularity at `t = 1` into exponential decay on `[log(1/(1-t0)), ∞)`.
pub fn radial_integral(weight: RadialWeight, k: usize, t0: f64, rel_tol: f64) -> Result<f64> {
    check_rel_tol(rel_tol)?;
    if !(0.0..1.0).contains(&t0) {
        return Err(Error::InvalidParameter(format!("lower limit must lie in [0, 1), got {t0}")));
    }
    let power = i32::try_from(k).map_err(|_| Error::InvalidParameter(format!("moment index {k} too large")))?;
    let u0 = -(-t0).ln_1p();
    let integrand = |u: f64| {
        let t = -(-u).exp_m1();
        t.powi(power) * weight.eval_at_u(u) * (-u).exp()
    };
    // Past the bulk of t^k (near u = log k) the tail bound alone decides.
    quad::integrate_to_infinity(&integrand, u0, |u| weight.tail_bound(u.max(1.0)), rel_tol)
}

/// `∫_0^1 t^k weight(t) dt`.
pub fn radial_moment(weight: RadialWeight, k: usize, rel_tol: f64) -> Result<f64> {
    radial_integral(weight, k, 0.0, rel_tol)
}

/// For each `k`, the ratio of `∫_0^1 t^k w_{d-1}(t) dt` to `log^{d-1}(k+2)/(k+1)`.
pub fn lemma2_check(d: u32, ks: &[usize], rel_tol: f64) -> Result<Vec<(usize, f64)>> {
    check_degree(d)?;
    if let Some(&k) = ks.iter().find(|&&k| k < d as usize) {
        return Err(Error::InvalidParameter(format!("lemma 2 needs k >= d = {d}, got k = {k}")));
    }
    ks.iter()
        .map(|&k| {
            let m = radial_moment(RadialWeight::w(d - 1), k, rel_tol)?;
            Ok((k, m / comparison_weight(d, k)))
        })
        .collect()
}

/// For each `ε`, `∫_{1-ε}^1 w_d · ∫_{1-ε}^1 (1/w_d) / ε²`.
///
/// The ratio is at least 1 by Cauchy–Schwarz. `d = 0` is the constant weight.
pub fn lemma3_b2_check(d: u32, epsilons: &[f64], rel_tol: f64) -> Result<Vec<(f64, f64)>> {
    epsilons
        .iter()
        .map(|&eps| {
            if !(eps > 0.0 && eps <= 0.5) {
                return Err(Error::InvalidParameter(format!("epsilon must lie in (0, 1/2], got {eps}")));
            }
            let t0 = 1.0 - eps;
            let up = radial_integral(RadialWeight::w(d), 0, t0, rel_tol)?;
            let down = radial_integral(RadialWeight::inv_w(d), 0, t0, rel_tol)?;
            Ok((eps, up * down / (eps * eps)))
        })
        .collect()
}

/// Ratio of `Σ_k comparison_weight(d, k) t^k` (tail certified below `1e-9`)
/// to `(t⁻¹ log(1/(1-t)))^d`.
pub fn generating_function_ratio(d: u32, t: f64) -> Result<f64> {
    check_degree(d)?;
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::InvalidParameter(format!("t must lie in (0, 1), got {t}")));
    }
    let p = d as i32 - 1;
    let term = |n: usize| comparison_weight(d, n) * t.powi(n as i32);
    // term(n+1)/term(n) ≤ t (log(n+3)/log(n+2))^{d-1}, decreasing in n
    let ratio = |n: usize| {
        let n = n as f64;
        t * ((n + 3.0).ln() / (n + 2.0).ln()).powi(p)
    };
    let kmax = crate::series::terms_needed(term, ratio, 1e-9, crate::series::MAX_TERMS)?;
    let sum: f64 = (0..=kmax).map(term).sum();
    let closed = (-(-t).ln_1p() / t).powi(d as i32);
    Ok(sum / closed)
}

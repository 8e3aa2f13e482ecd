//! Analytic polynomials as coefficient vectors, the norms of `D_d` and
//! `HS_d`, and the Dirichlet pairing between them.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::weights::{self, RadialWeight, DEFAULT_REL_TOL};

/// A polynomial `Σ_k c_k z^k` with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CoefficientFunction {
    coeffs: Vec<Complex64>,
}

impl CoefficientFunction {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        CoefficientFunction { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·z^k`.
    pub fn monomial(k: usize, c: Complex64) -> Self {
        let mut v = vec![Complex64::new(0.0, 0.0); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// The orthonormal Dirichlet basis element `e_n(z) = zⁿ/√(n+1)`.
    pub fn basis(n: usize) -> Self {
        Self::monomial(n, Complex64::new(1.0 / (n as f64 + 1.0).sqrt(), 0.0))
    }

    /// A polynomial of uniformly random degree at most `max_degree` whose
    /// coefficients are uniform in `[-1, 1]²`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_degree: usize) -> Self {
        let degree = rng.gen_range(0..=max_degree);
        Self::new((0..=degree).map(|_| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))).collect())
    }

    /// Index of the highest nonzero coefficient, `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    pub fn scale(&self, a: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * a).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

/// Which of the two scales of spaces a norm belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    /// `D_d`, the space with kernel `k^d`.
    Dd,
    /// `HS_d`, its dual under the Dirichlet pairing.
    HSd,
}

/// Which equivalent expression of the norm to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormVariant {
    /// Exact weights built from `a_d(k)`.
    Coeff,
    /// Logarithmic comparison weights.
    Log,
    /// Weighted area integral of `|f'|²` plus `|f(0)|²`.
    Area,
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dd" => Ok(Space::Dd),
            "hsd" | "hs" => Ok(Space::HSd),
            _ => Err(Error::InvalidParameter(format!("unknown space '{s}' (expected dd or hsd)"))),
        }
    }
}

impl FromStr for NormVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "coeff" => Ok(NormVariant::Coeff),
            "log" => Ok(NormVariant::Log),
            "area" => Ok(NormVariant::Area),
            _ => Err(Error::InvalidParameter(format!("unknown norm variant '{s}' (expected coeff, log or area)"))),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Dd => "dd",
            Space::HSd => "hsd",
        })
    }
}

impl fmt::Display for NormVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormVariant::Coeff => "coeff",
            NormVariant::Log => "log",
            NormVariant::Area => "area",
        })
    }
}

/// Selects one of the six norms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceSpec {
    pub d: u32,
    pub space: Space,
    pub variant: NormVariant,
}

impl SpaceSpec {
    pub fn new(d: u32, space: Space, variant: NormVariant) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("degree d must be at least 1".into()));
        }
        Ok(SpaceSpec { d, space, variant })
    }
}

/// Diagonal weights `w_k` with `‖f‖² = Σ w_k |f̂(k)|²`, extended on demand.
///
/// Area weights need one quadrature per index, so evaluating many
/// polynomials of similar degree through one evaluator is much cheaper than
/// calling [`norm`] repeatedly.
#[derive(Debug, Clone)]
pub struct NormEvaluator {
    spec: SpaceSpec,
    rel_tol: f64,
    weights: Vec<f64>,
}

impl NormEvaluator {
    pub fn new(spec: SpaceSpec) -> Self {
        Self::with_tolerance(spec, DEFAULT_REL_TOL)
    }

    pub fn with_tolerance(spec: SpaceSpec, rel_tol: f64) -> Self {
        NormEvaluator { spec, rel_tol, weights: Vec::new() }
    }

    pub fn spec(&self) -> SpaceSpec {
        self.spec
    }

    /// Weights for indices `0..=kmax`.
    pub fn weights(&mut self, kmax: usize) -> Result<&[f64]> {
        if self.weights.len() <= kmax {
            self.weights = norm_weights(self.spec, kmax, self.rel_tol)?;
        }
        Ok(&self.weights[..=kmax])
    }

    pub fn norm_squared(&mut self, f: &CoefficientFunction) -> Result<f64> {
        if f.is_zero() {
            return Ok(0.0);
        }
        let w = self.weights(f.degree() as usize)?;
        Ok(f.coeffs().iter().zip(w).map(|(c, w)| w * c.norm_sqr()).sum())
    }

    pub fn norm(&mut self, f: &CoefficientFunction) -> Result<f64> {
        Ok(self.norm_squared(f)?.sqrt())
    }
}

/// Weights of the quadratic form behind `spec`, for `k = 0..=kmax`.
///
/// The area variants reduce the disc integral by angular orthogonality:
/// `∫_D |f'|² W(|z|²) dA/π = Σ_{k≥1} k² |f̂(k)|² ∫_0^1 t^{k-1} W(t) dt`.
/// For `D_d` the radial weight is `1/w_{d-1}`, for `HS_d` it is
/// `log^{d-1}(1/(1-t))`.
pub fn norm_weights(spec: SpaceSpec, kmax: usize, rel_tol: f64) -> Result<Vec<f64>> {
    let d = spec.d;
    let ks = 0..=kmax;
    match (spec.space, spec.variant) {
        (Space::Dd, NormVariant::Coeff) => {
            Ok(weights::compute_weights(d, kmax)?.values().iter().map(|a| a.recip()).collect())
        }
        (Space::HSd, NormVariant::Coeff) => Ok(weights::compute_weights(d, kmax)?
            .values()
            .iter()
            .enumerate()
            .map(|(k, a)| (k as f64 + 1.0).powi(2) * a)
            .collect()),
        (Space::Dd, NormVariant::Log) => Ok(ks.map(|k| weights::comparison_weight(d, k).recip()).collect()),
        (Space::HSd, NormVariant::Log) => {
            Ok(ks.map(|k| (k as f64 + 1.0).powi(2) * weights::comparison_weight(d, k)).collect())
        }
        (space, NormVariant::Area) => {
            let radial = match space {
                Space::Dd => RadialWeight::inv_w(d - 1),
                Space::HSd => RadialWeight::log_power(d - 1),
            };
            let mut out = Vec::with_capacity(kmax + 1);
            out.push(1.0);
            for k in 1..=kmax {
                let m = weights::radial_moment(radial, k - 1, rel_tol)?;
                out.push((k * k) as f64 * m);
            }
            Ok(out)
        }
    }
}

/// The norm of `f` selected by `spec`.
pub fn norm(spec: SpaceSpec, f: &CoefficientFunction) -> Result<f64> {
    NormEvaluator::new(spec).norm(f)
}

/// The Dirichlet inner product `⟨f, g⟩_D = Σ (k+1) f̂(k) conj(ĝ(k))`.
pub fn duality_pairing(f: &CoefficientFunction, g: &CoefficientFunction) -> Complex64 {
    f.coeffs().iter().zip(g.coeffs()).enumerate().map(|(k, (a, b))| (k as f64 + 1.0) * a * b.conj()).sum()
}

/// `(|⟨f, g⟩_D|, [f]_d · [g]_{HS_d})` using the logarithmic norms.
/// The first component never exceeds the second.
pub fn pairing_bound_check(d: u32, f: &CoefficientFunction, g: &CoefficientFunction) -> Result<(f64, f64)> {
    let fd = norm(SpaceSpec::new(d, Space::Dd, NormVariant::Log)?, f)?;
    let ghs = norm(SpaceSpec::new(d, Space::HSd, NormVariant::Log)?, g)?;
    Ok((duality_pairing(f, g).norm(), fd * ghs))
}

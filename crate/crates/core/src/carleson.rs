//! Discrete measures on the disc, Carleson boxes, the single-box testing
//! condition for `D_d`, and a lower bound for the embedding constant.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernels::DiskPoint;
use crate::matrix::{self, HermitianMatrix};
use crate::quad;
use crate::weights;

/// Smallest vertex modulus accepted by the testing integral.
pub const MIN_VERTEX_MODULUS: f64 = 1e-12;
/// Largest moment matrix handed to the eigen-solver.
pub const MAX_EMBED_DIM: usize = 512;
const EIGEN_TOL: f64 = 1e-12;
const EIGEN_MAX_ITER: usize = 100_000;
const RADIAL_REL_TOL: f64 = 1e-10;

/// Finitely many positive point masses in the open disc.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DiscreteMeasure {
    atoms: Vec<(DiskPoint, f64)>,
}

impl DiscreteMeasure {
    pub fn new(atoms: Vec<(DiskPoint, f64)>) -> Result<Self> {
        if let Some((p, m)) = atoms.iter().find(|(_, m)| !(*m > 0.0 && m.is_finite())) {
            return Err(Error::InvalidParameter(format!("atom at {} has invalid mass {m}", p.value())));
        }
        Ok(DiscreteMeasure { atoms })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(point: DiskPoint, mass: f64) -> Result<Self> {
        Self::new(vec![(point, mass)])
    }

    pub fn atoms(&self) -> &[(DiskPoint, f64)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|(_, m)| m).sum()
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.atoms.iter().map(|&(p, m)| (p, m * factor)).collect())
    }
}

/// The box `S(a) = {z : 0 < 1-|z| < 1-|a|, |arg(z ā)| < 1-|a|}`, or its
/// dilation `S̃(a)` with both bounds doubled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarlesonBox {
    vertex: DiskPoint,
    dilated: bool,
}

impl CarlesonBox {
    pub fn new(vertex: DiskPoint, dilated: bool) -> Result<Self> {
        if vertex.modulus() < MIN_VERTEX_MODULUS {
            return Err(Error::InvalidParameter("box vertex must be away from the origin".into()));
        }
        Ok(CarlesonBox { vertex, dilated })
    }

    pub fn vertex(&self) -> DiskPoint {
        self.vertex
    }

    pub fn is_dilated(&self) -> bool {
        self.dilated
    }

    /// Radial depth and angular half-width of the box.
    pub fn half_width(&self) -> f64 {
        let h = 1.0 - self.vertex.modulus();
        if self.dilated {
            2.0 * h
        } else {
            h
        }
    }
}

/// Membership with strict inequalities; the origin belongs to no box since
/// its argument is undefined.
pub fn box_contains(b: &CarlesonBox, z: DiskPoint) -> bool {
    let zv = z.value();
    if zv == Complex64::new(0.0, 0.0) {
        return false;
    }
    let h = b.half_width();
    let depth = 1.0 - zv.norm();
    depth > 0.0 && depth < h && (zv * b.vertex.value().conj()).arg().abs() < h
}

/// `μ(box)`.
pub fn box_mass(mu: &DiscreteMeasure, b: &CarlesonBox) -> f64 {
    mu.atoms.iter().filter(|(p, _)| box_contains(b, *p)).map(|(_, m)| m).sum()
}

/// `μ(b₁ ∩ b₂)`.
pub fn box_mass_intersection(mu: &DiscreteMeasure, b1: &CarlesonBox, b2: &CarlesonBox) -> f64 {
    mu.atoms.iter().filter(|(p, _)| box_contains(b1, *p) && box_contains(b2, *p)).map(|(_, m)| m).sum()
}

/// Radial weight of the testing integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestingWeight {
    /// `log^{d-1}(1/(1-|z|²))`, the condition for `D_d`.
    Dd(u32),
    /// `(|z|²/log(1/(1-|z|²)))^{d-1}`, the dual weight for `HS_d`. The
    /// `|z|²` factor keeps it integrable at the origin and does not change
    /// it near the boundary.
    HSd(u32),
}

impl TestingWeight {
    fn eval(&self, r: f64) -> f64 {
        let t = r * r;
        match *self {
            TestingWeight::Dd(d) => weights::RadialWeight::log_power(d - 1).eval(t),
            TestingWeight::HSd(d) => weights::RadialWeight::inv_w(d - 1).eval(t),
        }
    }

    fn degree(&self) -> u32 {
        match *self {
            TestingWeight::Dd(d) | TestingWeight::HSd(d) => d,
        }
    }
}

fn wrap_angle(x: f64) -> f64 {
    let mut y = (x + PI).rem_euclid(2.0 * PI) - PI;
    if y <= -PI {
        y += 2.0 * PI;
    }
    y
}

/// Atoms of `S(a)` in coordinates relative to the vertex:
/// `(|p|, arg(p ā), mass)`.
fn relative_atoms(mu: &DiscreteMeasure, a: DiskPoint) -> Result<Vec<(f64, f64, f64)>> {
    let b = CarlesonBox::new(a, false)?;
    let ta = a.value().arg();
    Ok(mu
        .atoms
        .iter()
        .filter(|(p, _)| box_contains(&b, *p))
        .map(|(p, m)| (p.modulus(), wrap_angle(p.value().arg() - ta), *m))
        .collect())
}

/// `∫_{-W}^{W} μ(S(re^{iφ}) ∩ S(a))² dφ` in vertex-relative angles.
///
/// For fixed `r` each atom contributes on the arc `|φ - φ_p| < 1-r`
/// (mod 2π), so the integrand is a step function in `φ`.
fn angular_integral(atoms: &[(f64, f64, f64)], r: f64, half: f64) -> f64 {
    let w = 1.0 - r;
    let mut events: Vec<(f64, f64)> = Vec::with_capacity(atoms.len() * 2);
    for &(rp, phi, m) in atoms {
        if !(r < rp) {
            continue;
        }
        for j in -1..=1 {
            let shift = 2.0 * PI * j as f64;
            let lo = (phi - w + shift).max(-half);
            let hi = (phi + w + shift).min(half);
            if lo < hi {
                events.push((lo, m));
                events.push((hi, -m));
            }
        }
    }
    events.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut total = 0.0;
    let mut level = 0.0;
    let mut last = -half;
    for (x, dm) in events {
        total += level * level * (x - last);
        level += dm;
        last = x;
    }
    total
}

/// Radii where the step structure of [`angular_integral`] changes.
fn radial_breakpoints(atoms: &[(f64, f64, f64)], half: f64, r_lo: f64, r_hi: f64) -> Vec<f64> {
    let mut widths = Vec::new();
    for &(_, p, _) in atoms {
        for j in -1..=1 {
            let shift = 2.0 * PI * j as f64;
            widths.push((half - p - shift).abs());
            widths.push((-half - p - shift).abs());
        }
        for &(_, q, _) in atoms {
            for j in -2..=2 {
                widths.push((q - p + 2.0 * PI * j as f64) / 2.0);
            }
        }
    }
    let mut radii: Vec<f64> = widths.into_iter().map(|w| 1.0 - w).collect();
    radii.extend(atoms.iter().map(|&(rp, _, _)| rp));
    radii.retain(|&r| r > r_lo && r < r_hi);
    radii
}

/// The testing integral over the dilated box `S̃(a)` for `D_d`:
/// `∫ log^{d-1}(1/(1-|z|²)) (1-|z|²) μ(S(z) ∩ S(a))² dA(z) / (1-|z|²)²`.
pub fn testing_lhs(mu: &DiscreteMeasure, a: DiskPoint, d: u32, grid: usize) -> Result<f64> {
    testing_lhs_weighted(mu, a, TestingWeight::Dd(d), grid)
}

/// The testing integral with an explicit radial weight.
///
/// The angular integral is exact. In `r` it is piecewise linear, so the
/// radial integral is split at every breakpoint and at `grid` uniform
/// cuts, then integrated adaptively.
pub fn testing_lhs_weighted(mu: &DiscreteMeasure, a: DiskPoint, weight: TestingWeight, grid: usize) -> Result<f64> {
    if weight.degree() == 0 {
        return Err(Error::InvalidParameter("degree d must be at least 1".into()));
    }
    if grid < 64 {
        return Err(Error::InvalidParameter(format!("grid resolution must be at least 64, got {grid}")));
    }
    let atoms = relative_atoms(mu, a)?;
    let h = 1.0 - a.modulus();
    let half = (2.0 * h).min(PI);
    let r_lo = (1.0 - 2.0 * h).max(0.0);
    let r_hi = atoms.iter().map(|x| x.0).fold(r_lo, f64::max);
    if atoms.is_empty() || r_hi <= r_lo {
        return Ok(0.0);
    }
    let mut breaks: Vec<f64> = (0..=grid).map(|i| r_lo + (r_hi - r_lo) * i as f64 / grid as f64).collect();
    breaks.extend(radial_breakpoints(&atoms, half, r_lo, r_hi));
    breaks.sort_by(f64::total_cmp);
    breaks.dedup_by(|x, y| (*x - *y).abs() <= 1e-14);
    let integrand = |r: f64| {
        let s = 1.0 - r * r;
        weight.eval(r) / s * angular_integral(&atoms, r, half) * r
    };
    quad::integrate(&integrand, &breaks, RADIAL_REL_TOL)
}

/// One vertex of a [`carleson_report`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarlesonRow {
    pub vertex: DiskPoint,
    pub box_mass: f64,
    pub lhs: f64,
    /// `lhs / μ(S(a))`, `None` when the box carries no mass.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CarlesonReport {
    pub rows: Vec<CarlesonRow>,
    /// Empirical testing constant: the largest ratio, 0 if every row is trivial.
    pub max_ratio: f64,
}

/// Testing ratios over a sweep of vertices.
pub fn carleson_report(mu: &DiscreteMeasure, d: u32, vertices: &[DiskPoint], grid: usize) -> Result<CarlesonReport> {
    carleson_report_weighted(mu, TestingWeight::Dd(d), vertices, grid)
}

pub fn carleson_report_weighted(
    mu: &DiscreteMeasure,
    weight: TestingWeight,
    vertices: &[DiskPoint],
    grid: usize,
) -> Result<CarlesonReport> {
    let mut rows = Vec::with_capacity(vertices.len());
    let mut max_ratio: f64 = 0.0;
    for &v in vertices {
        let b = CarlesonBox::new(v, false)?;
        let mass = box_mass(mu, &b);
        if mass == 0.0 {
            rows.push(CarlesonRow { vertex: v, box_mass: 0.0, lhs: 0.0, ratio: None });
            continue;
        }
        let lhs = testing_lhs_weighted(mu, v, weight, grid)?;
        let ratio = lhs / mass;
        max_ratio = max_ratio.max(ratio);
        rows.push(CarlesonRow { vertex: v, box_mass: mass, lhs, ratio: Some(ratio) });
    }
    Ok(CarlesonReport { rows, max_ratio })
}

/// `sup ∫|f|² dμ / ‖f‖²_{D_d}` over polynomials of degree at most `degree`,
/// the top eigenvalue of `A^{1/2} M A^{1/2}` with `M(j,k) = Σ m p̄^j p^k`
/// and `A = diag(a_d(k))`. Nondecreasing in `degree` and bounded by the
/// embedding constant.
pub fn embedding_constant(mu: &DiscreteMeasure, d: u32, degree: usize) -> Result<f64> {
    if degree + 1 > MAX_EMBED_DIM {
        return Err(Error::InvalidParameter(format!("moment matrix dimension {} exceeds {MAX_EMBED_DIM}", degree + 1)));
    }
    if mu.atoms.is_empty() {
        return Ok(0.0);
    }
    let a = weights::compute_weights(d, degree)?;
    let scale: Vec<f64> = a.values().iter().map(|x| x.sqrt()).collect();
    // powers[i][k] = p_i^k
    let powers: Vec<Vec<Complex64>> = mu
        .atoms
        .iter()
        .map(|(p, _)| {
            let mut v = Vec::with_capacity(degree + 1);
            let mut x = Complex64::new(1.0, 0.0);
            for _ in 0..=degree {
                v.push(x);
                x *= p.value();
            }
            v
        })
        .collect();
    let m = HermitianMatrix::from_upper(degree + 1, |j, k| {
        let s: Complex64 = mu.atoms.iter().zip(&powers).map(|((_, mass), pw)| *mass * pw[j].conj() * pw[k]).sum();
        s * scale[j] * scale[k]
    });
    matrix::top_eigenvalue(&m, EIGEN_TOL, EIGEN_MAX_ITER)
}

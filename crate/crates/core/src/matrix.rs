//! Dense Hermitian matrices, a pivoted Cholesky positive-semidefiniteness
//! test, and power iteration for the top eigenvalue.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Entry-wise tolerance for the Hermitian symmetry check.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Square complex matrix stored row-major, Hermitian up to [`HERMITIAN_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Validates symmetry relative to the largest entry magnitude; the
    /// diagonal is made exactly real.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::InvalidParameter(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        let scale = entries.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for i in 0..dim {
            for j in i..dim {
                let dev = (entries[i * dim + j] - entries[j * dim + i].conj()).norm();
                if dev > HERMITIAN_TOL * scale {
                    return Err(Error::NotHermitian { row: i, col: j, deviation: dev });
                }
            }
        }
        let mut m = HermitianMatrix { dim, entries };
        for i in 0..dim {
            let d = m.entries[i * dim + i].re;
            m.entries[i * dim + i] = Complex64::new(d, 0.0);
        }
        Ok(m)
    }

    /// Builds the matrix from a function of the upper-triangle indices,
    /// mirroring the lower triangle so symmetry is exact.
    pub fn from_upper<F: FnMut(usize, usize) -> Complex64>(dim: usize, mut f: F) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                entries[i * dim + j] = v;
                entries[j * dim + i] = v.conj();
            }
            entries[i * dim + i].im = 0.0;
        }
        HermitianMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_upper(dim, |i, j| if i == j { 1.0.into() } else { 0.0.into() })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        Self::from_upper(values.len(), |i, j| if i == j { values[i].into() } else { 0.0.into() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i).re).sum()
    }

    /// Largest absolute entry-wise difference.
    pub fn max_abs_diff(&self, other: &HermitianMatrix) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::InvalidParameter("matrix dimensions differ".into()));
        }
        Ok(self.entries.iter().zip(&other.entries).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    fn matvec(&self, x: &[Complex64], out: &mut [Complex64]) {
        for (i, o) in out.iter_mut().enumerate() {
            let row = &self.entries[i * self.dim..(i + 1) * self.dim];
            *o = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }
}

/// Outcome of [`psd_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdReport {
    pub is_psd: bool,
    /// 1-based elimination step at which a pivot fell below `-tol·scale`.
    pub witness: Option<usize>,
    /// Smallest pivot accepted or rejected during elimination.
    pub min_pivot: f64,
}

/// Positive-semidefiniteness by diagonally pivoted Cholesky elimination.
///
/// Pivots down to `-tol·Σ|a_ii|` are accepted as zero. Once every remaining
/// diagonal entry is within that band the remaining off-diagonal block must
/// be within it too, otherwise a 2x2 principal minor is negative.
pub fn psd_check(m: &HermitianMatrix, tol: f64) -> PsdReport {
    let n = m.dim;
    let scale: f64 = (0..n).map(|i| m.get(i, i).re.abs()).sum::<f64>().max(f64::MIN_POSITIVE);
    let thr = tol * scale;
    let mut a = m.entries.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut min_pivot = f64::INFINITY;
    for step in 1..=n {
        let (pos, &p) = active
            .iter()
            .enumerate()
            .max_by(|x, y| a[x.1 * n + x.1].re.total_cmp(&a[y.1 * n + y.1].re))
            .expect("active set non-empty");
        let pivot = a[p * n + p].re;
        min_pivot = min_pivot.min(pivot);
        if pivot < -thr {
            return PsdReport { is_psd: false, witness: Some(step), min_pivot };
        }
        if pivot <= thr {
            for &i in &active {
                for &j in &active {
                    if i != j && a[i * n + j].norm() > thr {
                        return PsdReport { is_psd: false, witness: Some(step + 1), min_pivot };
                    }
                }
            }
            break;
        }
        active.swap_remove(pos);
        for &i in &active {
            let lip = a[i * n + p] / pivot;
            for &j in &active {
                let upd = lip * a[p * n + j];
                a[i * n + j] -= upd;
            }
        }
    }
    if min_pivot == f64::INFINITY {
        min_pivot = 0.0;
    }
    PsdReport { is_psd: true, witness: None, min_pivot }
}

/// Largest eigenvalue of a positive-semidefinite Hermitian matrix by power
/// iteration from a fixed start vector.
pub fn top_eigenvalue(m: &HermitianMatrix, tol: f64, max_iter: usize) -> Result<f64> {
    let n = m.dim;
    if n == 0 {
        return Ok(0.0);
    }
    // Generic start vector: no exact orthogonality to the top eigenvector
    // for the structured matrices used in this crate.
    let mut x: Vec<Complex64> =
        (0..n).map(|i| Complex64::new(1.0 + 0.1 * ((i as f64) * 0.7).sin(), 0.05 * ((i as f64) * 1.3).cos())).collect();
    normalize(&mut x);
    let mut y = vec![Complex64::new(0.0, 0.0); n];
    let mut lambda = 0.0;
    for _ in 0..max_iter {
        m.matvec(&x, &mut y);
        let rayleigh: f64 = x.iter().zip(&y).map(|(a, b)| (a.conj() * b).re).sum();
        let norm = y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Ok(0.0);
        }
        // residual of the Rayleigh pair
        let resid = x.iter().zip(&y).map(|(a, b)| (b - a * rayleigh).norm_sqr()).sum::<f64>().sqrt();
        if (rayleigh - lambda).abs() <= tol * rayleigh.abs() && resid <= tol.sqrt() * norm {
            return Ok(rayleigh);
        }
        lambda = rayleigh;
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(Error::EigenNonConvergence { iterations: max_iter })
}

fn normalize(x: &mut [Complex64]) {
    let n = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in x {
        *z /= n;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_is_psd() {
        let r = psd_check(&HermitianMatrix::identity(3), 1e-12);
        assert!(r.is_psd);
        assert_eq!(r.witness, None);
    }

    #[test]
    fn indefinite_diagonal_has_witness_two() {
        let r = psd_check(&HermitianMatrix::diagonal(&[1.0, -1.0]), 1e-12);
        assert!(!r.is_psd);
        assert_eq!(r.witness, Some(2));
    }

    #[test]
    fn zero_diagonal_with_coupling_is_indefinite() {
        let m = HermitianMatrix::new(2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(!psd_check(&m, 1e-12).is_psd);
    }

    #[test]
    fn rank_one_is_psd() {
        let v = [c(1.0, 0.5), c(-0.3, 2.0), c(0.0, -1.0)];
        let m = HermitianMatrix::from_upper(3, |i, j| v[i] * v[j].conj());
        assert!(psd_check(&m, 1e-12).is_psd);
        let lam = top_eigenvalue(&m, 1e-13, 1000).unwrap();
        let expect: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        assert!((lam - expect).abs() < 1e-10);
    }

    #[test]
    fn rejects_non_hermitian() {
        let e = HermitianMatrix::new(2, vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, 1.0), c(1.0, 0.0)]);
        assert!(matches!(e, Err(Error::NotHermitian { .. })));
        assert!(HermitianMatrix::new(2, vec![c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn eigenvalue_of_diagonal() {
        let m = HermitianMatrix::diagonal(&[0.5, 3.0, 2.0]);
        assert!((top_eigenvalue(&m, 1e-14, 10_000).unwrap() - 3.0).abs() < 1e-9);
    }
}

//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// `a_d(k)` for `k ≤ kmax` by repeated exact Cauchy products of `1/(n+1)`.
pub fn exact_weights(d: u32, kmax: usize) -> Vec<BigRational> {
    let base: Vec<BigRational> = (0..=kmax).map(|n| BigRational::new(BigInt::one(), BigInt::from(n + 1))).collect();
    let mut acc: Vec<BigRational> =
        (0..=kmax).map(|n| if n == 0 { BigRational::one() } else { BigRational::zero() }).collect();
    for _ in 0..d {
        acc = (0..=kmax).map(|k| (0..=k).fold(BigRational::zero(), |s, j| s + &acc[j] * &base[k - j])).collect();
    }
    acc
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("finite rational")
}

/// `Σ Π 1/(n_i+1)` over all `(n_1, …, n_d)` with `Σ n_i = k`.
pub fn brute_force_weight(d: u32, k: usize) -> f64 {
    fn go(parts: u32, left: usize, prod: f64) -> f64 {
        if parts == 1 {
            return prod / (left as f64 + 1.0);
        }
        (0..=left).map(|n| go(parts - 1, left - n, prod / (n as f64 + 1.0))).sum()
    }
    if d == 0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    go(d, k, 1.0)
}

/// `k(p, p) = |p|⁻² log(1/(1-|p|²))`, with `k(0, 0) = 1`.
pub fn dirichlet_diagonal(r: f64) -> f64 {
    let s = r * r;
    if s == 0.0 {
        1.0
    } else {
        -(-s).ln_1p() / s
    }
}

/// Whether `w` lies in the box of half-width `h` centred at angle `phi`
/// (strict inequalities).
fn in_box(w_r: f64, w_phi: f64, phi: f64, h: f64) -> bool {
    let mut dphi = (w_phi - phi).rem_euclid(2.0 * PI);
    if dphi > PI {
        dphi -= 2.0 * PI;
    }
    let depth = 1.0 - w_r;
    depth > 0.0 && depth < h && dphi.abs() < h && w_r > 0.0
}

/// Midpoint rule on an `n × n` polar grid over the dilated box at `a`:
/// `∫ log^{d-1}(1/(1-|z|²)) μ(S(z) ∩ S(a))² / (1-|z|²) dA(z)`.
pub fn dense_testing_oracle(atoms: &[(f64, f64, f64)], a: (f64, f64), d: u32, n: usize) -> f64 {
    let (ra, pa) = a;
    let h = 1.0 - ra;
    let r_lo = (1.0 - 2.0 * h).max(0.0);
    let width = (2.0 * h).min(PI);
    let dr = (1.0 - r_lo) / n as f64;
    let dphi = 2.0 * width / n as f64;
    let inside_a: Vec<(f64, f64, f64)> = atoms.iter().copied().filter(|&(r, p, _)| in_box(r, p, pa, h)).collect();
    let mut total = 0.0;
    for i in 0..n {
        let r = r_lo + (i as f64 + 0.5) * dr;
        let s = 1.0 - r * r;
        let radial = (-s.ln()).powi(d as i32 - 1) / s * r;
        let mut row = 0.0;
        for j in 0..n {
            let phi = pa - width + (j as f64 + 0.5) * dphi;
            let mass: f64 =
                inside_a.iter().filter(|&&(rp, pp, _)| in_box(rp, pp, phi, 1.0 - r)).map(|&(_, _, m)| m).sum();
            row += mass * mass;
        }
        total += radial * row;
    }
    total * dr * dphi
}

/// Spearman rank correlation (no ties expected).
pub fn spearman(x: &[f64], y: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&i, &j| v[i].total_cmp(&v[j]));
        let mut r = vec![0.0; v.len()];
        for (rank, &i) in idx.iter().enumerate() {
            r[i] = rank as f64;
        }
        r
    }
    let (rx, ry) = (ranks(x), ranks(y));
    let n = x.len() as f64;
    let d2: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - b).powi(2)).sum();
    1.0 - 6.0 * d2 / (n * (n * n - 1.0))
}

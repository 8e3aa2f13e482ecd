//! Hankel-type operators with a polynomial symbol `b` and their
//! Hilbert–Schmidt norms.
//!
//! All matrix entries are pairings `⟨e_{n_1}⋯e_{n_d}, b⟩_D`, which vanish
//! once `|n| > deg b`, so every operator lives on a finite support and the
//! Hilbert–Schmidt norms are finite sums.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spaces::CoefficientFunction;

/// Cap on the number of enumerated multi-indices.
pub const ENUMERATION_CAP: u128 = 1_000_000_000;

/// A polynomial symbol together with the tensor order of its operator.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelSymbol {
    b: CoefficientFunction,
    d: u32,
}

impl HankelSymbol {
    pub fn new(b: CoefficientFunction, d: u32) -> Result<Self> {
        if !(d == 2 || d == 3) {
            return Err(Error::InvalidParameter(format!("Hankel symbols have order 2 or 3, got {d}")));
        }
        Ok(HankelSymbol { b, d })
    }

    pub fn symbol(&self) -> &CoefficientFunction {
        &self.b
    }

    pub fn order(&self) -> u32 {
        self.d
    }
}

/// The operators whose Hilbert–Schmidt norms are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HankelOperator {
    /// `H_b : D → D̄`, order 2.
    Hb,
    /// `T_b : D → D̄ ⊗ D̄`, order 3.
    Tb,
    /// `U_b : D ⊗ D → D̄`, order 3.
    Ub,
}

impl HankelOperator {
    pub fn order(self) -> u32 {
        match self {
            HankelOperator::Hb => 2,
            HankelOperator::Tb | HankelOperator::Ub => 3,
        }
    }
}

impl FromStr for HankelOperator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hb" => Ok(HankelOperator::Hb),
            "tb" => Ok(HankelOperator::Tb),
            "ub" => Ok(HankelOperator::Ub),
            _ => Err(Error::InvalidParameter(format!("unknown operator '{s}' (expected hb, tb or ub)"))),
        }
    }
}

impl fmt::Display for HankelOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HankelOperator::Hb => "hb",
            HankelOperator::Tb => "tb",
            HankelOperator::Ub => "ub",
        })
    }
}

/// `(s+1)·conj(b̂(s))`, the pairing `⟨z^s, b⟩_D`.
fn monomial_pairing(b: &CoefficientFunction, s: usize) -> Complex64 {
    (s as f64 + 1.0) * b.coeff(s).conj()
}

/// `⟨H_b e_j, ē_k⟩ = ⟨e_j e_k, b⟩_D = (j+k+1) conj(b̂(j+k)) / √((j+1)(k+1))`.
pub fn hankel_entry_d2(j: usize, k: usize, b: &CoefficientFunction) -> Complex64 {
    monomial_pairing(b, j + k) / ((j as f64 + 1.0) * (k as f64 + 1.0)).sqrt()
}

fn support_size(deg: usize, d: u32) -> u128 {
    // number of d-tuples with |n| ≤ deg is C(deg + d, d)
    let mut c: u128 = 1;
    for i in 1..=d as u128 {
        c = c * (deg as u128 + i) / i;
    }
    c
}

fn check_budget(b: &CoefficientFunction, d: u32) -> Result<usize> {
    let deg = b.degree().max(0) as usize;
    let cube = (deg as u128 + 1).saturating_pow(d);
    if cube > ENUMERATION_CAP {
        return Err(Error::EnumerationBudget { tuples: support_size(deg, d), cap: ENUMERATION_CAP });
    }
    Ok(deg)
}

/// `(Σ_{n ∈ ℕ^d} |⟨e_{n_1}⋯e_{n_d}, b⟩_D|²)^{1/2}` by enumerating every
/// d-tuple with `|n| ≤ deg b`.
pub fn hs_norm_hankel(b: &CoefficientFunction, d: u32) -> Result<f64> {
    if d == 0 {
        return Err(Error::InvalidParameter("tensor order must be at least 1".into()));
    }
    if b.is_zero() {
        return Ok(0.0);
    }
    let deg = check_budget(b, d)?;
    fn walk(b: &CoefficientFunction, left: u32, sum: usize, prod: f64, deg: usize, acc: &mut f64) {
        if left == 0 {
            *acc += monomial_pairing(b, sum).norm_sqr() / prod;
            return;
        }
        for n in 0..=deg - sum {
            walk(b, left - 1, sum + n, prod * (n as f64 + 1.0), deg, acc);
        }
    }
    let mut acc = 0.0;
    walk(b, d, 0, 1.0, deg, &mut acc);
    Ok(acc.sqrt())
}

/// Coefficients `c(n, m)` of `T_b f` in the monomials `z̄ⁿ w̄ᵐ`, for
/// `n ≤ trunc_n`, `m ≤ trunc_m`, row-major in `n`:
/// `c(n, m) = Σ_j f̂(j) conj(b̂(n+m+j)) (n+m+j+1) / ((n+1)(m+1))`.
pub fn apply_tb(
    f: &CoefficientFunction,
    b: &CoefficientFunction,
    trunc_n: usize,
    trunc_m: usize,
) -> Result<Vec<Vec<Complex64>>> {
    let deg = b.degree();
    if (trunc_n as isize) < deg || (trunc_m as isize) < deg {
        return Err(Error::InvalidParameter(format!("truncation ({trunc_n}, {trunc_m}) below symbol degree {deg}")));
    }
    let mut out = vec![vec![Complex64::new(0.0, 0.0); trunc_m + 1]; trunc_n + 1];
    for (n, row) in out.iter_mut().enumerate() {
        for (m, c) in row.iter_mut().enumerate() {
            let denom = (n as f64 + 1.0) * (m as f64 + 1.0);
            *c = f.coeffs().iter().enumerate().map(|(j, fj)| fj * monomial_pairing(b, n + m + j)).sum::<Complex64>()
                / denom;
        }
    }
    Ok(out)
}

/// Coefficients of `U_b(f ⊗ g)` in the monomials `z̄ⁿ`, `n ≤ deg b`:
/// `Σ_{l,m} f̂(l) ĝ(m) (l+m+n+1) conj(b̂(l+m+n)) / (n+1)`.
pub fn apply_ub(f: &CoefficientFunction, g: &CoefficientFunction, b: &CoefficientFunction) -> CoefficientFunction {
    if b.is_zero() {
        return CoefficientFunction::zero();
    }
    let deg = b.degree() as usize;
    let coeffs = (0..=deg)
        .map(|n| {
            let mut s = Complex64::new(0.0, 0.0);
            for (l, fl) in f.coeffs().iter().enumerate() {
                for (m, gm) in g.coeffs().iter().enumerate() {
                    s += fl * gm * monomial_pairing(b, l + m + n);
                }
            }
            s / (n as f64 + 1.0)
        })
        .collect();
    CoefficientFunction::new(coeffs)
}

/// Hilbert–Schmidt norm of the chosen operator from its matrix against
/// orthonormal bases.
///
/// The conjugate spaces carry the same weights as `D`: the basis of
/// `D̄ ⊗ D̄` is `ē_n ē_m` with `⟨F, ē_n ē_m⟩ = c(n,m) √((n+1)(m+1))`.
pub fn hs_norm_from_matrix(op: HankelOperator, b: &CoefficientFunction, d: u32) -> Result<f64> {
    if d != op.order() {
        return Err(Error::InvalidParameter(format!("operator {op} has order {}, got d = {d}", op.order())));
    }
    if b.is_zero() {
        return Ok(0.0);
    }
    let deg = check_budget(b, d)?;
    let sum = match op {
        HankelOperator::Hb => {
            let mut s = 0.0;
            for j in 0..=deg {
                for k in 0..=deg - j {
                    s += hankel_entry_d2(j, k, b).norm_sqr();
                }
            }
            s
        }
        HankelOperator::Tb => {
            let mut s = 0.0;
            for l in 0..=deg {
                let image = apply_tb(&CoefficientFunction::basis(l), b, deg, deg)?;
                for (n, row) in image.iter().enumerate() {
                    for (m, c) in row.iter().enumerate() {
                        s += c.norm_sqr() * (n as f64 + 1.0) * (m as f64 + 1.0);
                    }
                }
            }
            s
        }
        HankelOperator::Ub => {
            let mut s = 0.0;
            for l in 0..=deg {
                let el = CoefficientFunction::basis(l);
                for m in 0..=deg - l {
                    let image = apply_ub(&el, &CoefficientFunction::basis(m), b);
                    s += image.coeffs().iter().enumerate().map(|(n, c)| c.norm_sqr() * (n as f64 + 1.0)).sum::<f64>();
                }
            }
            s
        }
    };
    Ok(sum.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{duality_pairing, norm, NormVariant, Space, SpaceSpec};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn z() -> CoefficientFunction {
        CoefficientFunction::monomial(1, c(1.0, 0.0))
    }

    fn one() -> CoefficientFunction {
        CoefficientFunction::from_real(&[1.0])
    }

    #[test]
    fn entry_examples() {
        assert_eq!(hankel_entry_d2(0, 0, &one()), c(1.0, 0.0));
        let e = hankel_entry_d2(0, 1, &z());
        assert!((e - c(2f64.sqrt(), 0.0)).norm() < 1e-15);
        let brute = duality_pairing(&CoefficientFunction::basis(0).mul(&CoefficientFunction::basis(1)), &z());
        assert!((e - brute).norm() < 1e-15);
        assert_eq!(hankel_entry_d2(5, 5, &z()), c(0.0, 0.0));
    }

    #[test]
    fn entries_are_conjugate_linear_in_symbol() {
        let b = CoefficientFunction::new(vec![c(1.0, 2.0), c(0.5, -0.5), c(0.0, 1.0)]);
        let alpha = c(0.3, 1.7);
        let scaled = b.scale(alpha);
        for j in 0..3 {
            for k in 0..3 {
                let lhs = hankel_entry_d2(j, k, &scaled);
                let rhs = alpha.conj() * hankel_entry_d2(j, k, &b);
                assert!((lhs - rhs).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn hs_norm_examples() {
        assert!((hs_norm_hankel(&z(), 2).unwrap() - 2.0).abs() < 1e-15);
        let coeff = norm(SpaceSpec::new(2, Space::HSd, NormVariant::Coeff).unwrap(), &z()).unwrap();
        assert!((coeff - 2.0).abs() < 1e-15);
        assert!((hs_norm_hankel(&one(), 3).unwrap() - 1.0).abs() < 1e-15);
        for d in 1..=4 {
            assert_eq!(hs_norm_hankel(&CoefficientFunction::zero(), d).unwrap(), 0.0);
        }
    }

    #[test]
    fn enumeration_budget() {
        let big = CoefficientFunction::monomial(1000, c(1.0, 0.0));
        assert!(matches!(hs_norm_hankel(&big, 3), Err(Error::EnumerationBudget { .. })));
        assert!(matches!(hs_norm_from_matrix(HankelOperator::Tb, &big, 3), Err(Error::EnumerationBudget { .. })));
    }

    #[test]
    fn tb_examples() {
        let t = apply_tb(&one(), &one(), 0, 0).unwrap();
        assert_eq!(t, vec![vec![c(1.0, 0.0)]]);
        let t = apply_tb(&one(), &z(), 2, 2).unwrap();
        assert!((t[1][0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((t[0][1] - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(t[0][0], c(0.0, 0.0));
        let t = apply_tb(&z(), &one(), 3, 3).unwrap();
        assert!(t.iter().flatten().all(|v| *v == c(0.0, 0.0)));
        assert!(apply_tb(&one(), &z(), 0, 3).is_err());
    }

    /// `⟨f k_z k_w, b⟩_D` expanded in `z̄ⁿ w̄ᵐ`: the coefficient is
    /// `⟨f ζ^{n+m}, b⟩_D / ((n+1)(m+1))`.
    fn tb_oracle(f: &CoefficientFunction, b: &CoefficientFunction, n: usize, m: usize) -> Complex64 {
        let shifted = f.mul(&CoefficientFunction::monomial(n + m, c(1.0, 0.0)));
        duality_pairing(&shifted, b) / ((n as f64 + 1.0) * (m as f64 + 1.0))
    }

    #[test]
    fn tb_matches_pairing_oracle() {
        let f = CoefficientFunction::new(vec![c(0.2, 1.0), c(-1.0, 0.0), c(0.0, 0.4)]);
        let b = CoefficientFunction::new(vec![c(1.0, 0.0), c(0.5, 0.5), c(0.0, -2.0), c(0.3, 0.0), c(1.0, 1.0)]);
        let t = apply_tb(&f, &b, 4, 4).unwrap();
        for (n, row) in t.iter().enumerate() {
            for (m, v) in row.iter().enumerate() {
                assert!((v - tb_oracle(&f, &b, n, m)).norm() < 1e-14);
            }
        }
        let wider = apply_tb(&f, &b, 9, 7).unwrap();
        for n in 0..=4 {
            for m in 0..=4 {
                assert_eq!(t[n][m], wider[n][m]);
            }
        }
        assert!(wider[5..].iter().flatten().all(|v| *v == c(0.0, 0.0)));
    }

    #[test]
    fn ub_examples() {
        let u = apply_ub(&one(), &one(), &one());
        assert_eq!(u.coeffs(), &[c(1.0, 0.0)]);
        let u = apply_ub(&one(), &one(), &z());
        assert!((u.coeff(1) - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(u.coeff(0), c(0.0, 0.0));
        assert!(apply_ub(&z(), &z(), &z()).is_zero());
    }

    #[test]
    fn ub_matches_pairing_oracle() {
        let f = CoefficientFunction::new(vec![c(1.0, 0.0), c(0.0, 1.0)]);
        let g = CoefficientFunction::new(vec![c(0.5, 0.0), c(0.0, 0.0), c(2.0, -1.0)]);
        let b = CoefficientFunction::new(vec![c(1.0, 0.0), c(0.5, 0.5), c(0.0, -2.0), c(0.3, 0.0), c(1.0, 1.0)]);
        let u = apply_ub(&f, &g, &b);
        // ⟨U_b(f⊗g), z̄ⁿ⟩ in D̄ equals ⟨f g zⁿ, b⟩_D, and that pairing is (n+1)·coefficient
        let fg = f.mul(&g);
        for n in 0..=4 {
            let oracle = duality_pairing(&fg.mul(&CoefficientFunction::monomial(n, c(1.0, 0.0))), &b);
            assert!((u.coeff(n) * (n as f64 + 1.0) - oracle).norm() < 1e-13);
        }
    }

    #[test]
    fn matrix_norm_examples() {
        assert!((hs_norm_from_matrix(HankelOperator::Hb, &z(), 2).unwrap() - 2.0).abs() < 1e-15);
        assert!((hs_norm_from_matrix(HankelOperator::Tb, &one(), 3).unwrap() - 1.0).abs() < 1e-15);
        assert!((hs_norm_from_matrix(HankelOperator::Ub, &one(), 3).unwrap() - 1.0).abs() < 1e-15);
        assert!(hs_norm_from_matrix(HankelOperator::Hb, &z(), 3).is_err());
        assert!(HankelSymbol::new(z(), 4).is_err());
    }
}

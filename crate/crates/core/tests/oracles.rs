mod common;

use dirichlet_spaces::bands;
use dirichlet_spaces::carleson::{self, DiscreteMeasure};
use dirichlet_spaces::cnp;
use dirichlet_spaces::kernels::{self, DiskPoint};
use dirichlet_spaces::matrix::{psd_check, top_eigenvalue, HermitianMatrix};
use dirichlet_spaces::weights;
use dirichlet_spaces::Complex64;
use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_measure(rng: &mut ChaCha8Rng, atoms: usize, radius: f64) -> DiscreteMeasure {
    DiscreteMeasure::new(
        (0..atoms).map(|_| (DiskPoint::random(rng, radius).unwrap(), rng.gen_range(0.1..2.0))).collect(),
    )
    .unwrap()
}

/// Top eigenvalue of `G_ij = √(m_i m_j) Σ_{k≤N} a_d(k) (p̄_i p_j)^k`, the
/// atom-side form of the embedding ratio, by a dense Hermitian solver.
fn atom_side_constant(mu: &DiscreteMeasure, d: u32, n: usize) -> f64 {
    let a: Vec<f64> = common::exact_weights(d, n).iter().map(common::to_f64).collect();
    let atoms = mu.atoms();
    let g = DMatrix::from_fn(atoms.len(), atoms.len(), |i, j| {
        let (pi, mi) = atoms[i];
        let (pj, mj) = atoms[j];
        let x = pi.value().conj() * pj.value();
        let s: Complex64 = a.iter().enumerate().map(|(k, ak)| ak * x.powu(k as u32)).sum();
        s * (mi * mj).sqrt()
    });
    SymmetricEigen::new(g).eigenvalues.iter().copied().fold(f64::MIN, f64::max)
}

#[test]
fn embedding_constant_matches_dense_eigen_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for d in 1..=3 {
        for atoms in [1, 2, 5, 9] {
            let mu = random_measure(&mut rng, atoms, 0.9);
            let got = carleson::embedding_constant(&mu, d, 50).unwrap();
            let oracle = atom_side_constant(&mu, d, 50);
            assert!((got - oracle).abs() <= 1e-9 * oracle, "d = {d}, {atoms} atoms: {got} vs {oracle}");
        }
    }
}

#[test]
fn single_atom_at_one_half() {
    let mu = DiscreteMeasure::single(DiskPoint::from_re_im(0.5, 0.0).unwrap(), 1.0).unwrap();
    let c = carleson::embedding_constant(&mu, 1, 40).unwrap();
    assert!((c - 4.0 * (4.0f64 / 3.0).ln()).abs() < 1e-6);
    let origin = DiscreteMeasure::single(DiskPoint::origin(), 1.0).unwrap();
    for d in 1..=4 {
        assert!((carleson::embedding_constant(&origin, d, 10).unwrap() - 1.0).abs() < 1e-14);
    }
}

fn random_hermitian(rng: &mut ChaCha8Rng, n: usize, shift: f64) -> (HermitianMatrix, DMatrix<Complex64>) {
    let b = DMatrix::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let m = &b * b.adjoint() + DMatrix::<Complex64>::identity(n, n) * Complex64::new(shift, 0.0);
    let h = HermitianMatrix::from_upper(n, |i, j| m[(i, j)]);
    (h, m)
}

#[test]
fn matrix_routines_match_dense_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [1, 3, 8, 20] {
        for shift in [0.0, 0.5, -0.3, -4.0] {
            let (h, m) = random_hermitian(&mut rng, n, shift);
            let eig = SymmetricEigen::new(m).eigenvalues;
            let (lo, hi) = eig.iter().fold((f64::MAX, f64::MIN), |(a, b), &x| (a.min(x), b.max(x)));
            let spread = hi.abs().max(lo.abs());
            if lo.abs() > 1e-6 * spread {
                assert_eq!(psd_check(&h, 1e-12).is_psd, lo > 0.0, "n = {n}, shift {shift}, λ_min {lo}");
            }
            if lo >= 0.0 {
                let top = top_eigenvalue(&h, 1e-13, 100_000).unwrap();
                assert!((top - hi).abs() <= 1e-9 * hi, "n = {n}: {top} vs {hi}");
            }
        }
    }
}

#[test]
fn testing_integral_matches_midpoint_oracle_for_several_atoms() {
    let atoms = [(0.93, 0.05, 0.4), (0.88, -0.1, 1.0), (0.97, 0.12, 0.3), (0.8, 0.3, 0.7)];
    let mu = DiscreteMeasure::new(atoms.iter().map(|&(r, t, m)| (DiskPoint::from_polar(r, t).unwrap(), m)).collect())
        .unwrap();
    for (d, a) in [(1, (0.75, 0.0)), (2, (0.82, 0.05))] {
        let got = carleson::testing_lhs(&mu, DiskPoint::from_polar(a.0, a.1).unwrap(), d, 128).unwrap();
        let oracle = common::dense_testing_oracle(&atoms, a, d, 2048);
        assert!((got - oracle).abs() <= 0.01 * oracle, "d = {d}: {got} vs {oracle}");
    }
}

#[test]
fn testing_constant_and_embedding_constant_are_rank_correlated() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let (mut c1, mut emb) = (Vec::new(), Vec::new());
    for _ in 0..16 {
        let theta = rng.gen_range(-3.0..3.0);
        let depth: f64 = 10f64.powf(rng.gen_range(-2.0..-0.5));
        let mass_scale = 10f64.powf(rng.gen_range(-1.0..1.0));
        let atoms: Vec<(DiskPoint, f64)> = (0..4)
            .map(|_| {
                let r = 1.0 - depth * rng.gen_range(0.5..1.5);
                let t = theta + depth * rng.gen_range(-1.0..1.0);
                (DiskPoint::from_polar(r, t).unwrap(), mass_scale * rng.gen_range(0.5..1.0))
            })
            .collect();
        let mu = DiscreteMeasure::new(atoms).unwrap();
        let vertices: Vec<DiskPoint> =
            (1..=10).map(|j| DiskPoint::from_polar(1.0 - 2f64.powi(-j), theta).unwrap()).collect();
        c1.push(carleson::carleson_report(&mu, 1, &vertices, 64).unwrap().max_ratio);
        emb.push(carleson::embedding_constant(&mu, 1, 60).unwrap());
    }
    let rho = common::spearman(&c1, &emb);
    assert!(rho > 0.6, "rank correlation {rho}");
}

#[test]
fn hs3_boundary_diagonal_stays_bounded() {
    let ks = [10, 100, 1_000, 10_000, 100_000, 1_000_000];
    let sums = kernels::hs_kernel_boundary_partial_sums(3, &ks).unwrap();
    let values: Vec<f64> = sums.iter().map(|s| s.1).collect();
    assert!(values.iter().all(|&v| v <= bands::HS3_DIAGONAL_BOUND));
    let increments: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    assert!(increments.iter().all(|&x| x > 0.0));
    assert!(increments.windows(2).all(|w| w[1] < w[0]), "{increments:?}");
}

#[test]
fn generating_function_regression() {
    for d in 1..=5u32 {
        for (i, &t) in bands::GENFN_T.iter().enumerate() {
            let got = weights::generating_function_ratio(d, t).unwrap();
            let frozen = bands::GENFN[d as usize - 1][i];
            assert!((got - frozen).abs() <= 1e-9 * frozen, "d = {d}, t = {t}: {got}");
        }
    }
}

#[test]
fn cnp_norm_is_equivalent_to_dd_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for d in 1..=5u32 {
        let seq = cnp::cnp_coefficients(d, bands::NORM_KMAX).unwrap();
        let a = weights::compute_weights(d, bands::NORM_KMAX).unwrap();
        let band = bands::CNP_OVER_DD[d as usize - 1];
        for _ in 0..50 {
            let f = dirichlet_spaces::spaces::CoefficientFunction::random(&mut rng, bands::NORM_KMAX);
            let sq = |w: &dyn Fn(usize) -> f64| -> f64 {
                f.coeffs().iter().enumerate().map(|(k, c)| c.norm_sqr() / w(k)).sum()
            };
            let ratio = (sq(&|k| seq.values()[k]) / sq(&|k| a[k])).sqrt();
            assert!(ratio >= 1.0 / band.hi.sqrt() && ratio <= 1.0 / band.lo.sqrt(), "d = {d}: {ratio}");
        }
    }
}

// A log-convex kernel equivalent to k^d, and Pick matrices for its
// interpolation problem.

use dirichlet_spaces::cnp::{self, psd_check};
use dirichlet_spaces::kernels::{DiskPoint, DEFAULT_TAIL_TOL};
use dirichlet_spaces::Complex64;

pub fn run_example() -> dirichlet_spaces::Result<()> {
    for d in 1..=4 {
        let seq = cnp::cnp_coefficients(d, 10_000)?;
        let first: Vec<String> = seq.values()[..4].iter().map(|a| format!("{a:.4}")).collect();
        println!(
            "d = {d}: M = {:.4}, a = [{}, ...], log-convex: {}",
            seq.threshold(),
            first.join(", "),
            cnp::check_log_convexity(seq.values())?.is_none()
        );
    }

    let seq = cnp::cnp_coefficients(2, 0)?;
    let nodes = [DiskPoint::from_re_im(0.0, 0.0)?, DiskPoint::from_re_im(0.5, 0.0)?];
    for w in [0.1, 0.9] {
        let targets = [Complex64::new(0.0, 0.0), Complex64::new(w, 0.0)];
        let pick = cnp::pick_matrix(&nodes, &targets, &seq, DEFAULT_TAIL_TOL)?;
        println!("f(0) = 0, f(0.5) = {w}: Pick matrix PSD = {}", psd_check(&pick, 1e-12).is_psd);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> dirichlet_spaces::Result<()> {
    run_example()
}

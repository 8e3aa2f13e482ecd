// Kernel Gram matrices in D_d and HS_d, and the isometry k_λ ↦ k_λ^d.

use dirichlet_spaces::kernels::{self, DiskPoint, DEFAULT_TAIL_TOL};
use dirichlet_spaces::matrix::psd_check;
use dirichlet_spaces::spaces::{NormVariant, Space, SpaceSpec};

pub fn run_example() -> dirichlet_spaces::Result<()> {
    let points =
        [DiskPoint::from_re_im(0.5, 0.0)?, DiskPoint::from_polar(0.7, 2.0)?, DiskPoint::from_re_im(-0.1, -0.6)?];
    let d = 3;
    let dd = kernels::gram_matrix(&points, SpaceSpec::new(d, Space::Dd, NormVariant::Coeff)?, DEFAULT_TAIL_TOL)?;
    println!("Gram matrix of k^3 at three points:");
    for i in 0..dd.dim() {
        let row: Vec<String> = (0..dd.dim()).map(|j| format!("{:.6}", dd.get(i, j))).collect();
        println!("  {}", row.join("  "));
    }
    println!("positive semidefinite: {}", psd_check(&dd, 1e-12).is_psd);

    let check = kernels::verify_unitary(&points, d, 1e-8)?;
    println!("max |Gram_HS3 - Gram_D3| = {:e}, passes: {}", check.max_deviation, check.passes(1e-8));
    Ok(())
}

#[allow(dead_code)]
fn main() -> dirichlet_spaces::Result<()> {
    run_example()
}

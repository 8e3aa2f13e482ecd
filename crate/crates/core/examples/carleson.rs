// Single-box testing ratios and the embedding constant of a discrete
// measure in D_d.

use dirichlet_spaces::carleson::{self, DiscreteMeasure};
use dirichlet_spaces::kernels::DiskPoint;

pub fn run_example() -> dirichlet_spaces::Result<()> {
    let mu = DiscreteMeasure::new(vec![
        (DiskPoint::from_polar(0.9, 0.0)?, 0.05),
        (DiskPoint::from_polar(0.95, 0.02)?, 0.02),
        (DiskPoint::from_polar(0.6, 1.5)?, 0.1),
    ])?;
    let vertices: Vec<DiskPoint> =
        [0.5, 0.75, 0.85].iter().map(|&r| DiskPoint::from_polar(r, 0.0)).collect::<Result<_, _>>()?;

    for d in 1..=2 {
        let report = carleson::carleson_report(&mu, d, &vertices, 256)?;
        println!("d = {d}");
        for row in &report.rows {
            println!(
                "  vertex {:.2}: mu(S) = {:.3}, testing integral = {:.6}",
                row.vertex.modulus(),
                row.box_mass,
                row.lhs
            );
        }
        println!("  max ratio {:.6}", report.max_ratio);
        for n in [10, 40, 80] {
            println!("  embedding constant, degree {n}: {:.6}", carleson::embedding_constant(&mu, d, n)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> dirichlet_spaces::Result<()> {
    run_example()
}

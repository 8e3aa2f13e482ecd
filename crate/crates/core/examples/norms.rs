// Three equivalent norms on D_d and HS_d, and the pairing between them.

use dirichlet_spaces::spaces::{self, CoefficientFunction, NormVariant, Space, SpaceSpec};

pub fn run_example() -> dirichlet_spaces::Result<()> {
    // f(z) = 1 + z - 0.5 z^3
    let f = CoefficientFunction::from_real(&[1.0, 1.0, 0.0, -0.5]);
    for space in [Space::Dd, Space::HSd] {
        for variant in [NormVariant::Coeff, NormVariant::Log, NormVariant::Area] {
            let spec = SpaceSpec::new(2, space, variant)?;
            println!("{space}/{variant}: {:.12}", spaces::norm(spec, &f)?);
        }
    }

    // z^2 in D_2 has norm sqrt(1/a_2(2)) = sqrt(12/11).
    let z2 = CoefficientFunction::from_real(&[0.0, 0.0, 1.0]);
    let n = spaces::norm(SpaceSpec::new(2, Space::Dd, NormVariant::Coeff)?, &z2)?;
    println!("|z^2| in D_2 = {n:.15} (sqrt(12/11) = {:.15})", (12.0f64 / 11.0).sqrt());

    let g = CoefficientFunction::from_real(&[0.5, -1.0, 2.0]);
    let (pairing, bound) = spaces::pairing_bound_check(2, &f, &g)?;
    println!("|<f, g>_D| = {pairing:.6} <= [f]_2 [g]_HS2 = {bound:.6}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> dirichlet_spaces::Result<()> {
    run_example()
}

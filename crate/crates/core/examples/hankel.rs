// Hilbert–Schmidt norms of Hankel-type operators, by tuple enumeration
// and from their matrices.

use dirichlet_spaces::hankel::{self, HankelOperator};
use dirichlet_spaces::spaces::{self, CoefficientFunction, NormVariant, Space, SpaceSpec};

pub fn run_example() -> dirichlet_spaces::Result<()> {
    let b = CoefficientFunction::from_real(&[0.0, 1.0, -0.5, 0.25]);

    let enumerated = hankel::hs_norm_hankel(&b, 2)?;
    let matrix = hankel::hs_norm_from_matrix(HankelOperator::Hb, &b, 2)?;
    let coeff = spaces::norm(SpaceSpec::new(2, Space::HSd, NormVariant::Coeff)?, &b)?;
    println!("d = 2: enumeration {enumerated:.12}, H_b matrix {matrix:.12}, HS_2 norm {coeff:.12}");

    let enumerated = hankel::hs_norm_hankel(&b, 3)?;
    let tb = hankel::hs_norm_from_matrix(HankelOperator::Tb, &b, 3)?;
    let ub = hankel::hs_norm_from_matrix(HankelOperator::Ub, &b, 3)?;
    println!("d = 3: enumeration {enumerated:.12}, T_b {tb:.12}, U_b {ub:.12}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> dirichlet_spaces::Result<()> {
    run_example()
}

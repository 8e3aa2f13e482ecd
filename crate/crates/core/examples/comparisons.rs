// Ratio sweeps behind the logarithmic comparisons, checked against
// their frozen bands.

use dirichlet_spaces::bands;
use dirichlet_spaces::weights::{self, RatioRange};

pub fn run_example() -> dirichlet_spaces::Result<()> {
    for d in 1..=4 {
        let ks = bands::lemma2_sample(d, 10_000);
        let moments = RatioRange::from_pairs(weights::lemma2_check(d, &ks, 1e-10)?).expect("nonempty sample");
        let b2 = weights::lemma3_b2_check(d, &bands::lemma3_epsilons(), 1e-10)?;
        let b2_max = b2.iter().map(|&(_, r)| r).fold(0.0, f64::max);
        println!(
            "d = {d}: moment ratio in [{:.4}, {:.4}], box product / eps^2 <= {:.4} (frozen {:.4})",
            moments.min,
            moments.max,
            b2_max,
            bands::LEMMA3_UPPER[d as usize - 1]
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> dirichlet_spaces::Result<()> {
    run_example()
}

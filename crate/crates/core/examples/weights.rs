// The weight sequence a_d(k): floating recurrence, exact rationals, and
// the logarithmic comparison weight.

use dirichlet_spaces::weights::{self, compute_weights, compute_weights_exact};

pub fn run_example() -> dirichlet_spaces::Result<()> {
    let d = 3;
    let a = compute_weights(d, 8)?;
    let exact = compute_weights_exact(d, 8)?;
    println!("{:>3}  {:>20}  {:>14}  {:>12}", "k", "a_3(k)", "exact", "log weight");
    for k in 0..=8 {
        println!("{k:>3}  {:>20}  {:>14}  {:>12.6}", a[k], exact[k].to_string(), weights::comparison_weight(d, k));
    }

    for d in 1..=4 {
        let range = weights::lemma1_ratio_range(d, 10_000)?;
        println!("d = {d}: comparison/a_d in [{:.6}, {:.6}]", range.min, range.max);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> dirichlet_spaces::Result<()> {
    run_example()
}

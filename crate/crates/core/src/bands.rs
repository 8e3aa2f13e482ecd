//! Frozen regression bands for the asymptotic comparisons.
//!
//! The comparisons `A ≈ B` hold with unspecified constants, so each band
//! below is the observed range of the ratio over a fixed finite sweep,
//! recorded once and widened by a small relative margin. A later run that
//! leaves a band signals a numerical regression, not a mathematical fact.

use std::f64::consts::{LN_2, LOG2_E};

/// A closed interval `[lo, hi]` of admissible ratio values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Band {
    pub lo: f64,
    pub hi: f64,
}

impl Band {
    const fn frozen(min: f64, max: f64, margin: f64) -> Self {
        Band { lo: min * (1.0 - margin), hi: max * (1.0 + margin) }
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    /// Square roots of both ends, mapping a band on weight ratios to one on
    /// norm ratios.
    pub fn sqrt(&self) -> Band {
        Band { lo: self.lo.sqrt(), hi: self.hi.sqrt() }
    }
}

/// Exact-arithmetic margin for bands of pure floating-point sums.
const TIGHT: f64 = 1e-9;
/// Margin for bands that pass through quadrature.
const LOOSE: f64 = 1e-6;

/// Sweep length for the lemma 1 ratio `comparison_weight/a_d`.
pub const LEMMA1_KMAX: usize = 100_000;

/// `comparison_weight(d, k) / a_d(k)` over `0 ≤ k ≤ 100000`, `d = 1..=6`.
pub const LEMMA1: [Band; 6] = [
    Band::frozen(1.0, 1.0, TIGHT),
    Band::frozen(0.4439802851216178, LN_2, TIGHT),
    Band::frozen(0.2849529261470473, 0.4804530139182014, TIGHT),
    Band::frozen(0.2131040838148121, 0.33302465198892944, TIGHT),
    Band::frozen(0.17160606486272742, 0.29546892618634674, TIGHT),
    Band::frozen(0.14394416190073514, 0.2999636549533955, TIGHT),
];

/// Number of geometric steps in the lemma 2 sample grid.
pub const LEMMA2_STEPS: usize = 48;

/// Geometric sample `d ≤ k ≤ kmax` used for the lemma 2 ratios.
pub fn lemma2_sample(d: u32, kmax: usize) -> Vec<usize> {
    let start = d.max(1) as f64;
    let mut ks: Vec<usize> = (0..=LEMMA2_STEPS)
        .map(|i| (start * (kmax as f64 / start).powf(i as f64 / LEMMA2_STEPS as f64)).round() as usize)
        .collect();
    ks.dedup();
    ks
}

/// `∫ t^k w_{d-1} / (log^{d-1}(k+2)/(k+1))` over `lemma2_sample(d, 100000)`, `d = 1..=5`.
pub const LEMMA2: [Band; 5] = [
    Band::frozen(0.9999999999995681, 1.0000000000000009, LOOSE),
    Band::frozen(1.0501454270165733, 1.623031921000084, LOOSE),
    Band::frozen(1.115213875565233, 2.702399706329381, LOOSE),
    Band::frozen(1.1987735218738829, 4.889375658693705, LOOSE),
    Band::frozen(1.3057336065742906, 9.729333155413514, LOOSE),
];

/// Single-point lemma 2 regressions `(d, k, ratio)`.
pub const LEMMA2_POINTS: [(u32, usize, f64); 2] = [(2, 10, 1.29657388926057), (3, 100, 1.3564358632951672)];

/// `ε = 2^{-1}, …, 2^{-20}`.
pub fn lemma3_epsilons() -> Vec<f64> {
    (1..=20).map(|i| 2f64.powi(-i)).collect()
}

/// Upper constants for `∫w_d ∫1/w_d / ε²` over `lemma3_epsilons()`, `d = 1..=4`.
/// The lower end is the Cauchy–Schwarz bound 1.
pub const LEMMA3_UPPER: [f64; 4] = [
    1.105239482064984 * (1.0 + LOOSE),
    1.5095047912015318 * (1.0 + LOOSE),
    2.616080692400406 * (1.0 + LOOSE),
    5.870128847220296 * (1.0 + LOOSE),
];

/// Sweep length for the CNP coefficient band.
pub const NOTTE_NMAX: usize = 10_000;

/// `a_n (n+1) / (1 + log^{d-1}(n+1))` for the CNP sequence, `n ≤ 10000`, `d = 1..=5`.
pub const NOTTE: [Band; 5] = [
    Band::frozen(0.49999999999999994, 0.5, TIGHT),
    Band::frozen(0.6554433459883439, 1.0, TIGHT),
    Band::frozen(0.22261888904042562, 1.0616935742346252, TIGHT),
    Band::frozen(0.051552094227312266, 1.2414371891297444, TIGHT),
    Band::frozen(0.009929414751360617, 1.3894057367270165, TIGHT),
];

/// Degree bound for the norm-equivalence bands.
pub const NORM_KMAX: usize = 200;

/// Weight ratios `coeff/log` for `D_d`, `k ≤ 200`, `d = 1..=4`.
pub const DD_COEFF_OVER_LOG: [Band; 4] = [
    Band::frozen(1.0, 1.0, TIGHT),
    Band::frozen(0.44398028512161775, LN_2, TIGHT),
    Band::frozen(0.28495292614704726, 0.48045301391820144, TIGHT),
    Band::frozen(0.2131557072269252, 0.33302465198892944, TIGHT),
];

/// Weight ratios `log/area` for `D_d`, `k ≤ 200`, `d = 1..=4`.
pub const DD_LOG_OVER_AREA: [Band; 4] = [
    Band::frozen(1.0, 2.0000000000000244, LOOSE),
    Band::frozen(1.072863539018811, 2.626395236554287, LOOSE),
    Band::frozen(1.1034889175275158, 3.166893029870159, LOOSE),
    Band::frozen(1.096767886963616, 3.6086882905700257, LOOSE),
];

/// Weight ratios `coeff/log` for `HS_d`, `k ≤ 200`, `d = 1..=4`.
pub const HS_COEFF_OVER_LOG: [Band; 4] = [
    Band::frozen(1.0, 1.0, TIGHT),
    Band::frozen(LOG2_E, 2.2523522631777984, TIGHT),
    Band::frozen(2.0813689810056077, 3.509351574385867, TIGHT),
    Band::frozen(3.002780707156906, 4.691406169741454, TIGHT),
];

/// Weight ratios `log/area` for `HS_d`, `k ≤ 200`, `d = 1..=4`.
pub const HS_LOG_OVER_AREA: [Band; 4] = [
    Band::frozen(1.0, 2.0000000000000244, LOOSE),
    Band::frozen(LN_2, 2.197224577337137, LOOSE),
    Band::frozen(0.4804530139182014, 1.2069489608125819, LOOSE),
    Band::frozen(0.33302465198892944, 0.6412635987793305, LOOSE),
];

/// Weight ratios `a_n(CNP) / a_d(n)`, `n ≤ 200`, `d = 1..=5`. The CNP norm
/// over the `D_d` norm lies in the reciprocal square-root band.
pub const CNP_OVER_DD: [Band; 5] = [
    Band::frozen(1.0, 1.0, TIGHT),
    Band::frozen(0.3653663057467352, 1.0, TIGHT),
    Band::frozen(0.0881715830047235, 1.0, TIGHT),
    Band::frozen(0.01967107118371027, 1.0, TIGHT),
    Band::frozen(0.004270944454665909, 1.0, TIGHT),
];

/// `t` values for the generating-function comparison.
pub const GENFN_T: [f64; 3] = [0.5, 0.9, 0.99];

/// Generating-function ratios at `GENFN_T`, `d = 1..=5`.
pub const GENFN: [[f64; 3]; 5] = [
    [0.9999999996285409, 0.9999999996376878, 0.9999999997965869],
    [0.6113118908166612, 0.5123380499483865, 0.4686590258813987],
    [0.4136338996700788, 0.3324061460973634, 0.2968926417941608],
    [0.3163117598884845, 0.26075924435858705, 0.22468012383139702],
    [0.27463490739430524, 0.23386956987826574, 0.18896725360327568],
];

/// Upper bound on `Σ_{k≤K} 1/((k+1)² a_3(k))` for `K ≤ 10⁶`.
pub const HS3_DIAGONAL_BOUND: f64 = 1.4298448399722647 * (1.0 + TIGHT);

/// Band for degree `d` from a 1-indexed table, if frozen.
pub fn lookup<const N: usize>(table: &[Band; N], d: u32) -> Option<Band> {
    table.get((d as usize).checked_sub(1)?).copied()
}

//! Branch-point sampling for rolling-horizon mutation.

use crate::rng::Rng64;

/// Sample the sequence index a mutation starts from.
///
/// * `ms=0`: uniform over `[0, l)`.
/// * `ms=1`: exponential decay, `P(i) = (1-dcy)*dcy^i` for `i < l-1` with the
///   residual mass on the last index.
/// * `ms=2`: a gaussian at `mu*l` with standard deviation `sigma`, rounded
///   and clamped into the sequence.
pub fn mutation_point(ms: u8, l: usize, dcy: f64, mu: f64, sigma: f64, rng: &mut Rng64) -> usize {
    assert!(l >= 1, "sequence length must be at least 1");
    if l == 1 {
        return 0;
    }
    match ms {
        0 => rng.index(l),
        1 => {
            let u = rng.next_f64();
            let mut cumulative = 0.0;
            let mut mass = 1.0 - dcy;
            for i in 0..l - 1 {
                cumulative += mass;
                if u < cumulative {
                    return i;
                }
                mass *= dcy;
            }
            l - 1
        }
        2 => {
            let x = rng.normal(mu * l as f64, sigma);
            x.clamp(0.0, (l - 1) as f64).round() as usize
        }
        other => panic!("unknown mutation-point distribution ms={other}"),
    }
}

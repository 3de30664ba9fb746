//! Seeded pseudo-random streams used throughout the engine.
//!
//! The generator is SplitMix64 (Vigna's 64-bit finaliser mix). It is tiny,
//! fast to seed (one u64), and its output stream is fixed by this module
//! alone, so games, generated actions and experiments replay identically
//! across builds. Child streams are derived by seeding a new generator from
//! the next output of the parent.

/// A 64-bit seedable, splittable PRNG with a stable output stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rng64 {
    state: u64,
}

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

impl Rng64 {
    pub fn new(seed: u64) -> Self {
        Rng64 { state: seed }
    }

    /// Deterministic per-index seed derivation for fanning work out in
    /// parallel (e.g. one independent stream per game of a batch).
    pub fn stream_seed(master: u64, index: u64) -> u64 {
        let mut rng = Rng64::new(master ^ index.wrapping_mul(GOLDEN_GAMMA));
        rng.next_u64()
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform integer in `[0, n)`. `n` must be non-zero.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        // Lemire multiply-shift; the 1/2^64 bias is irrelevant here.
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }

    /// Uniform in `[0, 1)` with 53-bit resolution.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Gaussian sample via Box-Muller (one value per pair drawn).
    pub fn normal(&mut self, mean: f64, sd: f64) -> f64 {
        let u1 = (1.0 - self.next_f64()).max(f64::MIN_POSITIVE);
        let u2 = self.next_f64();
        let z = (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos();
        mean + sd * z
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.index(i + 1);
            xs.swap(i, j);
        }
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.index(xs.len())]
    }

    /// Derive an independent child stream.
    pub fn split(&mut self) -> Rng64 {
        Rng64::new(self.next_u64())
    }
}

//! Fixed-algorithm random number generation for reproducible datasets.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood): a 64-bit counter
//! advanced by the constant `0x9E3779B97F4A7C15`, finalized by two
//! xor-shift-multiply rounds with constants `0xBF58476D1CE4E5B9` and
//! `0x94D049BB133111EB`. Uniform doubles take the top 53 bits. Normals use
//! the Box-Muller transform (no ziggurat), consuming exactly two uniforms
//! per pair and handing the pair out in order. With a fixed seed the byte
//! stream is identical on every platform, which is what lets tests quote
//! seeded rejection ratios.

/// SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `(0, 1]`; safe as a logarithm argument.
    fn next_f64_open_zero(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Standard normal source: Box-Muller over SplitMix64, caching the second
/// member of each generated pair.
#[derive(Debug, Clone)]
pub struct GaussianSource {
    rng: SplitMix64,
    spare: Option<f64>,
}

impl GaussianSource {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: SplitMix64::new(seed),
            spare: None,
        }
    }

    pub fn from_rng(rng: SplitMix64) -> Self {
        Self { rng, spare: None }
    }

    pub fn next_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = self.rng.next_f64_open_zero();
        let u2 = self.rng.next_f64();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * u2;
        self.spare = Some(radius * angle.sin());
        radius * angle.cos()
    }

    /// Uniform draw from the underlying generator. Consumes from the same
    /// stream as the normals, after any cached spare is spent.
    pub fn next_uniform(&mut self) -> f64 {
        self.rng.next_f64()
    }
}

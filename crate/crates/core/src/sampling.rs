//! Seeded sample streams for the infinite models.
//!
//! Every check draws from its own stream, derived from a master seed and
//! a stream index, so results do not depend on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pentaline::Vertex;
use crate::scalar::OrderedField;
use crate::{Qs5, Rational};

/// Numerators are drawn from `[-numerator, numerator]`, denominators from
/// `[1, denominator]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleBounds {
    pub numerator: i64,
    pub denominator: i64,
}

impl Default for SampleBounds {
    fn default() -> Self {
        Self {
            numerator: 12,
            denominator: 4,
        }
    }
}

pub struct Stream {
    rng: ChaCha8Rng,
    bounds: SampleBounds,
}

impl Stream {
    pub fn new(master_seed: u64, index: u64, bounds: SampleBounds) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
        rng.set_stream(index);
        Self { rng, bounds }
    }

    pub fn bounds(&self) -> SampleBounds {
        self.bounds
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    pub fn vertex(&mut self) -> Vertex {
        Vertex::ALL[self.below(5)]
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.bounds.numerator;
        let d = self.bounds.denominator;
        let num = self.rng.random_range(-n..=n);
        let den = self.rng.random_range(1..=d);
        Rational::from_ratio(num, den)
    }

    /// A rational strictly inside `(0, 1)`.
    pub fn unit_fraction(&mut self) -> Rational {
        let den = self
            .rng
            .random_range(2..=self.bounds.denominator.max(2) * 4);
        let num = self.rng.random_range(1..den);
        Rational::from_ratio(num, den)
    }

    pub fn qs5(&mut self) -> Qs5 {
        Qs5::new(self.rational(), self.rational())
    }
}

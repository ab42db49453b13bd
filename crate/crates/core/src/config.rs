//! Run-time settings shared by the randomized and bounded searches.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x0c0f_fee5;
pub const DEFAULT_BOUND: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Seed for every randomized search; outputs are reproducible given the seed.
    pub seed: u64,
    /// Resolution length after which a dimension is reported as undetermined.
    pub bound: usize,
    /// Random endomorphisms tried before a module is declared unsplittable.
    pub split_samples: usize,
    /// Random candidates tried when searching for an isomorphism witness.
    pub witness_samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: DEFAULT_SEED, bound: DEFAULT_BOUND, split_samples: 48, witness_samples: 64 }
    }
}

impl Config {
    /// Defaults, with the seed taken from `CMPREPROJ_SEED` when it parses.
    pub fn from_env() -> Self {
        let mut c = Self::default();
        if let Some(s) = std::env::var("CMPREPROJ_SEED").ok().and_then(|v| v.trim().parse().ok()) {
            c.seed = s;
        }
        c
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }

    /// A fresh generator; `salt` separates independent call sites.
    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

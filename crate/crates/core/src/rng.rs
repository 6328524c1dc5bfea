//! Seeded randomness.
//!
//! Every random choice in the crate flows from a single `u64` seed expanded by
//! ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`), so fixtures are
//! reproducible across runs and platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::GaussianRational;
use crate::geometry::{Conic, ProjPoint};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a + b i` with integers `|a|, |b| <= height`.
pub fn gaussian_int<R: Rng>(rng: &mut R, height: i64) -> GaussianRational {
    GaussianRational::from_ints(rng.gen_range(-height..=height), rng.gen_range(-height..=height))
}

pub fn real_int<R: Rng>(rng: &mut R, height: i64) -> GaussianRational {
    GaussianRational::from(rng.gen_range(-height..=height))
}

pub fn gaussian_vector<R: Rng>(rng: &mut R, height: i64) -> [GaussianRational; 3] {
    std::array::from_fn(|_| gaussian_int(rng, height))
}

pub fn proj_point<R: Rng>(rng: &mut R, height: i64) -> ProjPoint<GaussianRational> {
    loop {
        if let Ok(p) = ProjPoint::new(gaussian_vector(rng, height)) {
            return p;
        }
    }
}

/// A smooth conic `L_{q,m}` with Gaussian-integer coordinates.
pub fn smooth_conic<R: Rng>(rng: &mut R, height: i64) -> Conic<GaussianRational> {
    loop {
        let c = Conic::new(proj_point(rng, height), proj_point(rng, height));
        if c.is_smooth() {
            return c;
        }
    }
}

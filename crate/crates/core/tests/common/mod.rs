#![allow(dead_code)]

use jsob_core::algebra::rational::ratio;
use jsob_core::algebra::{ExactRational, Polynomial};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rational() -> impl Strategy<Value = ExactRational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
}

pub fn nonnegative_rational() -> impl Strategy<Value = ExactRational> {
    (0i64..=30, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
}

pub fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_degree + 1).prop_map(Polynomial::new)
}

/// `(1 - x^2) q` for a random `q`, so the result vanishes at `±1`.
pub fn vanishing_polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    polynomial(max_degree.saturating_sub(2)).prop_map(|q| &Polynomial::one_minus_x_squared_pow(1) * &q)
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut StdRng) -> ExactRational {
    ratio(rng.gen_range(-30..=30), rng.gen_range(1..=12))
}

pub fn random_polynomial(rng: &mut StdRng, max_degree: usize) -> Polynomial {
    let degree = rng.gen_range(0..=max_degree);
    Polynomial::new((0..=degree).map(|_| random_rational(rng)).collect())
}

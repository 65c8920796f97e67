//! Shared fixtures for the benchmarks.

use rand::rngs::StdRng;
use rand::SeedableRng;
use tspread::{random, MonomialIdeal, SpreadContext};

pub fn medium_context() -> SpreadContext {
    SpreadContext::new(12, vec![1, 0, 2, 1]).unwrap()
}

/// A reproducible strongly stable ideal that is not already lex.
pub fn medium_ideal() -> MonomialIdeal {
    let ctx = medium_context();
    let mut rng = StdRng::seed_from_u64(4242);
    loop {
        let ideal = random::strongly_stable_ideal(&ctx, &mut rng).unwrap();
        if !ideal.is_zero() && !ideal.is_unit() && !ideal.is_lex() {
            return ideal;
        }
    }
}

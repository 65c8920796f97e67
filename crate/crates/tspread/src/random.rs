//! Random strongly stable sets, ideals and admissible f-vectors, for
//! property testing and experimentation.
//!
//! Strongly stable sets are produced by seeding a random subset of a stratum
//! and closing it under all admissible exchanges `x_j (u / x_i)`, `j < i`;
//! each exchange strictly increases the lex rank, so the closure terminates.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::context::SpreadContext;
use crate::error::Result;
use crate::ideal::{minimal_generators, MonomialIdeal};
use crate::macaulay::{t_operator, FTVector};
use crate::monomial::Monomial;
use crate::set::MonomialSet;

fn exchange_closure(ctx: &SpreadContext, seed: Vec<Monomial>) -> Vec<Monomial> {
    let mut closed: std::collections::BTreeSet<Monomial> = seed.into_iter().collect();
    let mut work: Vec<Monomial> = closed.iter().cloned().collect();
    while let Some(u) = work.pop() {
        let mut prev = 0u32;
        for &i in u.indices() {
            if i == prev {
                continue;
            }
            prev = i;
            for j in 1..i {
                let e = u.exchange(i, j).expect("x_i divides u");
                if ctx.spread_ok(e.indices()) && closed.insert(e.clone()) {
                    work.push(e);
                }
            }
        }
    }
    closed.into_iter().collect()
}

/// A random t-spread strongly stable subset of `M_{n,degree,t}`.
pub fn strongly_stable_set<R: Rng + ?Sized>(
    ctx: &SpreadContext,
    degree: usize,
    rng: &mut R,
) -> Result<MonomialSet> {
    let all: Vec<Monomial> = ctx.monomials(degree)?.collect();
    if all.is_empty() {
        return Ok(MonomialSet::empty(ctx.clone(), degree));
    }
    let density = rng.gen_range(0.0..0.4);
    let seed: Vec<Monomial> = all
        .iter()
        .filter(|_| rng.gen_bool(density))
        .cloned()
        .collect();
    MonomialSet::new(ctx.clone(), degree, exchange_closure(ctx, seed))
}

/// A random t-spread strongly stable ideal: random t-spread seeds are taken
/// degree by degree, then every graded component (computed by divisibility)
/// is closed under admissible exchanges until nothing new appears, so the
/// result provably satisfies the component-wise exchange property.
pub fn strongly_stable_ideal<R: Rng + ?Sized>(
    ctx: &SpreadContext,
    rng: &mut R,
) -> Result<MonomialIdeal> {
    let d = ctx.d();
    let mut gens: Vec<Monomial> = Vec::new();
    for l in 1..=d {
        let stratum: Vec<Monomial> = ctx.monomials(l)?.collect();
        if stratum.is_empty() {
            continue;
        }
        let picks = rng.gen_range(0..=2.min(stratum.len()));
        for _ in 0..picks {
            gens.push(stratum[rng.gen_range(0..stratum.len())].clone());
        }
    }
    let mut ideal = MonomialIdeal::new(ctx.clone(), gens.clone())?;
    loop {
        let mut grew = false;
        for l in 1..=d {
            let comp = ideal.graded_component_t(l)?;
            let closed = exchange_closure(ctx, comp.elements().to_vec());
            if closed.len() > comp.len() {
                gens.extend(closed);
                grew = true;
            }
        }
        if !grew {
            break;
        }
        gens = minimal_generators(gens);
        ideal = MonomialIdeal::new(ctx.clone(), gens.clone())?;
    }
    Ok(ideal)
}

/// A random f-vector satisfying the classification bounds for `ctx`
/// (which must have full support).
pub fn valid_ft_vector<R: Rng + ?Sized>(ctx: &SpreadContext, rng: &mut R) -> Result<FTVector> {
    let d = ctx.d();
    let mut entries = vec![BigUint::one()];
    let f0 = rng.gen_range(0..=u64::from(ctx.n()));
    entries.push(BigUint::from(f0));
    for l in 0..=(d - 2) {
        let bound = t_operator(&entries[l + 1], ctx, l + 1)?;
        let bound64 = u64::try_from(&bound).unwrap_or(u64::MAX);
        entries.push(BigUint::from(rng.gen_range(0..=bound64)));
    }
    Ok(FTVector::new(entries))
}

/// A random context with `n <= max_n`, `d <= max_d` and gap entries
/// `<= max_gap`; `full_support` forces `n` past the gap sum.
pub fn context<R: Rng + ?Sized>(
    max_n: u32,
    max_d: usize,
    max_gap: u32,
    full_support: bool,
    rng: &mut R,
) -> SpreadContext {
    loop {
        let d = rng.gen_range(2..=max_d);
        let t: Vec<u32> = (0..d - 1).map(|_| rng.gen_range(0..=max_gap)).collect();
        let sum: u32 = t.iter().sum();
        let lo = if full_support { sum + 1 } else { 1 };
        if lo > max_n {
            continue;
        }
        let n = rng.gen_range(lo..=max_n);
        return SpreadContext::new(n, t).expect("n >= 1 and t nonempty");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn generated_sets_are_strongly_stable() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..40 {
            let ctx = context(8, 4, 2, false, &mut rng);
            let degree = rng.gen_range(0..=ctx.d());
            let set = strongly_stable_set(&ctx, degree, &mut rng).unwrap();
            assert!(set.is_strongly_stable());
        }
    }

    #[test]
    fn generated_ideals_are_strongly_stable() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..25 {
            let ctx = context(7, 4, 2, false, &mut rng);
            let ideal = strongly_stable_ideal(&ctx, &mut rng).unwrap();
            assert!(ideal.is_strongly_stable());
            assert!(ideal.is_t_spread());
        }
    }

    #[test]
    fn generated_ft_vectors_validate() {
        use crate::macaulay::validate_ft_vector;
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..40 {
            let ctx = context(7, 4, 2, true, &mut rng);
            let f = valid_ft_vector(&ctx, &mut rng).unwrap();
            assert!(validate_ft_vector(&f, &ctx).unwrap().is_valid());
        }
    }
}

//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime and asserting the stated budget.
//!
//! Run with `cargo test -p tspread --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tspread::{
    binomial_expansion, complement_size, dominance_check, lex_ideal_from_ft_vector, lex_segment,
    lex_set_of_size, min_of_shadow, random, t_operator, validate_ft_vector, Monomial,
    MonomialIdeal, MonomialSet, SpreadContext,
};

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("[PASS] {name} ({elapsed:.2?}, budget {budget:.2?})");
    assert!(
        elapsed < budget,
        "{name} exceeded its budget: {elapsed:.2?} >= {budget:.2?}"
    );
}

fn mono(ix: &[u32]) -> Monomial {
    Monomial::new(ix.to_vec()).unwrap()
}

fn reference_ideal() -> MonomialIdeal {
    let ctx = SpreadContext::new(6, vec![1, 0, 2]).unwrap();
    MonomialIdeal::new(
        ctx,
        vec![
            mono(&[1, 2]),
            mono(&[1, 3]),
            mono(&[1, 4]),
            mono(&[2, 3]),
            mono(&[2, 4, 4]),
            mono(&[3, 4, 4, 6]),
        ],
    )
    .unwrap()
}

fn mono_set(ctx: &SpreadContext, degree: usize, elems: &[&[u32]]) -> MonomialSet {
    MonomialSet::new(ctx.clone(), degree, elems.iter().map(|e| mono(e)).collect()).unwrap()
}

#[test]
fn criterion_01_golden_f_vector_and_components() {
    let started = Instant::now();
    let ideal = reference_ideal();
    let ctx = ideal.ctx().clone();

    let f = ideal.ft_vector().unwrap();
    assert_eq!(f.to_string(), "(1,6,11,18,0)");

    let comp2 = ideal.graded_component_t(2).unwrap();
    assert_eq!(
        comp2,
        mono_set(&ctx, 2, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3]])
    );

    let comp3 = ideal.graded_component_t(3).unwrap();
    let expect3 = mono_set(
        &ctx,
        3,
        &[
            &[1, 2, 2],
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 2, 5],
            &[1, 2, 6],
            &[1, 3, 3],
            &[1, 3, 4],
            &[1, 3, 5],
            &[1, 3, 6],
            &[1, 4, 4],
            &[1, 4, 5],
            &[1, 4, 6],
            &[2, 3, 3],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 4, 4],
        ],
    );
    assert_eq!(comp3, expect3);

    let comp4 = ideal.graded_component_t(4).unwrap();
    let expect4 = mono_set(
        &ctx,
        4,
        &[
            &[1, 2, 2, 4],
            &[1, 2, 2, 5],
            &[1, 2, 2, 6],
            &[1, 2, 3, 5],
            &[1, 2, 3, 6],
            &[1, 2, 4, 6],
            &[1, 3, 3, 5],
            &[1, 3, 3, 6],
            &[1, 3, 4, 6],
            &[1, 4, 4, 6],
            &[2, 3, 3, 5],
            &[2, 3, 3, 6],
            &[2, 3, 4, 6],
            &[2, 4, 4, 6],
            &[3, 4, 4, 6],
        ],
    );
    assert_eq!(comp4, expect4);
    assert_eq!(comp4, MonomialSet::all(&ctx, 4).unwrap());

    finish(
        "criterion 1: golden f-vector and graded components",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_golden_lexification() {
    let started = Instant::now();
    let ideal = reference_ideal();
    let lexified = ideal.lexify().unwrap();
    let expect: Vec<Monomial> = [
        &[1u32, 2][..],
        &[1, 3],
        &[1, 4],
        &[1, 5],
        &[1, 6, 6],
        &[2, 3, 3],
        &[2, 3, 4],
        &[2, 4, 4, 6],
        &[3, 4, 4, 6],
    ]
    .iter()
    .map(|e| mono(e))
    .collect();
    assert_eq!(lexified.generators(), expect.as_slice());
    assert_eq!(lexified.ft_vector().unwrap(), ideal.ft_vector().unwrap());
    finish(
        "criterion 2: golden lexification (9 generators, equal f-vector)",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_03_golden_operator() {
    let started = Instant::now();
    let ctx = SpreadContext::new(31, vec![0, 1, 3, 1]).unwrap();
    let a = BigUint::from(2023u32);
    let expansion = binomial_expansion(&a, 3).unwrap();
    assert_eq!(expansion.to_string(), "C(23,3) + C(22,2) + C(21,1)");
    assert_eq!(t_operator(&a, &ctx, 3).unwrap(), BigUint::from(7296u32));
    finish(
        "criterion 3: golden operator 2023^(31,3,(0,1,3,1)) = 7296",
        started,
        Duration::from_millis(10),
    );
}

#[test]
fn criterion_04_golden_shadow_minima() {
    let started = Instant::now();
    let ctx = SpreadContext::new(8, vec![2, 1, 2]).unwrap();
    let cases: [(&[u32], &[u32], usize); 3] = [
        (&[2, 4, 6], &[2, 4, 6, 8], 0),
        (&[2, 6, 7], &[2, 5, 6, 8], 2),
        (&[4, 6, 7], &[3, 5, 6, 8], 3),
    ];
    for (u, expect_min, expect_r) in cases {
        let u = mono(u);
        let (min, r) = min_of_shadow(&u, &ctx).unwrap();
        assert_eq!(min, mono(expect_min), "minimum for {u}");
        assert_eq!(r, expect_r, "r for {u}");
        // closed form agrees with the brute-force shadow minimum
        let shadow = lex_segment(&u, &ctx).unwrap().shadow_t();
        assert_eq!(shadow.lex_min(), Some(&min));
    }
    let segment = lex_segment(&mono(&[4, 6, 7]), &ctx).unwrap();
    assert_eq!(segment.shadow_t(), MonomialSet::all(&ctx, 4).unwrap());
    finish(
        "criterion 4: golden shadow minima over t=(2,1,2), n=8",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_05_golden_betti_tables() {
    let started = Instant::now();
    let ideal = reference_ideal();
    let report = dominance_check(&ideal).unwrap();
    let rows = |t: &tspread::BettiTable, j: u32| -> Vec<u64> {
        t.row(j).iter().map(|v| u64::try_from(v).unwrap()).collect()
    };
    assert_eq!(rows(&report.ideal_table, 2), vec![4, 4, 1]);
    assert_eq!(rows(&report.ideal_table, 3), vec![1, 2, 1]);
    assert_eq!(rows(&report.ideal_table, 4), vec![1, 2, 1]);
    assert_eq!(rows(&report.lex_table, 2), vec![4, 6, 4, 1, 0]);
    assert_eq!(rows(&report.lex_table, 3), vec![3, 7, 7, 4, 1]);
    assert_eq!(rows(&report.lex_table, 4), vec![2, 4, 2, 0, 0]);
    assert!(report.holds, "dominance must hold on the reference ideal");

    // rendering reproduces the reference layout token for token
    let left: Vec<Vec<String>> = report
        .ideal_table
        .render()
        .lines()
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect();
    assert_eq!(
        left,
        vec![
            vec!["0", "1", "2"],
            vec!["2:", "4", "4", "1"],
            vec!["3:", "1", "2", "1"],
            vec!["4:", "1", "2", "1"],
        ]
    );
    let right: Vec<Vec<String>> = report
        .lex_table
        .render()
        .lines()
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect();
    assert_eq!(
        right,
        vec![
            vec!["0", "1", "2", "3", "4"],
            vec!["2:", "4", "6", "4", "1", "."],
            vec!["3:", "3", "7", "7", "4", "1"],
            vec!["4:", "2", "4", "2", ".", "."],
        ]
    );
    finish(
        "criterion 5: golden Betti tables and dominance verdict",
        started,
        Duration::from_secs(1),
    );
}

fn gap_vectors(d: usize, max_entry: u32) -> Vec<Vec<u32>> {
    (0..d - 1)
        .map(|_| 0..=max_entry)
        .multi_cartesian_product()
        .collect()
}

#[test]
fn criterion_06_operator_counts_shadow_complements() {
    let started = Instant::now();
    let mut checked = 0u64;
    for d in 2..=4usize {
        for t in gap_vectors(d, 2) {
            for n in 1..=8u32 {
                let ctx = SpreadContext::new(n, t.clone()).unwrap();
                for l in 1..d {
                    if !ctx.is_full_support() {
                        // the operator is undefined without full support
                        assert!(t_operator(&BigUint::from(0u32), &ctx, l).is_err());
                        continue;
                    }
                    let stratum: Vec<Monomial> = ctx.monomials(l).unwrap().collect();
                    let next_count = ctx.count(l + 1).unwrap();
                    // The shadow of the first k monomials grows monotonically,
                    // so one sweep accumulates every segment's shadow.
                    let mut shadow: BTreeSet<Monomial> = BTreeSet::new();
                    for (rank, u) in stratum.iter().enumerate() {
                        for i in 1..=n {
                            let prod = u.multiply_var(i);
                            if ctx.is_t_spread(&prod).unwrap() {
                                shadow.insert(prod);
                            }
                        }
                        let comp = complement_size(u, &ctx).unwrap();
                        let a = comp.value();
                        assert_eq!(
                            a,
                            BigUint::from(stratum.len() - rank - 1),
                            "complement count for {u} over n={n} t={t:?}"
                        );
                        let lhs = t_operator(&a, &ctx, l).unwrap();
                        let rhs = next_count.clone() - BigUint::from(shadow.len());
                        assert_eq!(lhs, rhs, "u={u} n={n} t={t:?} l={l}");
                        checked += 1;
                    }
                }
            }
        }
    }
    finish(
        &format!("criterion 6: operator matches shadow complements on {checked} segments"),
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_07_lex_sets_minimize_max_statistics() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(24);
    let mut pairs = 0;
    while pairs < 500 {
        let ctx = random::context(9, 4, 2, false, &mut rng);
        let degree = rng.gen_range(0..=ctx.d());
        let stable = random::strongly_stable_set(&ctx, degree, &mut rng).unwrap();
        let lex = lex_set_of_size(&ctx, degree, &BigUint::from(stable.len())).unwrap();
        let stable_stats = stable.max_stats();
        let lex_stats = lex.max_stats();
        for i in 0..=ctx.n() as i64 {
            assert!(
                lex_stats.m_leq(i) <= stable_stats.m_leq(i),
                "m_<={i} fails on n={} t={:?} degree={degree}",
                ctx.n(),
                ctx.t()
            );
        }
        pairs += 1;
    }
    finish(
        "criterion 7: lex sets minimize prefix max-statistics (500 pairs)",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_08_f_vector_classification_both_directions() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(36);

    // every strongly stable ideal's f-vector satisfies the growth bounds
    let mut forward = 0;
    while forward < 300 {
        let ctx = random::context(7, 4, 2, true, &mut rng);
        let ideal = random::strongly_stable_ideal(&ctx, &mut rng).unwrap();
        let f = ideal.ft_vector().unwrap();
        let check = validate_ft_vector(&f, &ctx).unwrap();
        assert!(
            check.is_valid(),
            "f-vector {f} of {ideal} rejected: {:?}",
            check.violation
        );
        forward += 1;
    }

    // every vector satisfying the bounds is realized by its witness lex ideal
    let mut backward = 0;
    while backward < 300 {
        let ctx = random::context(7, 4, 2, true, &mut rng);
        let f = random::valid_ft_vector(&ctx, &mut rng).unwrap();
        let witness = lex_ideal_from_ft_vector(&f, &ctx).unwrap();
        assert!(witness.is_lex());
        assert_eq!(witness.ft_vector().unwrap(), f, "witness misses {f}");
        backward += 1;
    }
    finish(
        "criterion 8: f-vector classification, 300 trials each direction",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_09_classical_specializations() {
    let started = Instant::now();

    // independent greedy expansion over u128, by linear descent on the top
    fn binom_u128(top: u64, k: u64) -> u128 {
        if top < k {
            return 0;
        }
        let mut r: u128 = 1;
        for x in 0..k {
            r = r * (top - x) as u128 / (x + 1) as u128;
        }
        r
    }
    fn naive_expansion(a: u64, l: u32) -> Vec<(u64, u32)> {
        let mut rem = a as u128;
        let mut out = Vec::new();
        let mut j = l;
        while rem > 0 {
            let mut top = u64::from(j);
            while binom_u128(top + 1, u64::from(j)) <= rem {
                top += 1;
            }
            out.push((top, j));
            rem -= binom_u128(top, u64::from(j));
            j -= 1;
        }
        out
    }
    // a^<l> (Macaulay) and a^(l) (Kruskal-Katona)
    fn macaulay_step(a: u64, l: u32) -> u128 {
        naive_expansion(a, l)
            .iter()
            .map(|&(top, j)| binom_u128(top + 1, u64::from(j) + 1))
            .sum()
    }
    fn kruskal_katona_step(a: u64, l: u32) -> u128 {
        naive_expansion(a, l)
            .iter()
            .map(|&(top, j)| binom_u128(top, u64::from(j) + 1))
            .sum()
    }

    let all_ctx = SpreadContext::new(5001, vec![0; 6]).unwrap();
    let squarefree_ctx = SpreadContext::new(5001, vec![1; 6]).unwrap();
    for l in 1..=6usize {
        for a in 0..=5000u64 {
            let big = BigUint::from(a);
            assert_eq!(
                t_operator(&big, &all_ctx, l).unwrap(),
                BigUint::from(macaulay_step(a, l as u32)),
                "Macaulay a={a} l={l}"
            );
            assert_eq!(
                t_operator(&big, &squarefree_ctx, l).unwrap(),
                BigUint::from(kruskal_katona_step(a, l as u32)),
                "Kruskal-Katona a={a} l={l}"
            );
        }
    }
    finish(
        "criterion 9: classical Macaulay and Kruskal-Katona specializations",
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_10_shadow_lemma_suites() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(58);
    let mut stable_runs = 0;
    while stable_runs < 250 {
        let ctx = random::context(9, 4, 2, false, &mut rng);
        let degree = rng.gen_range(0..ctx.d());
        let set = random::strongly_stable_set(&ctx, degree, &mut rng).unwrap();
        let shadow = set.shadow_t();

        // shadow via max-extensions only
        let mut extended: BTreeSet<Monomial> = BTreeSet::new();
        for w in set.iter() {
            let lo = w.max_index().unwrap_or(1);
            for j in lo..=ctx.n() {
                let prod = w.multiply_var(j);
                if ctx.is_t_spread(&prod).unwrap() {
                    extended.insert(prod);
                }
            }
        }
        let by_extension: Vec<Monomial> = extended.into_iter().collect();
        assert_eq!(shadow.elements(), by_extension.as_slice());

        // max-statistics transfer and the size formula
        let t_l = ctx.gap(degree) as i64;
        let set_stats = set.max_stats();
        let shadow_stats = shadow.max_stats();
        for i in 1..=ctx.n() as usize {
            assert_eq!(
                shadow_stats.m(i),
                set_stats.m_leq(i as i64 - t_l),
                "m_{i} of shadow, degree {degree}"
            );
        }
        let lo = 1 + ctx.gap_sum(1, degree.saturating_sub(1));
        let hi = ctx.n() as i64 - t_l;
        let mut size = 0u64;
        for k in lo..=hi {
            size += set_stats.m_leq(k);
        }
        assert_eq!(size, shadow.len() as u64);

        // stability is preserved
        assert!(shadow.is_strongly_stable());
        stable_runs += 1;
    }

    // lex sets: shadows stay lex
    let mut lex_runs = 0;
    while lex_runs < 250 {
        let ctx = random::context(9, 4, 2, false, &mut rng);
        let degree = rng.gen_range(0..ctx.d());
        let max = ctx.count(degree).unwrap();
        let size = BigUint::from(rng.gen_range(0..=u64::try_from(&max).unwrap()));
        let lex = lex_set_of_size(&ctx, degree, &size).unwrap();
        assert!(lex.shadow_t().is_lex());
        lex_runs += 1;
    }
    finish(
        "criterion 10: shadow characterization, max-statistics and preservation",
        started,
        Duration::from_secs(60),
    );
}

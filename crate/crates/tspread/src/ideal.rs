//! Monomial ideals given by their minimal generators: graded t-spread
//! components, f-vectors, strongly-stable and lex predicates, and the
//! lexification that preserves the f-vector.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::context::SpreadContext;
use crate::error::{Error, Result};
use crate::macaulay::FTVector;
use crate::monomial::Monomial;
use crate::set::{ExchangeViolation, MonomialSet};

/// A monomial ideal, stored as its unique minimal generating set, ordered by
/// degree and descending lex within each degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ctx: SpreadContext,
    generators: Vec<Monomial>,
}

/// Removes every monomial properly divisible by another: the unique minimal
/// generating set of the ideal the input generates.
pub fn minimal_generators(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut uniq: Vec<Monomial> = gens;
    uniq.sort_unstable_by_key(|u| (u.degree(), u.indices().to_vec()));
    uniq.dedup();
    let mut keep: Vec<Monomial> = Vec::with_capacity(uniq.len());
    for u in uniq {
        if !keep.iter().any(|g| g.divides(&u)) {
            keep.push(u);
        }
    }
    keep
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens` (minimalized internally).
    pub fn new(ctx: SpreadContext, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            ctx.check_monomial(g)?;
        }
        Ok(MonomialIdeal {
            ctx,
            generators: minimal_generators(gens),
        })
    }

    /// The zero ideal.
    pub fn zero(ctx: SpreadContext) -> Self {
        MonomialIdeal {
            ctx,
            generators: Vec::new(),
        }
    }

    pub fn ctx(&self) -> &SpreadContext {
        &self.ctx
    }

    /// Minimal generators, by degree then descending lex.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn generators_of_degree(&self, degree: usize) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().filter(move |g| g.degree() == degree)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether `1` belongs to the ideal.
    pub fn is_unit(&self) -> bool {
        self.generators.first().is_some_and(Monomial::is_unit)
    }

    /// Smallest generator degree; `None` for the zero ideal.
    pub fn indeg(&self) -> Option<usize> {
        self.generators.first().map(Monomial::degree)
    }

    /// Largest generator degree; `None` for the zero ideal.
    pub fn max_degree(&self) -> Option<usize> {
        self.generators.last().map(Monomial::degree)
    }

    /// Membership: divisibility by some minimal generator.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Every generator is t-spread for the ideal's context.
    pub fn is_t_spread(&self) -> bool {
        self.generators
            .iter()
            .all(|g| self.ctx.spread_ok(g.indices()))
    }

    /// `[I_l]_t`: the t-spread degree-`l` monomials lying in the ideal.
    pub fn graded_component_t(&self, degree: usize) -> Result<MonomialSet> {
        let elements: Vec<Monomial> = self
            .ctx
            .monomials(degree)?
            .filter(|m| self.contains(m))
            .collect();
        Ok(MonomialSet::from_sorted(self.ctx.clone(), degree, elements))
    }

    /// The f-vector `(f_{-1}, f_0, ..., f_{d-1})` with
    /// `f_{l-1} = |M_{n,l,t}| - |[I_l]_t|`. The unit ideal is rejected:
    /// `f_{-1} = 1` is baked into the classification.
    pub fn ft_vector(&self) -> Result<FTVector> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let d = self.ctx.d();
        let mut entries = Vec::with_capacity(d + 1);
        for l in 0..=d {
            let total = self.ctx.count(l)?;
            let hit = BigUint::from(self.graded_component_t(l)?.len());
            entries.push(total - hit);
        }
        Ok(FTVector::new(entries))
    }

    /// First failure of Definition-style strong stability, if any: either a
    /// generator that is not t-spread, or a graded component admitting a
    /// missing exchange.
    pub fn strongly_stable_violation(&self) -> Result<Option<IdealViolation>> {
        if let Some(g) = self
            .generators
            .iter()
            .find(|g| !self.ctx.spread_ok(g.indices()))
        {
            return Ok(Some(IdealViolation::NotTSpreadGenerator(g.clone())));
        }
        for l in 0..=self.ctx.d() {
            if let Some(v) = self.graded_component_t(l)?.strongly_stable_violation() {
                return Ok(Some(IdealViolation::Component {
                    degree: l,
                    violation: v,
                }));
            }
        }
        Ok(None)
    }

    /// Strongly stable: every `[I_l]_t` is closed under admissible exchanges.
    pub fn is_strongly_stable(&self) -> bool {
        matches!(self.strongly_stable_violation(), Ok(None))
    }

    /// Lex ideal: every `[I_l]_t` is an initial lex segment.
    pub fn lex_violation(&self) -> Result<Option<(usize, Monomial)>> {
        if let Some(g) = self
            .generators
            .iter()
            .find(|g| !self.ctx.spread_ok(g.indices()))
        {
            return Ok(Some((g.degree(), g.clone())));
        }
        for l in 0..=self.ctx.d() {
            if let Some(missing) = self.graded_component_t(l)?.lex_violation() {
                return Ok(Some((l, missing)));
            }
        }
        Ok(None)
    }

    pub fn is_lex(&self) -> bool {
        matches!(self.lex_violation(), Ok(None))
    }

    /// The unique t-spread lex ideal with the same f-vector. Defined for
    /// strongly stable ideals only; others are rejected (a lex companion
    /// need not exist for them).
    pub fn lexify(&self) -> Result<MonomialIdeal> {
        Ok(self.lexify_trace()?.ideal)
    }

    /// Lexification along with the intermediate sets of the construction:
    /// for each degree the lex set `L_l` of size `|[I_l]_t|` and the basis
    /// `B_l = L_l u Shad_0(B_{l-1})` of the new ideal's degree-`l` piece.
    pub fn lexify_trace(&self) -> Result<LexifyTrace> {
        if let Some(v) = self.strongly_stable_violation()? {
            return Err(Error::NotStronglyStable(v.to_string()));
        }
        let d = self.ctx.d();
        let mut sizes = Vec::with_capacity(d + 1);
        for l in 0..=d {
            sizes.push(BigUint::from(self.graded_component_t(l)?.len()));
        }
        lex_ideal_from_sizes(&self.ctx, &sizes)
    }

    /// Parses the ideal file format: a header `n=<int> t=<comma list>`,
    /// then one generator per line (power form or index list).
    pub fn parse_text(text: &str) -> Result<MonomialIdeal> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        });
        let (pos, header) = lines.next().ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "missing header line `n=<int> t=<comma list>`".into(),
        })?;
        let ctx = parse_header(pos, header)?;
        let mut gens = Vec::new();
        for (_, line) in lines {
            gens.push(Monomial::parse(line, &ctx)?);
        }
        MonomialIdeal::new(ctx, gens)
    }
}

fn parse_header(pos: usize, header: &str) -> Result<SpreadContext> {
    let mut n: Option<u32> = None;
    let mut t: Option<Vec<u32>> = None;
    for field in header.split_whitespace() {
        if let Some(v) = field.strip_prefix("n=") {
            n = Some(v.parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("invalid n `{v}`"),
            })?);
        } else if let Some(v) = field.strip_prefix("t=") {
            let parsed: std::result::Result<Vec<u32>, _> =
                v.split(',').map(|x| x.trim().parse()).collect();
            t = Some(parsed.map_err(|_| Error::Parse {
                pos,
                msg: format!("invalid t list `{v}`"),
            })?);
        } else {
            return Err(Error::Parse {
                pos,
                msg: format!("unexpected header field `{field}`"),
            });
        }
    }
    match (n, t) {
        (Some(n), Some(t)) => SpreadContext::new(n, t),
        _ => Err(Error::Parse {
            pos,
            msg: "header must provide both n= and t=".into(),
        }),
    }
}

impl fmt::Display for MonomialIdeal {
    /// The ideal file format: header line, then one generator per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} t=", self.ctx.n())?;
        for (k, t) in self.ctx.t().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        writeln!(f)?;
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Why an ideal fails the strongly-stable check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealViolation {
    NotTSpreadGenerator(Monomial),
    Component {
        degree: usize,
        violation: ExchangeViolation,
    },
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealViolation::NotTSpreadGenerator(g) => {
                write!(f, "generator {g} is not t-spread")
            }
            IdealViolation::Component { degree, violation } => {
                write!(f, "degree {degree}: {violation}")
            }
        }
    }
}

/// The lexified ideal plus the per-degree sets of its construction.
#[derive(Debug, Clone)]
pub struct LexifyTrace {
    /// `L_l` for `l = 0..=d`: the unique lex set of the prescribed size.
    pub lex_sets: Vec<MonomialSet>,
    /// `B_l = L_l u Shad_0(B_{l-1})` for `l = 0..=d`, in zero-spread contexts.
    pub basis_sets: Vec<MonomialSet>,
    pub ideal: MonomialIdeal,
}

/// Builds the t-spread lex ideal whose degree-`l` t-spread component has the
/// prescribed size, for `l = 0..=d`. Minimal generators are extracted by
/// cross-degree divisibility, which agrees with `L_l \ Shad_0(B_{l-1})`.
pub(crate) fn lex_ideal_from_sizes(ctx: &SpreadContext, sizes: &[BigUint]) -> Result<LexifyTrace> {
    let d = ctx.d();
    debug_assert_eq!(sizes.len(), d + 1);
    let mut lex_sets = Vec::with_capacity(d + 1);
    let mut basis_sets: Vec<MonomialSet> = Vec::with_capacity(d + 1);
    let mut gens: Vec<Monomial> = Vec::new();
    for l in 0..=d {
        let lex = crate::set::lex_set_of_size(ctx, l, &sizes[l])?;
        let mut basis: BTreeSet<Monomial> = lex.iter().cloned().collect();
        if l > 0 {
            for m in basis_sets[l - 1].shadow_0().iter() {
                basis.insert(m.clone());
            }
        }
        gens.extend(lex.iter().cloned());
        lex_sets.push(lex);
        basis_sets.push(MonomialSet::from_sorted(
            SpreadContext::zero_spread(ctx.n(), l),
            l,
            basis.into_iter().collect(),
        ));
    }
    let ideal = MonomialIdeal::new(ctx.clone(), gens)?;
    Ok(LexifyTrace {
        lex_sets,
        basis_sets,
        ideal,
    })
}

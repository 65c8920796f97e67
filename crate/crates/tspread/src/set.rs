//! Sets of same-degree monomials: spread shadows, strongly-stable and lex
//! predicates, max-index statistics, and lex segments.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::context::SpreadContext;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A finite, duplicate-free set of degree-`l` monomials, stored in descending
/// lex order. Every element is t-spread for the set's own context; sets of
/// arbitrary monomials (classical-shadow results) carry a zero-spread context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSet {
    ctx: SpreadContext,
    degree: usize,
    elements: Vec<Monomial>,
}

impl MonomialSet {
    pub fn empty(ctx: SpreadContext, degree: usize) -> Self {
        MonomialSet {
            ctx,
            degree,
            elements: Vec::new(),
        }
    }

    /// Builds a set after validating degree uniformity, index range and the
    /// t-spread predicate; sorts descending-lex and drops duplicates.
    pub fn new(ctx: SpreadContext, degree: usize, elements: Vec<Monomial>) -> Result<Self> {
        let mut elems = elements;
        for u in &elems {
            if u.degree() != degree {
                return Err(Error::MixedDegrees {
                    expected: degree,
                    found: u.degree(),
                });
            }
            ctx.check_monomial(u)?;
            if !ctx.spread_ok(u.indices()) {
                return Err(Error::NotTSpread(u.to_string()));
            }
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(MonomialSet {
            ctx,
            degree,
            elements: elems,
        })
    }

    pub(crate) fn from_sorted(ctx: SpreadContext, degree: usize, elements: Vec<Monomial>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.iter().all(|u| u.degree() == degree));
        MonomialSet {
            ctx,
            degree,
            elements,
        }
    }

    /// The full stratum `M_{n,l,t}`.
    pub fn all(ctx: &SpreadContext, degree: usize) -> Result<Self> {
        let elements: Vec<Monomial> = ctx.monomials(degree)?.collect();
        Ok(MonomialSet::from_sorted(ctx.clone(), degree, elements))
    }

    pub fn ctx(&self) -> &SpreadContext {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in descending lex order.
    pub fn iter(&self) -> std::slice::Iter<'_, Monomial> {
        self.elements.iter()
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.elements.binary_search(u).is_ok()
    }

    /// Lex-largest element.
    pub fn lex_max(&self) -> Option<&Monomial> {
        self.elements.first()
    }

    /// Lex-smallest element.
    pub fn lex_min(&self) -> Option<&Monomial> {
        self.elements.last()
    }

    /// The t-spread shadow `{ x_i w : w in L, x_i w t-spread }` at degree
    /// `l + 1`, relative to this set's own context. Empty once `l >= d`.
    pub fn shadow_t(&self) -> MonomialSet {
        self.shadow_t_in(&self.ctx)
    }

    /// Shadow relative to an explicit context; the lexified-ideal
    /// construction takes t-spread shadows of plain (zero-spread) sets.
    pub fn shadow_t_in(&self, ctx: &SpreadContext) -> MonomialSet {
        let out_degree = self.degree + 1;
        let mut out: BTreeSet<Monomial> = BTreeSet::new();
        if out_degree <= ctx.d() {
            for w in &self.elements {
                for i in 1..=ctx.n() {
                    let prod = w.multiply_var(i);
                    if ctx.spread_ok(prod.indices()) {
                        out.insert(prod);
                    }
                }
            }
        }
        MonomialSet::from_sorted(ctx.clone(), out_degree, out.into_iter().collect())
    }

    /// Classical shadow `{ x_i w : w in L, i in [n] }`: no spread filter and
    /// no degree cutoff. The result carries a zero-spread context.
    pub fn shadow_0(&self) -> MonomialSet {
        let out_degree = self.degree + 1;
        let mut out: BTreeSet<Monomial> = BTreeSet::new();
        for w in &self.elements {
            for i in 1..=self.ctx.n() {
                out.insert(w.multiply_var(i));
            }
        }
        MonomialSet::from_sorted(
            SpreadContext::zero_spread(self.ctx.n(), out_degree),
            out_degree,
            out.into_iter().collect(),
        )
    }

    /// First failure of the strongly-stable exchange property, if any:
    /// some `u` in the set and `j < i` with `x_i | u` such that the t-spread
    /// exchange `x_j (u / x_i)` is missing from the set.
    pub fn strongly_stable_violation(&self) -> Option<ExchangeViolation> {
        for u in &self.elements {
            let mut prev = 0u32;
            for &i in u.indices() {
                if i == prev {
                    continue;
                }
                prev = i;
                for j in 1..i {
                    let exchange = u.exchange(i, j).expect("x_i divides u");
                    if self.ctx.spread_ok(exchange.indices()) && !self.contains(&exchange) {
                        return Some(ExchangeViolation {
                            monomial: u.clone(),
                            removed: i,
                            inserted: j,
                            exchange,
                        });
                    }
                }
            }
        }
        None
    }

    /// Strongly stable: closed under every admissible exchange. The empty
    /// set counts as strongly stable.
    pub fn is_strongly_stable(&self) -> bool {
        self.strongly_stable_violation().is_none()
    }

    /// Returns the lex-largest monomial of `M_{n,l,t}` missing from the set
    /// while a lex-smaller one is present, or `None` when the set is an
    /// initial lex segment.
    pub fn lex_violation(&self) -> Option<Monomial> {
        if self.is_empty() {
            return None;
        }
        let iter = match self.ctx.monomials(self.degree) {
            Ok(it) => it,
            Err(_) => return None,
        };
        for (expected, actual) in iter.zip(self.elements.iter()) {
            if expected != *actual {
                return Some(expected);
            }
        }
        None
    }

    /// Lex set: the first `|L|` monomials of `M_{n,l,t}` in descending lex.
    pub fn is_lex(&self) -> bool {
        self.lex_violation().is_none()
    }

    /// Counts of elements by maximal variable index.
    pub fn max_stats(&self) -> MaxStats {
        let mut counts = vec![0u64; self.ctx.n() as usize + 1];
        for u in &self.elements {
            counts[u.max_index().unwrap_or(0) as usize] += 1;
        }
        MaxStats { counts }
    }

    /// Parses one monomial per line; blank lines and `#` comments skipped.
    /// All monomials must share one degree.
    pub fn parse_lines(ctx: &SpreadContext, text: &str) -> Result<MonomialSet> {
        let mut elements = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            elements.push(Monomial::parse(line, ctx)?);
        }
        let degree = elements.first().map_or(0, Monomial::degree);
        MonomialSet::new(ctx.clone(), degree, elements)
    }
}

impl fmt::Display for MonomialSet {
    /// One monomial per line, descending lex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for u in &self.elements {
            writeln!(f, "{u}")?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a MonomialSet {
    type Item = &'a Monomial;
    type IntoIter = std::slice::Iter<'a, Monomial>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Witness of a failed strongly-stable check: the exchange
/// `x_inserted * (monomial / x_removed)` is t-spread but absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub monomial: Monomial,
    pub removed: u32,
    pub inserted: u32,
    pub exchange: Monomial,
}

impl fmt::Display for ExchangeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "exchange x{}*({}/x{}) = {} is t-spread but missing",
            self.inserted, self.monomial, self.removed, self.exchange
        )
    }
}

/// `m_i` counts (index 0 counts the unit monomial) and their prefix sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxStats {
    counts: Vec<u64>,
}

impl MaxStats {
    /// `m_i`: number of elements with `max(u) = i`.
    pub fn m(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    /// `m_{<=j}`: number of elements with `max(u) <= j`. Negative `j` gives 0;
    /// `j` beyond `n` gives the full size.
    pub fn m_leq(&self, j: i64) -> u64 {
        if j < 0 {
            return 0;
        }
        let hi = (j as usize).min(self.counts.len() - 1);
        self.counts[..=hi].iter().sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// The initial lex segment of `M_{n,l,t}` determined by `u`: all t-spread
/// `v >= u` in lex order, `u` included.
pub fn lex_segment(u: &Monomial, ctx: &SpreadContext) -> Result<MonomialSet> {
    if !ctx.is_t_spread(u)? {
        return Err(Error::NotTSpread(u.to_string()));
    }
    let elements: Vec<Monomial> = ctx
        .monomials(u.degree())?
        .take_while(|v| v <= u) // ascending sequence order = descending lex
        .collect();
    Ok(MonomialSet::from_sorted(ctx.clone(), u.degree(), elements))
}

/// The unique t-spread lex set of the requested size: the first `size`
/// monomials of `M_{n,l,t}` in descending lex.
pub fn lex_set_of_size(ctx: &SpreadContext, degree: usize, size: &BigUint) -> Result<MonomialSet> {
    let available = ctx.count(degree)?;
    if *size > available {
        return Err(Error::InfeasibleSize {
            size: size.clone(),
            available,
        });
    }
    let take = usize::try_from(size).map_err(|_| Error::SetTooLarge(size.clone()))?;
    let elements: Vec<Monomial> = ctx.monomials(degree)?.take(take).collect();
    Ok(MonomialSet::from_sorted(ctx.clone(), degree, elements))
}

/// Lex-minimum of the t-spread shadow of the lex segment determined by `u`,
/// together with the extension index `r`: the least `s` in `[0, l]` with
/// `n - i_{l-s} - (t_{l-1} + ... + t_{l-s}) >= t_l` (reading `i_0 = t_0 = 0`).
/// The closed form replaces the first `r` trailing indices of `u` by the
/// largest tail that still leaves room for `x_n`.
pub fn min_of_shadow(u: &Monomial, ctx: &SpreadContext) -> Result<(Monomial, usize)> {
    let l = u.degree();
    let d = ctx.d();
    if l >= d {
        return Err(Error::DegreeOutOfRange {
            degree: l,
            max: d - 1,
        });
    }
    if !ctx.is_t_spread(u)? {
        return Err(Error::NotTSpread(u.to_string()));
    }
    let n = ctx.n() as i64;
    // Degree l+1 monomials need n >= 1 + t_1 + ... + t_l; otherwise the
    // whole stratum M_{n,l+1,t} is empty and so is the shadow.
    if n < 1 + ctx.gap_sum(1, l) {
        return Err(Error::EmptyShadow {
            degree: l,
            n: ctx.n(),
        });
    }
    if l == 0 {
        // Shadow of {1} is M_{n,1,t}; its minimum is x_n.
        return Ok((Monomial::from_sorted(vec![ctx.n()]), 0));
    }
    let idx = |h: usize| -> i64 {
        if h == 0 {
            0
        } else {
            u.indices()[h - 1] as i64
        }
    };
    let t_at = |k: usize| -> i64 { ctx.gap(k) as i64 };
    let mut r = None;
    for s in 0..=l {
        let lhs = n - idx(l - s) - ctx.gap_sum(l.saturating_sub(s), l - 1);
        if lhs >= t_at(l) {
            r = Some(s);
            break;
        }
    }
    let r = r.expect("s = l always satisfies the bound once the stratum is nonempty");

    let mut indices: Vec<u32> = u.indices()[..l - r].to_vec();
    for h in 1..=(r + 1) {
        // x_{n - (t_{l-(r-h)} + ... + t_l)}
        let start = l - r + h; // l - (r - h)
        let i = n - ctx.gap_sum(start, l);
        debug_assert!(i >= 1);
        indices.push(i as u32);
    }
    let min = Monomial::from_sorted(indices);
    debug_assert!(ctx.spread_ok(min.indices()));
    Ok((min, r))
}

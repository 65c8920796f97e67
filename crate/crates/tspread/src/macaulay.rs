//! Macaulay-type binomial expansions, the t-spread operator, closed-form
//! lex-segment complements, and the classification of f-vectors.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::binom::{binomial_big, max_top_within};
use crate::context::SpreadContext;
use crate::error::{Error, Result};
use crate::ideal::{lex_ideal_from_sizes, MonomialIdeal};
use crate::monomial::Monomial;

/// The unique expansion `a = C(a_l, l) + C(a_{l-1}, l-1) + ... + C(a_p, p)`
/// with `a_l > a_{l-1} > ... > a_p >= p >= 1`. `a = 0` has the empty
/// expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialExpansion {
    degree: u32,
    /// `(a_j, j)` pairs with `j` descending from `l` down to `p`.
    terms: Vec<(BigUint, u32)>,
}

impl BinomialExpansion {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Terms `(a_j, j)` with `j` descending.
    pub fn terms(&self) -> &[(BigUint, u32)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Cutoff index `p` (the smallest binomial index present).
    pub fn lowest_index(&self) -> Option<u32> {
        self.terms.last().map(|&(_, j)| j)
    }

    /// Recomputes `sum C(a_j, j)`.
    pub fn value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(top, j)| binomial_big(top, *j))
            .sum()
    }
}

impl fmt::Display for BinomialExpansion {
    /// `C(23,3) + C(22,2) + C(21,1)`; the empty expansion prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (top, j)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "C({top},{j})")?;
        }
        Ok(())
    }
}

/// Greedy Macaulay expansion of `a` with respect to `degree >= 1`.
pub fn binomial_expansion(a: &BigUint, degree: u32) -> Result<BinomialExpansion> {
    if degree < 1 {
        return Err(Error::ExpansionDegree);
    }
    let mut terms = Vec::new();
    let mut rem = a.clone();
    let mut j = degree;
    while !rem.is_zero() {
        debug_assert!(j >= 1, "greedy expansion terminates by j = 1");
        let top = max_top_within(j, &rem).expect("rem >= 1 admits C(j, j) = 1");
        rem -= binomial_big(&top, j);
        terms.push((top, j));
        j -= 1;
    }
    debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
    debug_assert!(terms
        .last()
        .is_none_or(|(top, j)| *top >= BigUint::from(*j)));
    Ok(BinomialExpansion { degree, terms })
}

/// The complement count `|M_{n,l,t} \ L(u)|` of the lex segment determined
/// by `u`, as a binomial expansion.
///
/// The raw view keeps every formal term `C(a_j, j)`, `j = 1..l`, including
/// those with `a_j < j` that contribute zero; the canonical expansion drops
/// them so the strict-decrease invariant holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentComplement {
    /// `a_j` for `j = 1..=l` (position `j - 1`).
    raw_tops: Vec<u64>,
    expansion: BinomialExpansion,
}

impl SegmentComplement {
    /// `a_j` indexed by `j = 1..=l`.
    pub fn raw_tops(&self) -> &[u64] {
        &self.raw_tops
    }

    pub fn expansion(&self) -> &BinomialExpansion {
        &self.expansion
    }

    pub fn value(&self) -> BigUint {
        self.expansion.value()
    }
}

/// Expansion coefficients of `|M_{n,l,t} \ L(u)|`:
/// `a_j = n - i_{l-(j-1)} + j - 1 - (t_{l-(j-1)} + ... + t_{l-1})`.
pub fn complement_size(u: &Monomial, ctx: &SpreadContext) -> Result<SegmentComplement> {
    if !ctx.is_t_spread(u)? {
        return Err(Error::NotTSpread(u.to_string()));
    }
    let l = u.degree();
    let n = ctx.n() as i64;
    let mut raw_tops = Vec::with_capacity(l);
    for j in 1..=l {
        let i = u.indices()[l - j] as i64; // i_{l-(j-1)}
        let a = n - i + j as i64 - 1 - ctx.gap_sum(l - j + 1, l - 1);
        debug_assert!(a >= 0, "spread gaps keep every a_j non-negative");
        raw_tops.push(a as u64);
    }
    // Nonzero terms, j descending, form the canonical expansion.
    let terms: Vec<(BigUint, u32)> = (1..=l)
        .rev()
        .filter(|&j| raw_tops[j - 1] >= j as u64)
        .map(|j| (BigUint::from(raw_tops[j - 1]), j as u32))
        .collect();
    let expansion = BinomialExpansion {
        degree: l.max(1) as u32,
        terms,
    };
    Ok(SegmentComplement {
        raw_tops,
        expansion,
    })
}

/// The t-spread operator `a -> a^(n,l,t)`: expand `a` with respect to `l`
/// and return `sum_{j=p+1}^{l+1} C(a_{j-1} + 1 - t_l, j)`.
///
/// Requires full support (`n > t_1 + ... + t_{d-1}`), `1 <= l < d` and
/// `a <= |M_{n,l,t}|`.
pub fn t_operator(a: &BigUint, ctx: &SpreadContext, degree: usize) -> Result<BigUint> {
    if !ctx.is_full_support() {
        return Err(Error::NotFullSupport);
    }
    if degree < 1 || degree >= ctx.d() {
        return Err(Error::DegreeOutOfRange {
            degree,
            max: ctx.d() - 1,
        });
    }
    let max = ctx.count(degree)?;
    if *a > max {
        return Err(Error::OperatorOutOfRange {
            value: a.clone(),
            max,
        });
    }
    let expansion = binomial_expansion(a, degree as u32)?;
    let t_l = ctx.gap(degree) as i64;
    let mut out = BigUint::zero();
    for (top, j) in expansion.terms() {
        // C(a_j + 1 - t_l, j + 1), zero when the top drops below the index.
        let shift = 1 - t_l;
        let term = if shift >= 0 {
            binomial_big(&(top + BigUint::from(shift as u64)), j + 1)
        } else {
            let back = BigUint::from((-shift) as u64);
            if *top < back {
                BigUint::zero()
            } else {
                binomial_big(&(top - back), j + 1)
            }
        };
        out += term;
    }
    Ok(out)
}

/// The f-vector `(f_{-1}, f_0, ..., f_{d-1})` of a proper t-spread ideal:
/// entry `f_{l-1}` counts the degree-`l` t-spread monomials *outside* the
/// ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTVector {
    entries: Vec<BigUint>,
}

impl FTVector {
    /// `entries[k]` is `f_{k-1}`; a context of spread length `d` needs
    /// exactly `d + 1` entries.
    pub fn new(entries: Vec<BigUint>) -> Self {
        FTVector { entries }
    }

    pub fn from_u64(entries: &[u64]) -> Self {
        FTVector {
            entries: entries.iter().map(|&x| BigUint::from(x)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `f_l` for `l` in `[-1, d-1]`.
    pub fn get(&self, l: i64) -> &BigUint {
        &self.entries[(l + 1) as usize]
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// Parses `(1,6,11,18,0)` or `1,6,11,18,0`.
    pub fn parse(text: &str) -> Result<FTVector> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(trimmed);
        let mut entries = Vec::new();
        for (k, tok) in inner.split(',').enumerate() {
            let tok = tok.trim();
            let v: BigUint = tok.parse().map_err(|_| Error::Parse {
                pos: k,
                msg: format!("invalid f-vector entry `{tok}`"),
            })?;
            entries.push(v);
        }
        Ok(FTVector { entries })
    }
}

impl fmt::Display for FTVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// First failed growth condition of an f-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FtViolation {
    /// `f_{-1}` must equal 1.
    LeadingEntry { value: BigUint },
    /// `f_0 <= n` (the degree-0 bound: `|M_{n,1,t}| = n`).
    DegreeZero { value: BigUint, bound: BigUint },
    /// `f_{index} <= f_{index-1}^(n,index,t)` failed.
    Growth {
        index: i64,
        value: BigUint,
        bound: BigUint,
    },
}

impl fmt::Display for FtViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FtViolation::LeadingEntry { value } => {
                write!(f, "violated at \u{2113}=-1: f_-1 = {value}, expected 1")
            }
            FtViolation::DegreeZero { value, bound } => {
                write!(
                    f,
                    "violated at \u{2113}=0: {value} > {bound} (degree-0 bound)"
                )
            }
            FtViolation::Growth {
                index,
                value,
                bound,
            } => {
                write!(f, "violated at \u{2113}={index}: {value} > {bound}")
            }
        }
    }
}

/// Outcome of an f-vector check: valid when no violation was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FtCheck {
    pub violation: Option<FtViolation>,
}

impl FtCheck {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks whether `f` is the f-vector of some t-spread strongly stable ideal:
/// `f_{-1} = 1`, `f_0 <= n`, and `f_{l+1} <= f_l^(n,l+1,t)` for
/// `l = 0..d-2`. Reports the first violated index.
pub fn validate_ft_vector(f: &FTVector, ctx: &SpreadContext) -> Result<FtCheck> {
    if !ctx.is_full_support() {
        return Err(Error::NotFullSupport);
    }
    let d = ctx.d();
    if f.len() != d + 1 {
        return Err(Error::FtVectorLength {
            got: f.len(),
            expected: d + 1,
        });
    }
    if !f.get(-1).is_one() {
        return Ok(FtCheck {
            violation: Some(FtViolation::LeadingEntry {
                value: f.get(-1).clone(),
            }),
        });
    }
    let n = BigUint::from(ctx.n());
    if *f.get(0) > n {
        return Ok(FtCheck {
            violation: Some(FtViolation::DegreeZero {
                value: f.get(0).clone(),
                bound: n,
            }),
        });
    }
    for l in 0..=(d as i64 - 2) {
        // The previous check bounds f_l by |M_{n,l+1,t}|, so the operator
        // argument is always in range here.
        let bound = t_operator(f.get(l), ctx, (l + 1) as usize)?;
        if *f.get(l + 1) > bound {
            return Ok(FtCheck {
                violation: Some(FtViolation::Growth {
                    index: l + 1,
                    value: f.get(l + 1).clone(),
                    bound,
                }),
            });
        }
    }
    Ok(FtCheck { violation: None })
}

/// Builds the unique t-spread lex ideal realizing a valid f-vector.
pub fn lex_ideal_from_ft_vector(f: &FTVector, ctx: &SpreadContext) -> Result<MonomialIdeal> {
    let check = validate_ft_vector(f, ctx)?;
    if let Some(v) = check.violation {
        return Err(Error::InvalidFtVector(v));
    }
    let d = ctx.d();
    let mut sizes = Vec::with_capacity(d + 1);
    for l in 0..=d {
        let total = ctx.count(l)?;
        let f_prev = f.get(l as i64 - 1);
        debug_assert!(*f_prev <= total);
        sizes.push(total - f_prev);
    }
    Ok(lex_ideal_from_sizes(ctx, &sizes)?.ideal)
}

//! Monomials as sorted index sequences.
//!
//! A degree-`l` monomial `x_{j_1} x_{j_2} ... x_{j_l}` is stored as the
//! non-decreasing sequence `j_1 <= ... <= j_l`; the empty sequence is the
//! unit monomial 1. Gap conditions, `max(u)` and the lex order all read
//! directly off this representation.

use std::cmp::Ordering;
use std::fmt;

use crate::context::SpreadContext;
use crate::error::{Error, Result};

/// A monomial, identified with its sorted multiset of variable indices.
///
/// The derived `Ord` is the positional order on index sequences, which within
/// a fixed degree is exactly the *descending* lex order: sorting monomials
/// ascending by `Ord` lists them from lex-largest to lex-smallest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    indices: Vec<u32>,
}

impl Monomial {
    /// The unit monomial 1.
    pub fn unit() -> Self {
        Monomial {
            indices: Vec::new(),
        }
    }

    /// Builds a monomial from variable indices (sorted internally).
    /// Index 0 is rejected; upper bounds are context business.
    pub fn new(indices: impl Into<Vec<u32>>) -> Result<Self> {
        let mut indices = indices.into();
        if let Some(&bad) = indices.iter().find(|&&i| i == 0) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                n: u32::MAX,
            });
        }
        indices.sort_unstable();
        Ok(Monomial { indices })
    }

    pub(crate) fn from_sorted(indices: Vec<u32>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(indices.first().is_none_or(|&i| i >= 1));
        Monomial { indices }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn is_unit(&self) -> bool {
        self.indices.is_empty()
    }

    /// Largest variable index dividing the monomial; `None` for the unit.
    pub fn max_index(&self) -> Option<u32> {
        self.indices.last().copied()
    }

    /// The product `x_i * self`.
    pub fn multiply_var(&self, i: u32) -> Monomial {
        debug_assert!(i >= 1);
        let pos = self.indices.partition_point(|&j| j <= i);
        let mut indices = self.indices.clone();
        indices.insert(pos, i);
        Monomial { indices }
    }

    /// `self / x_i`, removing one occurrence of `i`; `None` when `x_i` does
    /// not divide `self`.
    pub fn divide_var(&self, i: u32) -> Option<Monomial> {
        let pos = self.indices.binary_search(&i).ok()?;
        let mut indices = self.indices.clone();
        indices.remove(pos);
        Some(Monomial { indices })
    }

    /// The exchange `x_to * (self / x_from)`; `None` when `x_from` is absent.
    pub fn exchange(&self, from: u32, to: u32) -> Option<Monomial> {
        Some(self.divide_var(from)?.multiply_var(to))
    }

    /// Multiset divisibility: every variable of `self` occurs in `other`
    /// with at least the same multiplicity.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.indices.len() > other.indices.len() {
            return false;
        }
        let mut it = other.indices.iter();
        'outer: for &i in &self.indices {
            for &j in it.by_ref() {
                match j.cmp(&i) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// Exponent vector over `n` variables, used for formatting.
    pub fn exponents(&self, n: u32) -> Vec<u32> {
        let mut exp = vec![0u32; n as usize];
        for &i in &self.indices {
            if i >= 1 && i <= n {
                exp[(i - 1) as usize] += 1;
            }
        }
        exp
    }

    /// Parses either the power form `x1*x4^2*x6` or the index list `1 4 4 6`;
    /// `1` alone denotes the unit monomial. Indices are validated against `ctx`.
    pub fn parse(text: &str, ctx: &SpreadContext) -> Result<Monomial> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty monomial".into(),
            });
        }
        if trimmed == "1" {
            return Ok(Monomial::unit());
        }
        let m = if trimmed.contains('x') || trimmed.contains('X') {
            parse_power_form(trimmed)?
        } else {
            parse_index_list(trimmed)?
        };
        ctx.check_monomial(&m)?;
        Ok(m)
    }
}

fn parse_power_form(text: &str) -> Result<Monomial> {
    let mut indices = Vec::new();
    let mut pos = 0usize;
    for factor in text.split('*') {
        let fpos = pos;
        pos += factor.len() + 1;
        let f = factor.trim();
        if f.is_empty() {
            return Err(Error::Parse {
                pos: fpos,
                msg: "empty factor".into(),
            });
        }
        let rest = f
            .strip_prefix('x')
            .or_else(|| f.strip_prefix('X'))
            .ok_or_else(|| Error::Parse {
                pos: fpos,
                msg: format!("expected factor like x3 or x3^2, found `{f}`"),
            })?;
        let (idx_str, exp_str) = match rest.split_once('^') {
            Some((i, e)) => (i, Some(e)),
            None => (rest, None),
        };
        let index: u32 = idx_str.parse().map_err(|_| Error::Parse {
            pos: fpos,
            msg: format!("invalid variable index `{idx_str}`"),
        })?;
        if index == 0 {
            return Err(Error::Parse {
                pos: fpos,
                msg: "variable index 0".into(),
            });
        }
        let exp: u32 = match exp_str {
            Some(e) => e.parse().map_err(|_| Error::Parse {
                pos: fpos,
                msg: format!("invalid exponent `{e}`"),
            })?,
            None => 1,
        };
        for _ in 0..exp {
            indices.push(index);
        }
    }
    Ok(Monomial::new(indices).expect("indices checked nonzero"))
}

fn parse_index_list(text: &str) -> Result<Monomial> {
    let mut indices = Vec::new();
    let mut offset = 0usize;
    for token in text.split_whitespace() {
        let tpos = text[offset..]
            .find(token)
            .map(|p| p + offset)
            .unwrap_or(offset);
        offset = tpos + token.len();
        let index: u32 = token.parse().map_err(|_| Error::Parse {
            pos: tpos,
            msg: format!("invalid index `{token}`"),
        })?;
        if index == 0 {
            return Err(Error::Parse {
                pos: tpos,
                msg: "variable index 0".into(),
            });
        }
        indices.push(index);
    }
    Ok(Monomial::new(indices).expect("indices checked nonzero"))
}

impl fmt::Display for Monomial {
    /// Power form with ascending indices, e.g. `x1*x4^2*x6`; the unit is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut run = 0usize;
        while run < self.indices.len() {
            let i = self.indices[run];
            let mut count = 0;
            while run < self.indices.len() && self.indices[run] == i {
                count += 1;
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if count == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{count}")?;
            }
        }
        Ok(())
    }
}

/// Lex comparison induced by `x_1 > x_2 > ... > x_n`: at the first differing
/// position the monomial with the *smaller* variable index is the larger one.
///
/// # Panics
/// Both monomials must have the same degree.
pub fn lex_cmp(u: &Monomial, v: &Monomial) -> Ordering {
    assert_eq!(
        u.degree(),
        v.degree(),
        "lex order compares monomials of equal degree"
    );
    u.indices.cmp(&v.indices).reverse()
}

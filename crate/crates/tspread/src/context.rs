//! The ambient data every computation is relative to: the number of
//! variables `n` and the gap vector `t = (t_1, ..., t_{d-1})`.
//!
//! A degree-`l` monomial `x_{j_1} ... x_{j_l}` with `l <= d` is t-spread when
//! `j_{i+1} - j_i >= t_i` for every consecutive pair. Monomials of degree
//! above `d` are never t-spread here (the gap vector has no entries for
//! them), so shadows die out at degree `d`.

use num_bigint::BigUint;
use num_traits::One;

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Ambient context `(n, t)` with `d = len(t) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpreadContext {
    n: u32,
    t: Vec<u32>,
}

impl SpreadContext {
    pub fn new(n: u32, t: Vec<u32>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidContext("n must be at least 1".into()));
        }
        if t.is_empty() {
            return Err(Error::InvalidContext(
                "t must have at least one entry (d >= 2)".into(),
            ));
        }
        Ok(SpreadContext { n, t })
    }

    /// Context in which every monomial of degree up to `degree` is spread:
    /// `t = (0, ..., 0)` sized to cover that degree. Classical-shadow results
    /// live in such a context.
    pub fn zero_spread(n: u32, degree: usize) -> Self {
        SpreadContext {
            n,
            t: vec![0; degree.max(1)],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }

    /// Maximal spread degree: `d = len(t) + 1`.
    pub fn d(&self) -> usize {
        self.t.len() + 1
    }

    /// `t_i` (1-based); `t_0 = 0` by convention.
    pub fn gap(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.t[i - 1]
        }
    }

    /// `t_from + ... + t_to` (1-based, empty when `from > to`).
    pub fn gap_sum(&self, from: usize, to: usize) -> i64 {
        if from > to {
            return 0;
        }
        let hi = to.min(self.t.len());
        let lo = from.max(1);
        if lo > hi {
            return 0;
        }
        self.t[lo - 1..hi].iter().map(|&x| x as i64).sum()
    }

    /// Whether `n > t_1 + ... + t_{d-1}`, the hypothesis of the spread
    /// operator and of the f-vector classification.
    pub fn is_full_support(&self) -> bool {
        (self.n as i64) > self.gap_sum(1, self.d() - 1)
    }

    /// All variable indices of `u` lie in `[1, n]`.
    pub fn check_monomial(&self, u: &Monomial) -> Result<()> {
        match u.max_index() {
            Some(i) if i > self.n => Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    /// The t-spread predicate. The unit monomial is t-spread; monomials of
    /// degree above `d` are not.
    pub fn is_t_spread(&self, u: &Monomial) -> Result<bool> {
        self.check_monomial(u)?;
        Ok(self.spread_ok(u.indices()))
    }

    pub(crate) fn spread_ok(&self, indices: &[u32]) -> bool {
        if indices.len() > self.d() {
            return false;
        }
        indices
            .windows(2)
            .enumerate()
            .all(|(i, w)| w[1] - w[0] >= self.gap(i + 1))
    }

    /// `|M_{n,l,t}| = C(n + (l-1) - (t_1 + ... + t_{l-1}), l)`.
    pub fn count(&self, degree: usize) -> Result<BigUint> {
        if degree > self.d() {
            return Err(Error::DegreeOutOfRange {
                degree,
                max: self.d(),
            });
        }
        if degree == 0 {
            return Ok(BigUint::one());
        }
        let top = self.n as i64 + degree as i64 - 1 - self.gap_sum(1, degree - 1);
        Ok(binomial(top, degree as u32))
    }

    /// Iterates `M_{n,l,t}` in descending lex order.
    pub fn monomials(&self, degree: usize) -> Result<TSpreadIter<'_>> {
        if degree > self.d() {
            return Err(Error::DegreeOutOfRange {
                degree,
                max: self.d(),
            });
        }
        Ok(TSpreadIter::new(self, degree))
    }
}

/// Iterator over the t-spread monomials of one degree, lex-descending.
///
/// Runs an odometer over index sequences: position `k` (1-based) moves in
/// `[prev + t_{k-1}, n - (t_k + ... + t_{l-1})]`, so every emitted sequence
/// is feasible and no backtracking is wasted.
pub struct TSpreadIter<'a> {
    ctx: &'a SpreadContext,
    degree: usize,
    caps: Vec<u32>,
    current: Vec<u32>,
    state: IterState,
}

enum IterState {
    Fresh,
    Running,
    Done,
}

impl<'a> TSpreadIter<'a> {
    fn new(ctx: &'a SpreadContext, degree: usize) -> Self {
        // caps[k-1] = n - (t_k + ... + t_{l-1})
        let caps = (1..=degree)
            .map(|k| {
                let tail = ctx.gap_sum(k, degree - 1);
                let cap = ctx.n as i64 - tail;
                if cap < 0 {
                    0
                } else {
                    cap as u32
                }
            })
            .collect();
        TSpreadIter {
            ctx,
            degree,
            caps,
            current: Vec::new(),
            state: IterState::Fresh,
        }
    }

    /// Minimal completion from position `k` (0-based) given `current[..k]`.
    fn fill_minimal(&mut self, k: usize) -> bool {
        for pos in k..self.degree {
            let lo = if pos == 0 {
                1
            } else {
                self.current[pos - 1] + self.ctx.gap(pos)
            };
            if lo > self.caps[pos] {
                return false;
            }
            if pos < self.current.len() {
                self.current[pos] = lo;
            } else {
                self.current.push(lo);
            }
        }
        true
    }
}

impl Iterator for TSpreadIter<'_> {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                if self.degree == 0 {
                    self.state = IterState::Done;
                    return Some(Monomial::unit());
                }
                if !self.fill_minimal(0) {
                    self.state = IterState::Done;
                    return None;
                }
                return Some(Monomial::from_sorted(self.current.clone()));
            }
            IterState::Running => {}
        }
        // Advance: bump the rightmost position below its cap.
        for pos in (0..self.degree).rev() {
            if self.current[pos] < self.caps[pos] {
                self.current[pos] += 1;
                let ok = self.fill_minimal(pos + 1);
                debug_assert!(ok, "caps guarantee tail feasibility");
                return Some(Monomial::from_sorted(self.current.clone()));
            }
        }
        self.state = IterState::Done;
        None
    }
}

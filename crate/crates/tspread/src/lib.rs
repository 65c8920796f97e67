//! Combinatorics of vector-spread (t-spread) monomial ideals.
//!
//! Fix `n` variables and a gap vector `t = (t_1, ..., t_{d-1})`. A monomial
//! `x_{j_1} ... x_{j_l}` with sorted indices and `l <= d` is *t-spread* when
//! `j_{i+1} - j_i >= t_i` for every consecutive pair; `t = 0` gives all
//! monomials, `t = 1` the squarefree ones. This crate provides:
//!
//! - enumeration and exact counting of the strata `M_{n,l,t}` ([`SpreadContext`]);
//! - spread and classical shadows, strongly-stable/lex predicates, max-index
//!   statistics and lex segments ([`MonomialSet`]);
//! - Macaulay binomial expansions, the t-spread operator generalizing the
//!   classical Macaulay and Kruskal-Katona operators, and the classification
//!   of f-vectors of strongly stable ideals ([`macaulay`]);
//! - monomial ideals with graded components, f-vectors and the f-vector
//!   preserving lexification ([`MonomialIdeal`]);
//! - graded Betti numbers of strongly stable ideals and the lex-dominance
//!   comparison ([`betti`]).
//!
//! All counts are arbitrary-precision integers; every operation is pure and
//! all types are immutable after construction.
//!
//! # Example
//!
//! ```
//! use tspread::MonomialIdeal;
//!
//! let text = "n=6 t=1,0,2\nx1*x2\nx1*x3\nx1*x4\nx2*x3\nx2*x4^2\nx3*x4^2*x6\n";
//! let ideal = MonomialIdeal::parse_text(text)?;
//! assert!(ideal.is_strongly_stable());
//! assert_eq!(ideal.ft_vector()?.to_string(), "(1,6,11,18,0)");
//!
//! // the unique lex ideal with the same f-vector
//! let lex = ideal.lexify()?;
//! assert!(lex.is_lex());
//! assert_eq!(lex.generators().len(), 9);
//!
//! // its Betti numbers dominate the original's entrywise
//! let report = tspread::dominance_check(&ideal)?;
//! assert!(report.holds);
//! # Ok::<(), tspread::Error>(())
//! ```

pub mod betti;
pub mod binom;
pub mod context;
pub mod error;
pub mod ideal;
pub mod macaulay;
pub mod monomial;
pub mod random;
pub mod set;

pub use betti::{dominance_check, graded_betti, BettiTable, DominanceReport};
pub use context::SpreadContext;
pub use error::{Error, Result};
pub use ideal::{minimal_generators, IdealViolation, LexifyTrace, MonomialIdeal};
pub use macaulay::{
    binomial_expansion, complement_size, lex_ideal_from_ft_vector, t_operator, validate_ft_vector,
    BinomialExpansion, FTVector, FtCheck, FtViolation, SegmentComplement,
};
pub use monomial::{lex_cmp, Monomial};
pub use set::{
    lex_segment, lex_set_of_size, min_of_shadow, ExchangeViolation, MaxStats, MonomialSet,
};

//! Exact decision procedure for univariate real arithmetic.
//!
//! Given a quantifier-free formula over one real variable built from
//! polynomial atoms `p > 0`, `p ≥ 0`, `p = 0`, conjunction and disjunction,
//! this crate decides `∀x φ` and `∃x φ` by computing every sign vector the
//! formula's polynomials realize over ℝ. Sign determination runs either the
//! recursive Kronecker-combine-and-reduce algorithm ([`signdet::calc_data`])
//! or the naive single matrix equation over all `2ⁿ` candidates
//! ([`signdet::naive_find_consistent_signs_at_roots`]).
//!
//! All arithmetic is exact over arbitrary-precision rationals. The crate is
//! `no_std` and needs only `alloc`.
//!
//! ```
//! use bkr_core::{decide_existential, decide_universal, Fml, Poly, Relation};
//!
//! // x² − 2 = 0 ∧ 3x > 0
//! let fml = Fml::and(
//!     Fml::Atom(Poly::from_ints(&[-2, 0, 1]), Relation::Eq),
//!     Fml::Atom(Poly::from_ints(&[0, 3]), Relation::Gt),
//! );
//! assert!(decide_existential(&fml).unwrap());
//! assert!(!decide_universal(&fml).unwrap());
//! ```

#![no_std]

extern crate alloc;

pub mod decision;
pub mod fork;
pub mod matrix;
pub mod poly;
pub mod sign;
pub mod signdet;
pub mod tarski;

/// Exact arbitrary-precision rational; the coefficient field.
pub type Rational = num_rational::BigRational;

pub use decision::{
    build_aux_poly, convert, coprime_basis, decide_existential, decide_universal, find_consistent_signs,
    fml_sem, lookup_sem, CoprimeBasis, DecisionError, Engine, Factorization, Fml, Formula, Method, RawFormula,
    Rel, Relation, SignDetermination,
};
pub use fork::{Fork, Sequential};
pub use matrix::{Mat, MatrixError, Vector};
pub use poly::{Degree, Poly, PolyError};
pub use sign::Sign;
pub use signdet::{
    calc_data, find_consistent_signs_at_roots, naive_find_consistent_signs_at_roots, IndexSubset,
    SignAssignment, SignDetError, SignDetSystem,
};
pub use tarski::{count_real_roots, tarski_query, tarski_query_subset, QueryStats, TarskiError};

//! Exact verification of the hypergeometric identities and supercongruences
//! behind the Catalan-number congruence
//! `sum_{k<=(p-1)/2} binomial(4k,2k) binomial(2k,k) / ((2k+1) 64^k)
//!   ≡ (-1)^((p-1)/2) (2^(p-1) - (2^(p-1)-1)^2) (mod p^3)`.
//!
//! Identities are checked as exact rational equalities; congruences as
//! `v_p(lhs - rhs) >= k` on exact rationals.

pub mod arith;
pub mod combinatorics;
pub mod congruence;
pub mod hyper;
pub mod polyfun;
pub mod report;
pub mod runner;

pub use arith::{Rational, Valuation};

//! Terminating hypergeometric series evaluated exactly.

pub mod identities;

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("lower parameter {param} gives a zero Pochhammer factor at k = {k}")]
    LowerParamPole { param: Rational, k: u64 },
    #[error("no upper parameter is a non-positive integer and no term budget was given")]
    NonTerminating,
    #[error("skipped: {reason}")]
    SkippedPole { reason: String },
}

/// `pFq(upper; lower; argument)` with an implicit `(1)_k` below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperSeries {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub argument: Rational,
    /// Highest index summed when no upper parameter terminates the series.
    pub term_budget: Option<u64>,
}

impl HyperSeries {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Self {
        Self {
            upper,
            lower,
            argument,
            term_budget: None,
        }
    }

    /// Unit-argument series, the only kind the identities use.
    pub fn at_one(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        Self::new(upper, lower, Rational::one())
    }

    pub fn with_budget(mut self, last_index: u64) -> Self {
        self.term_budget = Some(last_index);
        self
    }

    /// Index of the last possibly-nonzero term: the smallest `n` among upper
    /// parameters equal to `-n`, capped by the term budget.
    pub fn last_index(&self) -> Option<u64> {
        let natural = self
            .upper
            .iter()
            .filter_map(nonpositive_integer)
            .min();
        match (natural, self.term_budget) {
            (Some(n), Some(b)) => Some(n.min(b)),
            (n, b) => n.or(b),
        }
    }
}

impl fmt::Display for HyperSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "{}F{}({}; {}; {})",
            self.upper.len(),
            self.lower.len(),
            join(&self.upper),
            join(&self.lower),
            self.argument
        )
    }
}

/// `Some(n)` when `a == -n` for an integer `n >= 0`.
pub fn nonpositive_integer(a: &Rational) -> Option<u64> {
    if a.is_integer() && !a.is_positive() {
        (-a.to_integer()).to_u64()
    } else {
        None
    }
}

/// `true` when `(b)_k` vanishes for some `k <= last`, i.e. `b` is an
/// integer in `[-(last-1), 0]`.
pub fn pochhammer_hits_zero(b: &Rational, last: u64) -> bool {
    matches!(nonpositive_integer(b), Some(m) if m < last)
}

/// Exact sum of a terminating series.
pub fn eval_terminating_pfq(s: &HyperSeries) -> Result<Rational, HyperError> {
    Ok(series_terms(s)?
        .into_iter()
        .fold(Rational::zero(), |acc, t| acc + t))
}

/// Terms `t_0, ..., t_N` of a terminating series, built from the term ratio
/// `prod(a_i + k) / prod(b_j + k) * z / (k + 1)`.
pub fn series_terms(s: &HyperSeries) -> Result<Vec<Rational>, HyperError> {
    if s.argument.is_zero() {
        return Ok(vec![Rational::one()]);
    }
    let last = s.last_index().ok_or(HyperError::NonTerminating)?;
    let mut terms = Vec::with_capacity(last as usize + 1);
    let mut term = Rational::one();
    terms.push(term.clone());
    for k in 0..last {
        let shift = Rational::from_integer(k.into());
        let mut num = s.argument.clone();
        for a in &s.upper {
            num *= a + &shift;
        }
        let mut den = Rational::from_integer((k + 1).into());
        for b in &s.lower {
            let f = b + &shift;
            if f.is_zero() {
                return Err(HyperError::LowerParamPole {
                    param: b.clone(),
                    k: k + 1,
                });
            }
            den *= f;
        }
        term = term * num / den;
        terms.push(term.clone());
    }
    Ok(terms)
}

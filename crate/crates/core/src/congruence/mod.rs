//! Congruences as valuation assertions on exact rationals.
//!
//! A congruence `lhs ≡ rhs (mod p^k)` passes iff `v_p(lhs - rhs) >= k`. Both
//! sides must be p-integral; otherwise the check is reported as skipped.

mod checks;
pub mod registry;

pub use checks::{
    check_a1, check_a2, check_binomial_cong, check_harmonic_cong, check_intermediate,
    check_main_a3, check_new7, check_pochhammer_cong, check_rv, check_sun_euler,
    c4_integrality, BinomialVariant, HarmonicVariant, IntermediateVariant, PochhammerVariant,
    PrimeContext,
};
pub use registry::{congruence_registry, CongruenceSpec};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{padic_valuation, reduce_mod, PrimePower, Rational, ResidueClass, Valuation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Outcome of one congruence instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub p: u64,
    pub k: Option<u64>,
    pub modulus_exponent: u32,
    pub status: Status,
    pub lhs_residue: Option<ResidueClass>,
    pub rhs_residue: Option<ResidueClass>,
    /// `v_p(lhs - rhs)`, when both sides were integral.
    pub valuation: Option<Valuation>,
    pub note: String,
}

impl CheckResult {
    pub fn named(mut self, name: &'static str) -> Self {
        self.name = name;
        self
    }

    pub fn at_k(mut self, k: u64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn skipped(p: u64, modulus_exponent: u32, note: impl Into<String>) -> Self {
        Self {
            name: "",
            p,
            k: None,
            modulus_exponent,
            status: Status::Skipped,
            lhs_residue: None,
            rhs_residue: None,
            valuation: None,
            note: note.into(),
        }
    }

    /// Marks a failing result as failed with an extra reason, leaving passes
    /// and skips untouched.
    pub fn require(mut self, ok: bool, reason: &str) -> Self {
        if !ok && self.status != Status::Skipped {
            self.status = Status::Fail;
            if !self.note.is_empty() {
                self.note.push_str("; ");
            }
            self.note.push_str(reason);
        }
        self
    }
}

/// `lhs ≡ rhs (mod p^k)` in the valuation sense.
pub fn assert_congruent(lhs: &Rational, rhs: &Rational, p: u64, k: u32) -> CheckResult {
    let modulus = match PrimePower::new(p, k) {
        Ok(m) => m,
        Err(e) => return CheckResult::skipped(p, k, e.to_string()),
    };
    let (lr, rr) = match (reduce_mod(lhs, &modulus), reduce_mod(rhs, &modulus)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) => return CheckResult::skipped(p, k, format!("lhs: {e}")),
        (_, Err(e)) => return CheckResult::skipped(p, k, format!("rhs: {e}")),
    };
    let valuation = padic_valuation(&(lhs - rhs), p);
    let status = if valuation.at_least(k as i64) {
        Status::Pass
    } else {
        Status::Fail
    };
    CheckResult {
        name: "",
        p,
        k: None,
        modulus_exponent: k,
        status,
        lhs_residue: Some(lr),
        rhs_residue: Some(rr),
        valuation: Some(valuation),
        note: String::new(),
    }
}

/// Passes iff `v_p(q) >= 0`; residues are reported modulo `p`.
pub fn assert_integral(q: &Rational, p: u64) -> CheckResult {
    let v = padic_valuation(q, p);
    let mut r = assert_congruent(q, &Rational::from_integer(0.into()), p, 1);
    if r.status == Status::Skipped && !v.at_least(0) {
        r.status = Status::Fail;
        r.valuation = Some(v);
        r.note = format!("v_{p} = {v} < 0");
        return r;
    }
    // integrality is all that is claimed; divisibility by p is not
    r.status = Status::Pass;
    r.rhs_residue = None;
    r.valuation = Some(v);
    r.modulus_exponent = 0;
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use num_bigint::BigUint;

    #[test]
    fn examples() {
        let r = assert_congruent(&rat(1109, 1024), &int(41), 5, 3);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.lhs_residue.unwrap().value(), &BigUint::from(41u32));
        assert_eq!(assert_congruent(&int(0), &int(0), 7, 9).status, Status::Pass);
        assert_eq!(
            assert_congruent(&int(0), &int(0), 7, 9).valuation,
            Some(Valuation::Infinite)
        );
        let r = assert_congruent(&int(1), &int(2), 5, 1);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.lhs_residue.unwrap().value(), &BigUint::from(1u32));
        assert_eq!(r.rhs_residue.unwrap().value(), &BigUint::from(2u32));
    }

    #[test]
    fn non_integral_is_skipped() {
        let r = assert_congruent(&rat(1, 5), &int(0), 5, 2);
        assert_eq!(r.status, Status::Skipped);
        assert!(r.note.contains("valuation -1"), "{}", r.note);
    }

    #[test]
    fn integrality() {
        assert_eq!(assert_integral(&rat(5, 3), 5).status, Status::Pass);
        assert_eq!(assert_integral(&rat(3, 25), 5).status, Status::Fail);
        assert_eq!(assert_integral(&int(0), 5).status, Status::Pass);
    }

    #[test]
    fn monotone_in_exponent() {
        let lhs = rat(1109, 1024);
        for k in 1..=3 {
            assert_eq!(assert_congruent(&lhs, &int(-209), 5, k).status, Status::Pass);
        }
        assert_eq!(assert_congruent(&lhs, &int(-209), 5, 4).status, Status::Fail);
    }
}

//! Exact integer/rational arithmetic, p-adic valuations and reduction of
//! rationals modulo prime powers.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator, so equality is structural.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact arbitrary-precision fraction in canonical form.
pub type Rational = BigRational;

/// Builds the rational `num/den` from machine integers.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer-valued rational `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime power exponent must be at least 1")]
    ZeroExponent,
    #[error("value has {p}-adic valuation {valuation} < 0")]
    NonIntegralAtP { p: u64, valuation: i64 },
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: BigInt, modulus: BigUint },
}

/// A p-adic valuation; zero has valuation [`Valuation::Infinite`].
///
/// Ordered so that every finite valuation is below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `true` when the valuation is at least `k`.
    pub fn at_least(self, k: i64) -> bool {
        self >= Valuation::Finite(k)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n == b {
            return true;
        }
        if n.is_multiple_of(b) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The modulus `p^k` for a verified prime `p` and `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    k: u32,
    modulus: BigUint,
}

impl PrimePower {
    pub fn new(p: u64, k: u32) -> Result<Self, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        if k == 0 {
            return Err(ArithError::ZeroExponent);
        }
        Ok(Self {
            p,
            k,
            modulus: num_traits::pow(BigUint::from(p), k as usize),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    fn modulus_signed(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.modulus.clone())
    }

    /// Reduces an integer into `[0, p^k)`.
    pub fn normalize(&self, a: &BigInt) -> BigUint {
        a.mod_floor(&self.modulus_signed())
            .to_biguint()
            .expect("mod_floor by a positive modulus is non-negative")
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.k)
    }
}

/// An integer residue in `[0, p^k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueClass {
    value: BigUint,
    modulus: PrimePower,
}

impl ResidueClass {
    pub fn new(value: &BigInt, modulus: PrimePower) -> Self {
        Self {
            value: modulus.normalize(value),
            modulus,
        }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &PrimePower {
        &self.modulus
    }

    /// Residue modulo the smaller power `p^j`, `1 <= j <= k`.
    pub fn project(&self, j: u32) -> Self {
        assert!(j >= 1 && j <= self.modulus.k, "projection exponent out of range");
        let m = PrimePower {
            p: self.modulus.p,
            k: j,
            modulus: num_traits::pow(BigUint::from(self.modulus.p), j as usize),
        };
        Self {
            value: &self.value % &m.modulus,
            modulus: m,
        }
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Residues are serialized as decimal strings so large moduli survive JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueRecord {
    pub value: String,
    pub modulus: String,
}

impl From<&ResidueClass> for ResidueRecord {
    fn from(r: &ResidueClass) -> Self {
        Self {
            value: r.value.to_string(),
            modulus: r.modulus.modulus.to_string(),
        }
    }
}

fn integer_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut m = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// `v_p(q)`; zero maps to [`Valuation::Infinite`].
pub fn padic_valuation(q: &Rational, p: u64) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(integer_valuation(q.numer(), p) - integer_valuation(q.denom(), p))
}

/// `x` in `[0, p^k)` with `a·x ≡ 1 (mod p^k)`.
pub fn mod_inverse(a: &BigInt, m: &PrimePower) -> Result<BigUint, ArithError> {
    let modulus = m.modulus_signed();
    let a_red = a.mod_floor(&modulus);
    let ext = a_red.extended_gcd(&modulus);
    if !ext.gcd.is_one() {
        return Err(ArithError::NotInvertible {
            value: a.clone(),
            modulus: m.modulus.clone(),
        });
    }
    Ok(m.normalize(&ext.x))
}

/// `numerator · denominator⁻¹ mod p^k`, defined when `v_p(q) >= 0`.
pub fn reduce_mod(q: &Rational, m: &PrimePower) -> Result<ResidueClass, ArithError> {
    match padic_valuation(q, m.p) {
        Valuation::Infinite => return Ok(ResidueClass::new(&BigInt::zero(), m.clone())),
        Valuation::Finite(v) if v < 0 => {
            return Err(ArithError::NonIntegralAtP {
                p: m.p,
                valuation: v,
            })
        }
        Valuation::Finite(_) => {}
    }
    let inv = mod_inverse(q.denom(), m)?;
    let inv = BigInt::from_biguint(Sign::Plus, inv);
    Ok(ResidueClass::new(&(q.numer() * inv), m.clone()))
}

/// Legendre symbol `(a/p)` for an odd prime `p`, by Euler's criterion.
pub fn legendre_symbol(a: i64, p: u64) -> i8 {
    assert!(p % 2 == 1, "legendre_symbol needs an odd prime");
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    match pow_mod_u64(a, (p - 1) / 2, p) {
        1 => 1,
        x if x == p - 1 => -1,
        x => panic!("Euler criterion gave {x} modulo {p}; modulus is not prime"),
    }
}

/// `(-1)^e` as a rational.
pub fn sign_power(e: u64) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `2^e` as an exact integer.
pub fn pow2(e: u64) -> BigInt {
    BigInt::one() << (e as usize)
}

/// Ascending primes in `[lo, hi]` by a sieve of Eratosthenes.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let hi_us = hi.to_usize().expect("sieve bound fits in memory");
    let mut composite = vec![false; hi_us + 1];
    let mut out = Vec::new();
    for i in 2..=hi_us {
        if composite[i] {
            continue;
        }
        if i as u64 >= lo {
            out.push(i as u64);
        }
        let mut j = i.saturating_mul(i);
        while j <= hi_us {
            composite[j] = true;
            j += i;
        }
    }
    out
}

//! Pochhammer symbols, binomials, harmonic sums, Fermat quotients and Euler
//! numbers.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{pow2, Rational};

/// Rising factorial `(a)_k = a(a+1)...(a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Iterator over `(a)_0, (a)_1, (a)_2, ...`, one multiplication per step.
#[derive(Debug, Clone)]
pub struct PochhammerSeq {
    next_factor: Rational,
    current: Rational,
}

impl PochhammerSeq {
    pub fn new(a: Rational) -> Self {
        Self {
            next_factor: a,
            current: Rational::one(),
        }
    }
}

impl Iterator for PochhammerSeq {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let out = self.current.clone();
        self.current *= &self.next_factor;
        self.next_factor += Rational::one();
        Some(out)
    }
}

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `H_k^{(r)} = sum_{j=1..k} 1/j^r`.
pub fn harmonic(k: u64, r: u32) -> Rational {
    (1..=k)
        .map(|j| Rational::new(BigInt::one(), num_traits::pow(BigInt::from(j), r as usize)))
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// Prefix table `[H_0^{(r)}, H_1^{(r)}, ..., H_max^{(r)}]`.
pub fn harmonic_prefix(max: u64, r: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut acc = Rational::zero();
    out.push(acc.clone());
    for j in 1..=max {
        acc += Rational::new(BigInt::one(), num_traits::pow(BigInt::from(j), r as usize));
        out.push(acc.clone());
    }
    out
}

/// `sum_{j=1..k} 1/(2j-1)^2`.
pub fn odd_square_harmonic(k: u64) -> Rational {
    odd_square_prefix(k).pop().expect("prefix is never empty")
}

/// Prefix table of [`odd_square_harmonic`] for `0..=max`.
pub fn odd_square_prefix(max: u64) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut acc = Rational::zero();
    out.push(acc.clone());
    for j in 1..=max {
        let odd = BigInt::from(2 * j - 1);
        acc += Rational::new(BigInt::one(), &odd * &odd);
        out.push(acc.clone());
    }
    out
}

/// Fermat quotient `q_p(2) = (2^(p-1) - 1)/p` for an odd prime `p`.
///
/// Panics if the division leaves a remainder, i.e. `p` is not prime.
pub fn fermat_quotient2(p: u64) -> BigInt {
    assert!(p >= 3 && p % 2 == 1, "fermat_quotient2 needs an odd prime");
    let (q, r) = (pow2(p - 1) - BigInt::one()).div_rem(&BigInt::from(p));
    assert!(r.is_zero(), "2^(p-1) - 1 not divisible by {p}");
    q
}

/// `binomial(4k,2k) binomial(2k,k) / ((2k+1) 64^k)`.
pub fn central_catalan_summand(k: u64) -> Rational {
    let num = binomial(4 * k, 2 * k as i64) * binomial(2 * k, k as i64);
    let den = BigInt::from(2 * k + 1) * pow2(6 * k);
    Rational::new(num, den)
}

/// Memo tables shared across checks.
///
/// Euler numbers are stored for even indices; harmonic prefixes are kept per
/// order `r` and grown on demand. Every read returns exactly what a fresh
/// computation would.
#[derive(Debug, Default)]
pub struct SeqCache {
    euler_even: RwLock<Vec<BigInt>>,
    harmonic: RwLock<HashMap<u32, Vec<Rational>>>,
    odd_square: RwLock<Vec<Rational>>,
}

impl SeqCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Euler (secant) number `E_n`: `E_0 = 1`, `E_odd = 0`, and
    /// `sum_{j=0..m} binomial(2m,2j) E_{2j} = 0` for `m >= 1`.
    pub fn euler_number(&self, n: u64) -> BigInt {
        if n % 2 == 1 {
            return BigInt::zero();
        }
        let m = (n / 2) as usize;
        if let Some(e) = self.euler_even.read().unwrap().get(m) {
            return e.clone();
        }
        let mut table = self.euler_even.write().unwrap();
        if table.is_empty() {
            table.push(BigInt::one());
        }
        while table.len() <= m {
            let next = table.len() as u64;
            let s: BigInt = table
                .iter()
                .enumerate()
                .map(|(j, e)| binomial(2 * next, 2 * j as i64) * e)
                .sum();
            table.push(-s);
        }
        table[m].clone()
    }

    pub fn harmonic(&self, k: u64, r: u32) -> Rational {
        if let Some(v) = self
            .harmonic
            .read()
            .unwrap()
            .get(&r)
            .and_then(|t| t.get(k as usize))
        {
            return v.clone();
        }
        let mut tables = self.harmonic.write().unwrap();
        let table = tables.entry(r).or_insert_with(|| vec![Rational::zero()]);
        while table.len() <= k as usize {
            let j = table.len() as u64;
            let next = table.last().unwrap()
                + Rational::new(BigInt::one(), num_traits::pow(BigInt::from(j), r as usize));
            table.push(next);
        }
        table[k as usize].clone()
    }

    pub fn odd_square_harmonic(&self, k: u64) -> Rational {
        if let Some(v) = self.odd_square.read().unwrap().get(k as usize) {
            return v.clone();
        }
        let mut table = self.odd_square.write().unwrap();
        if table.is_empty() {
            table.push(Rational::zero());
        }
        while table.len() <= k as usize {
            let odd = BigInt::from(2 * table.len() as u64 - 1);
            let next = table.last().unwrap() + Rational::new(BigInt::one(), &odd * &odd);
            table.push(next);
        }
        table[k as usize].clone()
    }
}

fn global_cache() -> &'static SeqCache {
    static CACHE: OnceLock<SeqCache> = OnceLock::new();
    CACHE.get_or_init(SeqCache::new)
}

/// Euler number `E_n`, memoized process-wide.
pub fn euler_number(n: u64) -> BigInt {
    global_cache().euler_number(n)
}

/// `binomial(2k,k)/4^k`, the value of `(1/2)_k / (1)_k`.
pub fn central_binomial_ratio(k: u64) -> Rational {
    Rational::new(binomial(2 * k, k as i64), pow2(2 * k))
}

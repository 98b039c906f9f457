use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{assert_congruent, assert_integral, CheckResult};
use crate::arith::{int, legendre_symbol, pow2, rat, Rational};
use crate::combinatorics::{
    binomial, central_catalan_summand, fermat_quotient2, PochhammerSeq, SeqCache,
};

/// Per-prime quantities shared by many checks, computed on first use.
#[derive(Debug)]
pub struct PrimeContext {
    p: u64,
    cache: Arc<SeqCache>,
    catalan_half: OnceLock<Rational>,
    a1_sum: OnceLock<Rational>,
    a2_sum: OnceLock<Rational>,
    quarter_sum: OnceLock<Rational>,
    weighted_quarter_sum: OnceLock<Rational>,
}

impl PrimeContext {
    /// `p` must be an odd prime.
    pub fn new(p: u64, cache: Arc<SeqCache>) -> Self {
        assert!(p >= 3 && p % 2 == 1, "congruence checks need an odd prime");
        Self {
            p,
            cache,
            catalan_half: OnceLock::new(),
            a1_sum: OnceLock::new(),
            a2_sum: OnceLock::new(),
            quarter_sum: OnceLock::new(),
            weighted_quarter_sum: OnceLock::new(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `(p-1)/2`.
    pub fn half(&self) -> u64 {
        (self.p - 1) / 2
    }

    fn pr(&self) -> Rational {
        int(self.p as i64)
    }

    /// `2^(p-1)`.
    pub fn a(&self) -> Rational {
        Rational::from_integer(pow2(self.p - 1))
    }

    /// Fermat quotient `q_p(2)`.
    pub fn q(&self) -> Rational {
        Rational::from_integer(fermat_quotient2(self.p))
    }

    /// `(-1)^((p-1)/2)`.
    pub fn sign(&self) -> Rational {
        if self.half().is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    pub fn cache(&self) -> &SeqCache {
        &self.cache
    }

    /// `binomial(p-1, (p-1)/2)`.
    pub fn central(&self) -> Rational {
        Rational::from_integer(binomial(self.p - 1, self.half() as i64))
    }

    /// `sum_{k<=(p-1)/2} binomial(4k,2k) binomial(2k,k) / ((2k+1) 64^k)`.
    pub fn catalan_half_sum(&self) -> &Rational {
        self.catalan_half.get_or_init(|| {
            (0..=self.half())
                .map(central_catalan_summand)
                .fold(Rational::zero(), |a, b| a + b)
        })
    }

    /// `sum_{k<=(p-1)/2} binomial(2k,k) / ((2k-1)^2 4^k)`.
    pub fn a1_sum(&self) -> &Rational {
        self.a1_sum.get_or_init(|| {
            (0..=self.half())
                .map(|k| {
                    let odd = BigInt::from(2 * k as i64 - 1);
                    Rational::new(binomial(2 * k, k as i64), &odd * &odd * pow2(2 * k))
                })
                .fold(Rational::zero(), |a, b| a + b)
        })
    }

    /// `sum_{k<=(p-1)/2} binomial(2k,k)^2 / ((2k-1)^3 16^k)`.
    pub fn a2_sum(&self) -> &Rational {
        self.a2_sum.get_or_init(|| {
            (0..=self.half())
                .map(|k| {
                    let odd = BigInt::from(2 * k as i64 - 1);
                    let c = binomial(2 * k, k as i64);
                    Rational::new(&c * &c, &odd * &odd * &odd * pow2(4 * k))
                })
                .fold(Rational::zero(), |a, b| a + b)
        })
    }

    /// Terms `(1/2)_k (1/4)_k (3/4)_k / ((1)_k^2 (3/2)_k)` for `k <= (p-1)/2`.
    fn quarter_terms(&self) -> Vec<Rational> {
        let seqs = [rat(1, 2), rat(1, 4), rat(3, 4)]
            .map(PochhammerSeq::new)
            .into_iter()
            .collect::<Vec<_>>();
        let mut nums = seqs;
        let mut one = PochhammerSeq::new(int(1));
        let mut three_half = PochhammerSeq::new(rat(3, 2));
        (0..=self.half())
            .map(|_| {
                let num = nums
                    .iter_mut()
                    .map(|s| s.next().unwrap())
                    .fold(Rational::one(), |a, b| a * b);
                let o = one.next().unwrap();
                num / (&o * &o * three_half.next().unwrap())
            })
            .collect()
    }

    /// `sum_{k<=(p-1)/2} (1/2)_k (1/4)_k (3/4)_k / ((1)_k^2 (3/2)_k)`.
    pub fn quarter_sum(&self) -> &Rational {
        self.quarter_sum.get_or_init(|| {
            self.quarter_terms()
                .into_iter()
                .fold(Rational::zero(), |a, b| a + b)
        })
    }

    /// The same sum weighted by `sum_{j=1..k} 1/(2j-1)^2`.
    pub fn weighted_quarter_sum(&self) -> &Rational {
        self.weighted_quarter_sum.get_or_init(|| {
            self.quarter_terms()
                .into_iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (k, t)| {
                    acc + t * self.cache.odd_square_harmonic(k as u64)
                })
        })
    }
}

/// Main Catalan congruence, modulo `p^3`.
pub fn check_main_a3(ctx: &PrimeContext) -> CheckResult {
    let a = ctx.a();
    let a1 = &a - int(1);
    let rhs = ctx.sign() * (&a - &a1 * &a1);
    assert_congruent(ctx.catalan_half_sum(), &rhs, ctx.p, 3).named("a3")
}

/// The same sum against `(-1)^((p-1)/2) 2^(p-1)`, modulo `p^2`.
pub fn check_new7(ctx: &PrimeContext) -> CheckResult {
    assert_congruent(ctx.catalan_half_sum(), &(ctx.sign() * ctx.a()), ctx.p, 2).named("new7")
}

pub fn check_a1(ctx: &PrimeContext) -> CheckResult {
    let rhs = ctx.sign() * (ctx.a() - ctx.q());
    assert_congruent(ctx.a1_sum(), &rhs, ctx.p, 2).named("a1")
}

pub fn check_a2(ctx: &PrimeContext) -> CheckResult {
    let q = ctx.q();
    let rhs = int(2) - int(2) * &q - ctx.pr() * (&q * &q - int(4) * &q + int(3));
    assert_congruent(ctx.a2_sum(), &rhs, ctx.p, 2).named("a2")
}

/// The four binomial-product sums over `0 <= k <= p-1` against Legendre
/// symbols, modulo `p^2`.
pub fn check_rv(i: u8, ctx: &PrimeContext) -> CheckResult {
    let (name, disc, base): (&'static str, i64, u64) = match i {
        1 => ("rv1", -1, 16),
        2 => ("rv2", -3, 27),
        3 => ("rv3", -2, 64),
        4 => ("rv4", -1, 432),
        _ => panic!("sum index must be 1..=4, got {i}"),
    };
    let mut sum = Rational::zero();
    let mut power = BigInt::one();
    for k in 0..ctx.p {
        let num = match i {
            1 => {
                let c = binomial(2 * k, k as i64);
                &c * &c
            }
            2 => binomial(2 * k, k as i64) * binomial(3 * k, k as i64),
            3 => binomial(2 * k, k as i64) * binomial(4 * k, 2 * k as i64),
            _ => binomial(3 * k, k as i64) * binomial(6 * k, 3 * k as i64),
        };
        sum += Rational::new(num, power.clone());
        power *= base;
    }
    let rhs = int(legendre_symbol(disc, ctx.p) as i64);
    assert_congruent(&sum, &rhs, ctx.p, 2).named(name)
}

/// Full-period Catalan sum against `(-1)^((p-1)/2) - 3p^2 E_{p-3}`, modulo `p^3`.
pub fn check_sun_euler(ctx: &PrimeContext) -> CheckResult {
    let lhs = (0..ctx.p)
        .map(central_catalan_summand)
        .fold(Rational::zero(), |a, b| a + b);
    let e = Rational::from_integer(ctx.cache.euler_number(ctx.p - 3));
    let rhs = ctx.sign() - int(3) * ctx.pr() * ctx.pr() * e;
    assert_congruent(&lhs, &rhs, ctx.p, 3).named("sun_euler")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochhammerVariant {
    /// `((-1-p)/2)_k ((-1+p)/2)_k ≡ (-1/2)_k^2 (mod p^2)`.
    B4,
    /// `((1+p)/2)_k ((1-p)/2)_k ≡ (1/2)_k^2 (1 - p^2 sum 1/(2j-1)^2) (mod p^4)`.
    C3,
    /// `((1+p)/2)_k ((1-p)/2)_k ≡ (1/2)_k^2 (mod p^2)`.
    C5,
}

/// Runs the variant for every `0 <= k <= (p-1)/2`.
pub fn check_pochhammer_cong(variant: PochhammerVariant, ctx: &PrimeContext) -> Vec<CheckResult> {
    let p = ctx.pr();
    let (name, shift, exponent) = match variant {
        PochhammerVariant::B4 => ("b4", rat(-1, 2), 2),
        PochhammerVariant::C3 => ("c3", rat(1, 2), 4),
        PochhammerVariant::C5 => ("c5", rat(1, 2), 2),
    };
    let half_p = &p / int(2);
    let mut plus = PochhammerSeq::new(&shift + &half_p);
    let mut minus = PochhammerSeq::new(&shift - &half_p);
    let mut base = PochhammerSeq::new(shift);
    (0..=ctx.half())
        .map(|k| {
            let lhs = plus.next().unwrap() * minus.next().unwrap();
            let b = base.next().unwrap();
            let mut rhs = &b * &b;
            if variant == PochhammerVariant::C3 {
                rhs *= int(1) - &p * &p * ctx.cache.odd_square_harmonic(k);
            }
            assert_congruent(&lhs, &rhs, ctx.p, exponent).named(name).at_k(k)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomialVariant {
    /// `binomial(p-1,k)` expanded to second order in `p`, for `0 <= k <= p-1`.
    New1,
    /// `binomial(p-1,(p-1)/2) ≡ (-1)^((p-1)/2)(1 + 2p q + p^2 q^2) (mod p^3)`.
    C8,
}

pub fn check_binomial_cong(variant: BinomialVariant, ctx: &PrimeContext) -> Vec<CheckResult> {
    let p = ctx.pr();
    match variant {
        BinomialVariant::New1 => (0..ctx.p)
            .map(|k| {
                let lhs = Rational::from_integer(binomial(ctx.p - 1, k as i64));
                let h1 = ctx.cache.harmonic(k, 1);
                let h2 = ctx.cache.harmonic(k, 2);
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                let rhs = sign * (int(1) - &p * &h1 + &p * &p / int(2) * (&h1 * &h1 - h2));
                assert_congruent(&lhs, &rhs, ctx.p, 3).named("new1").at_k(k)
            })
            .collect(),
        BinomialVariant::C8 => {
            let q = ctx.q();
            let rhs = ctx.sign() * (int(1) + int(2) * &p * &q + &p * &p * &q * &q);
            vec![assert_congruent(&ctx.central(), &rhs, ctx.p, 3).named("c8")]
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonicVariant {
    /// `H_{(p-1)/2} ≡ -2q + p q^2 (mod p^2)`.
    B10,
    /// `H_{(p-1)/2}^{(2)} ≡ 0 (mod p)`.
    B11,
    /// `sum_{k<=(p-1)/2} 1/(2k-1)^2 ≡ 0 (mod p)`, plus the exact split
    /// `H_{p-1}^{(2)} - H_{(p-1)/2}^{(2)}/4`.
    C9,
}

pub fn check_harmonic_cong(variant: HarmonicVariant, ctx: &PrimeContext) -> CheckResult {
    let m = ctx.half();
    match variant {
        HarmonicVariant::B10 => {
            let q = ctx.q();
            let rhs = int(-2) * &q + ctx.pr() * &q * &q;
            assert_congruent(&ctx.cache.harmonic(m, 1), &rhs, ctx.p, 2).named("b10")
        }
        HarmonicVariant::B11 => {
            assert_congruent(&ctx.cache.harmonic(m, 2), &Rational::zero(), ctx.p, 1).named("b11")
        }
        HarmonicVariant::C9 => {
            let odd = ctx.cache.odd_square_harmonic(m);
            let split = ctx.cache.harmonic(ctx.p - 1, 2) - ctx.cache.harmonic(m, 2) / int(4);
            assert_congruent(&odd, &Rational::zero(), ctx.p, 1)
                .named("c9")
                .require(odd == split, "odd-square sum differs from H_{p-1}^(2) - H_{(p-1)/2}^(2)/4")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntermediateVariant {
    B5,
    /// Cubed sum against `(1/p)(p^2 - 1 + (-1)^((p+1)/2) binomial(p-1,(p+1)/2))`.
    B9a,
    /// Cubed sum against the `H_{(p+1)/2}` form.
    B9b,
    /// Cubed sum against the `H_{(p-1)/2}` form.
    B9,
    B12,
    C4,
    C6,
    C7,
    C10,
    /// The rational-in-`a` form preceding the final reduction.
    CFinal,
}

/// `sum_{k<=(p-1)/2} (-1/2)_k^3 / ((1)_k^2 (1/2)_k)`.
fn cubed_sum(ctx: &PrimeContext) -> Rational {
    let mut neg_half = PochhammerSeq::new(rat(-1, 2));
    let mut half = PochhammerSeq::new(rat(1, 2));
    let mut one = PochhammerSeq::new(int(1));
    (0..=ctx.half())
        .map(|_| {
            let n = neg_half.next().unwrap();
            let o = one.next().unwrap();
            &n * &n * &n / (&o * &o * half.next().unwrap())
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// `sum_{k<=(p-1)/2} (-1/2)_k^2 / ((1)_k (1/2)_k)`.
fn squared_sum(ctx: &PrimeContext) -> Rational {
    let mut neg_half = PochhammerSeq::new(rat(-1, 2));
    let mut half = PochhammerSeq::new(rat(1, 2));
    let mut one = PochhammerSeq::new(int(1));
    (0..=ctx.half())
        .map(|_| {
            let n = neg_half.next().unwrap();
            &n * &n / (one.next().unwrap() * half.next().unwrap())
        })
        .fold(Rational::zero(), |a, b| a + b)
}

pub fn check_intermediate(variant: IntermediateVariant, ctx: &PrimeContext) -> CheckResult {
    use IntermediateVariant::*;
    let p = ctx.pr();
    let m = ctx.half();
    let q = ctx.q();
    let a = ctx.a();
    let sign = ctx.sign();
    let h = |k: u64, r: u32| ctx.cache.harmonic(k, r);
    match variant {
        B5 => {
            let rhs = &sign * (&a - &q);
            assert_congruent(&squared_sum(ctx), &rhs, ctx.p, 2).named("b5")
        }
        B9a => {
            let sign_up = if (m + 1).is_multiple_of(2) { int(1) } else { int(-1) };
            let c = Rational::from_integer(binomial(ctx.p - 1, (m + 1) as i64));
            let rhs = (&p * &p - int(1) + sign_up * c) / &p;
            assert_congruent(&cubed_sum(ctx), &rhs, ctx.p, 2).named("b9a")
        }
        B9b => {
            let (h1, h2) = (h(m + 1, 1), h(m + 1, 2));
            let rhs = &p / int(2) * (&h1 * &h1 - h2 + int(2)) - &h1;
            assert_congruent(&cubed_sum(ctx), &rhs, ctx.p, 2).named("b9b")
        }
        B9 => {
            let (h1, h2) = (h(m, 1), h(m, 2));
            let rhs = &p / int(2) * (&h1 * &h1 + int(4) * &h1 - h2 + int(6)) - &h1 - int(2);
            assert_congruent(&cubed_sum(ctx), &rhs, ctx.p, 2).named("b9")
        }
        B12 => {
            let rhs = int(2) * &q - int(2) + &p * (&q * &q - int(4) * &q + int(3));
            assert_congruent(&cubed_sum(ctx), &rhs, ctx.p, 2).named("b12")
        }
        C4 => {
            let rhs = ctx.central() / &a + &p * &p * ctx.weighted_quarter_sum();
            assert_congruent(ctx.quarter_sum(), &rhs, ctx.p, 4).named("c4")
        }
        C6 => {
            let c = ctx.central();
            let odd = ctx.cache.odd_square_harmonic(m);
            let rhs = -(&c / &a) * (int(3) + odd) + int(2) / &p * ctx.a1_sum()
                - &a / (&p * &c) * ctx.a2_sum();
            assert_congruent(ctx.weighted_quarter_sum(), &rhs, ctx.p, 2).named("c6")
        }
        C7 => {
            let c = ctx.central();
            let odd = ctx.cache.odd_square_harmonic(m);
            let rhs = &c / &a - &p * &p / &a * &c * (int(3) + odd) + int(2) * &p * ctx.a1_sum()
                - &a * &p / &c * ctx.a2_sum();
            assert_congruent(ctx.quarter_sum(), &rhs, ctx.p, 4).named("c7")
        }
        C10 => {
            let a1 = &a - int(1);
            let rhs = &sign * (&a - &a1 * &a1);
            assert_congruent(ctx.quarter_sum(), &rhs, ctx.p, 3).named("c10")
        }
        CFinal => {
            let rhs = &sign * c_final_closed_form(&a, &p);
            assert_congruent(ctx.quarter_sum(), &rhs, ctx.p, 3).named("c_final")
        }
    }
}

/// `(a^3 - 2a^2 + 4a - 2)/(2a-1) + 3(a-1)^2 p^2 / (a(2a-1))`.
pub(crate) fn c_final_closed_form(a: &Rational, p: &Rational) -> Rational {
    let a2 = a * a;
    let two_a1 = int(2) * a - int(1);
    let am1 = a - int(1);
    (&a2 * a - int(2) * &a2 + int(4) * a - int(2)) / &two_a1
        + int(3) * &am1 * &am1 * p * p / (a * &two_a1)
}

/// `v_p((1/4)_k (3/4)_k / (3/2)_k) >= 0` for every `0 <= k <= (p-1)/2`.
pub fn c4_integrality(ctx: &PrimeContext) -> Vec<CheckResult> {
    let mut quarter = PochhammerSeq::new(rat(1, 4));
    let mut three_quarter = PochhammerSeq::new(rat(3, 4));
    let mut three_half = PochhammerSeq::new(rat(3, 2));
    (0..=ctx.half())
        .map(|k| {
            let v = quarter.next().unwrap() * three_quarter.next().unwrap()
                / three_half.next().unwrap();
            assert_integral(&v, ctx.p).named("c4_int").at_k(k)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::Status;
    use num_bigint::BigUint;

    fn ctx(p: u64) -> PrimeContext {
        PrimeContext::new(p, Arc::new(SeqCache::new()))
    }

    fn value(r: &CheckResult) -> BigUint {
        r.lhs_residue.as_ref().unwrap().value().clone()
    }

    #[test]
    fn main_examples() {
        let r = check_main_a3(&ctx(5));
        assert_eq!(r.status, Status::Pass);
        assert_eq!(value(&r), BigUint::from(41u32));
        assert_eq!(ctx(5).catalan_half_sum(), &rat(1109, 1024));
        for p in [7, 13] {
            assert_eq!(check_main_a3(&ctx(p)).status, Status::Pass);
        }
    }

    #[test]
    fn new7_examples() {
        let r = check_new7(&ctx(5));
        assert_eq!(r.status, Status::Pass);
        assert_eq!(value(&r), BigUint::from(16u32));
        for p in [7, 11] {
            assert_eq!(check_new7(&ctx(p)).status, Status::Pass);
        }
    }

    #[test]
    fn theorem_one_examples() {
        let c = ctx(7);
        assert_eq!(c.a1_sum(), &rat(373, 240));
        let r = check_a1(&c);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(value(&r), BigUint::from(43u32));
        assert_eq!(r.rhs_residue.as_ref().unwrap().value(), &BigUint::from(43u32));
        assert_eq!(check_a1(&ctx(5)).status, Status::Pass);
        assert_eq!(check_a2(&ctx(5)).status, Status::Pass);
    }

    #[test]
    fn rv_examples() {
        let r = check_rv(1, &ctx(5));
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.rhs_residue.unwrap().value(), &BigUint::from(1u32));
        assert_eq!(check_rv(2, &ctx(7)).status, Status::Pass);
        assert_eq!(check_rv(4, &ctx(5)).status, Status::Pass);
    }

    #[test]
    fn sun_euler_examples() {
        let r = check_sun_euler(&ctx(5));
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.rhs_residue.unwrap().value(), &BigUint::from(76u32));
        for p in [7, 11] {
            assert_eq!(check_sun_euler(&ctx(p)).status, Status::Pass);
        }
    }

    #[test]
    fn pochhammer_examples() {
        let b4 = check_pochhammer_cong(PochhammerVariant::B4, &ctx(5));
        assert_eq!(b4.len(), 3);
        assert_eq!(value(&b4[0]), BigUint::from(1u32));
        assert!(b4.iter().all(|r| r.status == Status::Pass));
        let c3 = check_pochhammer_cong(PochhammerVariant::C3, &ctx(7));
        assert_eq!(c3[3].k, Some(3));
        assert_eq!(c3[3].status, Status::Pass);
        assert_eq!(c3[3].modulus_exponent, 4);
    }

    #[test]
    fn binomial_examples() {
        let new1 = check_binomial_cong(BinomialVariant::New1, &ctx(5));
        assert_eq!(value(&new1[0]), BigUint::from(1u32));
        let new1 = check_binomial_cong(BinomialVariant::New1, &ctx(7));
        assert_eq!(value(&new1[3]), BigUint::from(20u32));
        assert!(new1.iter().all(|r| r.status == Status::Pass));
        let c8 = check_binomial_cong(BinomialVariant::C8, &ctx(5));
        assert_eq!(c8[0].status, Status::Pass);
        // 256 - 6 = 250 = 2·5^3
        assert_eq!(c8[0].valuation, Some(crate::arith::Valuation::Finite(3)));
    }

    #[test]
    fn harmonic_examples() {
        let r = check_harmonic_cong(HarmonicVariant::B11, &ctx(5));
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.valuation, Some(crate::arith::Valuation::Finite(1)));
        let r = check_harmonic_cong(HarmonicVariant::B11, &ctx(7));
        assert_eq!(r.valuation, Some(crate::arith::Valuation::Finite(2)));
        let r = check_harmonic_cong(HarmonicVariant::B10, &ctx(5));
        // 3/2 - 39 = -75/2
        assert_eq!(r.valuation, Some(crate::arith::Valuation::Finite(2)));
        assert_eq!(check_harmonic_cong(HarmonicVariant::C9, &ctx(11)).status, Status::Pass);
    }

    #[test]
    fn intermediate_examples() {
        use IntermediateVariant::*;
        assert_eq!(check_intermediate(B12, &ctx(5)).status, Status::Pass);
        let c10 = check_intermediate(C10, &ctx(5));
        assert_eq!(c10.status, Status::Pass);
        assert_eq!(value(&c10), BigUint::from(41u32));
        assert_eq!(check_intermediate(CFinal, &ctx(7)).status, Status::Pass);
        for v in [B5, B9a, B9b, B9, C4, C6, C7] {
            assert_eq!(check_intermediate(v, &ctx(11)).status, Status::Pass, "{v:?}");
        }
    }

    #[test]
    fn quarter_sum_matches_catalan_sum() {
        for p in [5, 7, 11, 13, 17] {
            let c = ctx(p);
            assert_eq!(c.quarter_sum(), c.catalan_half_sum());
        }
    }

    #[test]
    fn c_final_two_forms_agree() {
        // (a^3-2a^2+4a-2)/(2a-1) = a - (a-1)^2 + 3(a-1)^3/(2a-1)
        for a in [2i64, 5, 16, 64, 1024, -7] {
            let a = int(a);
            let am1 = &a - int(1);
            let two_a1 = int(2) * &a - int(1);
            let lhs = c_final_closed_form(&a, &int(0));
            let rhs = &a - &am1 * &am1 + int(3) * &am1 * &am1 * &am1 / two_a1;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn c4_side_condition() {
        for p in [5, 7, 11, 13] {
            assert!(c4_integrality(&ctx(p)).iter().all(|r| r.status == Status::Pass));
        }
    }
}

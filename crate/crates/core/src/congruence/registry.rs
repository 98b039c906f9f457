//! The named congruence checks, in listing order.

use super::checks::*;
use super::CheckResult;

/// One registered congruence family.
#[derive(Debug, Clone, Copy)]
pub struct CongruenceSpec {
    pub name: &'static str,
    pub tag: &'static str,
    pub modulus_exponent: u32,
    pub domain: &'static str,
    /// One result per prime, or one per `k` for swept families.
    pub run: fn(&PrimeContext) -> Vec<CheckResult>,
}

macro_rules! single {
    ($f:expr) => {
        |ctx: &PrimeContext| vec![$f(ctx)]
    };
}

const PRIMES: &str = "primes p ≥ 5";
const HALF_K: &str = "primes p ≥ 5, 0 ≤ k ≤ (p-1)/2";

pub fn congruence_registry() -> &'static [CongruenceSpec] {
    use IntermediateVariant::*;
    static REGISTRY: &[CongruenceSpec] = &[
        CongruenceSpec { name: "a3", tag: "Eq. (a-3)", modulus_exponent: 3, domain: PRIMES, run: single!(check_main_a3) },
        CongruenceSpec { name: "new7", tag: "Eq. (new-7)", modulus_exponent: 2, domain: PRIMES, run: single!(check_new7) },
        CongruenceSpec { name: "a1", tag: "Eq. (a-1)", modulus_exponent: 2, domain: PRIMES, run: single!(check_a1) },
        CongruenceSpec { name: "a2", tag: "Eq. (a-2)", modulus_exponent: 2, domain: PRIMES, run: single!(check_a2) },
        CongruenceSpec { name: "rv1", tag: "16^k sum vs (-1/p)", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_rv(1, c)] },
        CongruenceSpec { name: "rv2", tag: "27^k sum vs (-3/p)", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_rv(2, c)] },
        CongruenceSpec { name: "rv3", tag: "64^k sum vs (-2/p)", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_rv(3, c)] },
        CongruenceSpec { name: "rv4", tag: "432^k sum vs (-1/p)", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_rv(4, c)] },
        CongruenceSpec { name: "sun_euler", tag: "Euler-number form", modulus_exponent: 3, domain: PRIMES, run: single!(check_sun_euler) },
        CongruenceSpec { name: "b4", tag: "Eq. (b-4)", modulus_exponent: 2, domain: HALF_K, run: |c| check_pochhammer_cong(PochhammerVariant::B4, c) },
        CongruenceSpec { name: "c3", tag: "Eq. (c-3)", modulus_exponent: 4, domain: HALF_K, run: |c| check_pochhammer_cong(PochhammerVariant::C3, c) },
        CongruenceSpec { name: "c5", tag: "Eq. (c-5)", modulus_exponent: 2, domain: HALF_K, run: |c| check_pochhammer_cong(PochhammerVariant::C5, c) },
        CongruenceSpec { name: "new1", tag: "Eq. (new-1)", modulus_exponent: 3, domain: "primes p ≥ 5, 0 ≤ k ≤ p-1", run: |c| check_binomial_cong(BinomialVariant::New1, c) },
        CongruenceSpec { name: "c8", tag: "Eq. (c-8)", modulus_exponent: 3, domain: PRIMES, run: |c| check_binomial_cong(BinomialVariant::C8, c) },
        CongruenceSpec { name: "b10", tag: "Eq. (b-10)", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_harmonic_cong(HarmonicVariant::B10, c)] },
        CongruenceSpec { name: "b11", tag: "Eq. (b-11)", modulus_exponent: 1, domain: PRIMES, run: |c| vec![check_harmonic_cong(HarmonicVariant::B11, c)] },
        CongruenceSpec { name: "c9", tag: "Eq. (c-9)", modulus_exponent: 1, domain: PRIMES, run: |c| vec![check_harmonic_cong(HarmonicVariant::C9, c)] },
        CongruenceSpec { name: "b5", tag: "Eq. (b-5)", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_intermediate(B5, c)] },
        CongruenceSpec { name: "b9a", tag: "display before (new-1)", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_intermediate(B9a, c)] },
        CongruenceSpec { name: "b9b", tag: "Eq. (b-9), first line", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_intermediate(B9b, c)] },
        CongruenceSpec { name: "b9", tag: "Eq. (b-9)", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_intermediate(B9, c)] },
        CongruenceSpec { name: "b12", tag: "Eq. (b-12)", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_intermediate(B12, c)] },
        CongruenceSpec { name: "c4", tag: "Eq. (c-4)", modulus_exponent: 4, domain: PRIMES, run: |c| vec![check_intermediate(C4, c)] },
        CongruenceSpec { name: "c4_int", tag: "Eq. (c-4) side condition", modulus_exponent: 0, domain: HALF_K, run: c4_integrality },
        CongruenceSpec { name: "c6", tag: "Eq. (c-6)", modulus_exponent: 2, domain: PRIMES, run: |c| vec![check_intermediate(C6, c)] },
        CongruenceSpec { name: "c7", tag: "Eq. (c-7)", modulus_exponent: 4, domain: PRIMES, run: |c| vec![check_intermediate(C7, c)] },
        CongruenceSpec { name: "c_final", tag: "display before (c-10)", modulus_exponent: 3, domain: PRIMES, run: |c| vec![check_intermediate(CFinal, c)] },
        CongruenceSpec { name: "c10", tag: "Eq. (c-10)", modulus_exponent: 3, domain: PRIMES, run: |c| vec![check_intermediate(C10, c)] },
    ];
    REGISTRY
}

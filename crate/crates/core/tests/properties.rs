use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use supercong_core::arith::{
    legendre_symbol, padic_valuation, reduce_mod, PrimePower, Rational, Valuation,
};
use supercong_core::congruence::{assert_congruent, Status};

const PRIMES: [u64; 8] = [3, 5, 7, 11, 13, 17, 31, 199];

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(PRIMES.to_vec())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-100_000i64..100_000, 1i64..5_000)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| *q != Rational::from_integer(0.into()))
}

/// A rational with a denominator prime to `p`, scaled by `p^shift`.
fn integral_at(p: u64) -> impl Strategy<Value = Rational> {
    (-100_000i64..100_000, 1i64..5_000, 0u32..4).prop_map(move |(n, d, shift)| {
        let d = if (d as u64).is_multiple_of(p) { d + 1 } else { d };
        let scale = num_traits::pow(BigInt::from(p), shift as usize);
        Rational::new(BigInt::from(n) * scale, BigInt::from(d))
    })
}

fn add(a: &BigUint, b: &BigUint, m: &PrimePower) -> BigUint {
    (a + b) % m.modulus()
}

proptest! {
    #[test]
    fn valuation_is_multiplicative(p in prime(), a in nonzero_rational(), b in nonzero_rational()) {
        let (va, vb) = (padic_valuation(&a, p), padic_valuation(&b, p));
        let vab = padic_valuation(&(&a * &b), p);
        prop_assert_eq!(vab, Valuation::Finite(va.finite().unwrap() + vb.finite().unwrap()));
    }

    #[test]
    fn valuation_of_sum_is_at_least_the_minimum(p in prime(), a in nonzero_rational(), b in nonzero_rational()) {
        let lo = padic_valuation(&a, p).min(padic_valuation(&b, p));
        prop_assert!(padic_valuation(&(&a + &b), p) >= lo);
    }

    #[test]
    fn reduction_is_a_ring_map(
        (p, a, b) in prime().prop_flat_map(|p| (Just(p), integral_at(p), integral_at(p))),
        k in 1u32..5,
    ) {
        let m = PrimePower::new(p, k).unwrap();
        let (ra, rb) = (reduce_mod(&a, &m).unwrap(), reduce_mod(&b, &m).unwrap());
        let sum = reduce_mod(&(&a + &b), &m).unwrap();
        let prod = reduce_mod(&(&a * &b), &m).unwrap();
        prop_assert_eq!(sum.value(), &add(ra.value(), rb.value(), &m));
        prop_assert_eq!(prod.value(), &((ra.value() * rb.value()) % m.modulus()));
    }

    #[test]
    fn projection_commutes_with_reduction(
        (p, a) in prime().prop_flat_map(|p| (Just(p), integral_at(p))),
        k in 2u32..6,
        j in 1u32..6,
    ) {
        let j = j.min(k);
        let high = reduce_mod(&a, &PrimePower::new(p, k).unwrap()).unwrap();
        let low = reduce_mod(&a, &PrimePower::new(p, j).unwrap()).unwrap();
        prop_assert_eq!(high.project(j), low);
    }

    #[test]
    fn legendre_is_multiplicative(p in prime(), a in -500i64..500, b in -500i64..500) {
        prop_assert_eq!(
            legendre_symbol(a * b, p),
            legendre_symbol(a, p) * legendre_symbol(b, p)
        );
    }

    #[test]
    fn congruence_hierarchy(
        (p, a, b) in prime().prop_flat_map(|p| (Just(p), integral_at(p), integral_at(p))),
        k in 1u32..6,
    ) {
        let r = assert_congruent(&a, &b, p, k);
        prop_assert_ne!(r.status, Status::Skipped);
        if r.status == Status::Pass {
            for j in 1..k {
                prop_assert_eq!(assert_congruent(&a, &b, p, j).status, Status::Pass);
            }
        }
        let pass = padic_valuation(&(&a - &b), p).at_least(k as i64);
        prop_assert_eq!(r.status == Status::Pass, pass);
    }

    #[test]
    fn differences_divisible_by_p_power_pass(
        (p, a, c) in prime().prop_flat_map(|p| (Just(p), integral_at(p), integral_at(p))),
        k in 1u32..5,
    ) {
        let b = &a + c * Rational::from_integer(num_traits::pow(BigInt::from(p), k as usize));
        prop_assert_eq!(assert_congruent(&a, &b, p, k).status, Status::Pass);
    }
}

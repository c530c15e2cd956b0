//! Randomized structural properties on the exact-arithmetic kernel.

use std::collections::HashSet;

use proptest::prelude::*;

use oddparts::genfun::pochhammer_neg_ints;
use oddparts::partitions::enumerate_odd_partitions;
use oddparts::poly::Poly;
use oddparts::rational::RoundMode;
use oddparts::series::TruncatedSeries;
use oddparts::ExactRational;

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-200i64..=200, 1i64..=60).prop_map(|(num, den)| ExactRational::new(num, den))
}

fn small_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(small_rational(), order + 1).prop_map(TruncatedSeries::new)
}

/// Interpret a fixed-point decimal string ("-1.25") as an exact rational.
fn decimal_to_rational(text: &str) -> ExactRational {
    let (sign, digits) = match text.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, text),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let scale = 10i64.pow(frac_part.len() as u32);
    let units: i64 = int_part.parse().unwrap();
    let frac: i64 = if frac_part.is_empty() {
        0
    } else {
        frac_part.parse().unwrap()
    };
    ExactRational::new(sign * (units * scale + frac), scale)
}

proptest! {
    #[test]
    fn series_mul_commutes(a in small_series(12), b in small_series(12)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn series_mul_associates(
        a in small_series(9),
        b in small_series(9),
        c in small_series(9),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn series_mul_distributes_over_add(
        a in small_series(9),
        b in small_series(9),
        c in small_series(9),
    ) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn rational_display_round_trips(x in small_rational()) {
        let text = x.to_string();
        let back: ExactRational = text.parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn decimal_rendering_brackets_the_value(x in small_rational(), digits in 1u32..=12) {
        let down = decimal_to_rational(&x.to_decimal(digits, RoundMode::Floor));
        let up = decimal_to_rational(&x.to_decimal(digits, RoundMode::Ceil));
        prop_assert!(down <= x);
        prop_assert!(x <= up);
        // The bracket is tight: one ulp at the requested precision.
        let ulp = ExactRational::new(1, 10i64.pow(digits));
        prop_assert!(&up - &down <= ulp);
    }

    #[test]
    fn poly_mul_matches_eval(a in small_series(6), b in small_series(6), x in small_rational()) {
        let pa = Poly::new(a.coeffs().to_vec());
        let pb = Poly::new(b.coeffs().to_vec());
        let product = &pa * &pb;
        prop_assert_eq!(product.eval(&x), &pa.eval(&x) * &pb.eval(&x));
    }

    #[test]
    fn enumeration_is_exhaustive_and_duplicate_free(n in 1u64..=40) {
        let q = pochhammer_neg_ints(n as usize)[n as usize].clone();
        let mut seen = HashSet::new();
        let mut count = 0u64;
        for partition in enumerate_odd_partitions(n) {
            prop_assert_eq!(partition.weight(), n);
            prop_assert!(partition
                .multiplicities()
                .iter()
                .enumerate()
                .all(|(i, &t)| t == 0 || (2 * i + 1) as u64 * t <= n));
            prop_assert!(seen.insert(partition.multiplicities().to_vec()));
            count += 1;
        }
        prop_assert_eq!(num::BigInt::from(count), q);
    }

    #[test]
    fn reciprocal_inverts(mut coeffs in proptest::collection::vec(small_rational(), 10)) {
        prop_assume!(!coeffs[0].is_zero());
        let series = TruncatedSeries::new(std::mem::take(&mut coeffs));
        let inverse = series.reciprocal().unwrap();
        let product = series.mul(&inverse);
        prop_assert_eq!(product.coeff(0), &ExactRational::one());
        for n in 1..=product.order() {
            prop_assert!(product.coeff(n).is_zero());
        }
    }
}

//! The specific generating functions the library is built around:
//! q-Pochhammer truncations, the Lambert series for odd-divisor counts,
//! and the closed-form rational generating functions for Q_{p^r}.

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::partitions::is_prime_power;
use crate::poly::{Poly, RationalFunction};
use crate::rational::ExactRational;
use crate::series::TruncatedSeries;

/// Integer coefficients of prod_{j=1}^{N} (1 + x^j) through x^N. The
/// coefficient of x^n is q(n), the number of partitions of n into
/// distinct parts (equivalently, into odd parts).
pub fn pochhammer_neg_ints(order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for j in 1..=order {
        for i in (j..=order).rev() {
            let add = c[i - j].clone();
            c[i] += add;
        }
    }
    c
}

/// (-x; x)_inf truncated at `order`.
pub fn pochhammer_neg(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_int_coeffs(pochhammer_neg_ints(order))
}

/// (x; x^2)_inf = prod over odd m of (1 - x^m), truncated at `order`.
pub fn odd_pochhammer(order: usize) -> TruncatedSeries {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    let mut m = 1;
    while m <= order {
        for i in (m..=order).rev() {
            let sub = c[i - m].clone();
            c[i] -= sub;
        }
        m += 2;
    }
    TruncatedSeries::from_int_coeffs(c)
}

/// sum_{m=1}^{N} x^m/(1 - x^{2m}) truncated at order N; the coefficient
/// of x^n is the number of odd divisors of n for every n <= N.
pub fn lambert_odd_divisors(order: usize) -> TruncatedSeries {
    let mut c = vec![BigInt::zero(); order + 1];
    for m in 1..=order {
        let mut e = m;
        while e <= order {
            c[e] += 1;
            e += 2 * m;
        }
    }
    TruncatedSeries::from_int_coeffs(c)
}

/// 1 - x^m.
fn one_minus_xm(m: usize) -> Poly {
    let mut coeffs = vec![ExactRational::zero(); m + 1];
    coeffs[0] = ExactRational::one();
    coeffs[m] = -ExactRational::one();
    Poly::new(coeffs)
}

/// x/(1 - x - x^2), the Fibonacci generating function.
pub fn fibonacci_gf() -> RationalFunction {
    RationalFunction::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, -1, -1]))
}

/// x^k/((1 - x)(1 - x^k)), whose coefficient of x^n is floor(n/k).
pub fn floor_div_gf(k: usize) -> RationalFunction {
    assert!(k >= 1);
    RationalFunction::new(
        Poly::monomial(ExactRational::one(), k),
        &one_minus_xm(1) * &one_minus_xm(k),
    )
}

/// x^4/((1 - x^2)(1 - x^4)), the generating function of Q_2.
pub fn q2_gf() -> RationalFunction {
    RationalFunction::new(
        Poly::monomial(ExactRational::one(), 4),
        &one_minus_xm(2) * &one_minus_xm(4),
    )
}

/// Validate a Q_{p^r} closed-form argument: must be a prime power, and
/// the forms below additionally need p^r > 2.
fn check_pr(pr: u64) -> Result<()> {
    if is_prime_power(pr).is_none() {
        return Err(Error::NotAPrimePower(pr));
    }
    if pr == 2 {
        return Err(Error::UnsupportedCase(
            "no closed generating function at p^r = 2; Q_2 has its own form".into(),
        ));
    }
    Ok(())
}

/// The two rational-function pieces whose difference generates Q_{p^r}
/// for a prime power p^r > 2.
fn prime_power_gf_pieces(pr: u64) -> (RationalFunction, RationalFunction) {
    let pr = pr as usize;
    let head = RationalFunction::new(
        Poly::monomial(ExactRational::one(), pr),
        &one_minus_xm(2) * &one_minus_xm(2 * (pr - 1)),
    );
    let tail = RationalFunction::new(
        Poly::monomial(ExactRational::one(), pr),
        one_minus_xm(2 * pr),
    );
    (head, tail)
}

/// Truncation of x^{p^r}/((1-x^2)(1-x^{2(p^r-1)})) - x^{p^r}/(1-x^{2p^r});
/// the coefficient of x^n is Q_{p^r}(n) for prime powers p^r > 2.
pub fn prime_power_gf(pr: u64, order: usize) -> Result<TruncatedSeries> {
    check_pr(pr)?;
    let (head, tail) = prime_power_gf_pieces(pr);
    let h = head.expand(order)?;
    let t = tail.expand(order)?;
    Ok(TruncatedSeries::new(h).sub(&TruncatedSeries::new(t)))
}

/// Exact value of the Q_{p^r} generating function at a rational point.
pub fn prime_power_gf_value(pr: u64, x: &ExactRational) -> Result<ExactRational> {
    check_pr(pr)?;
    let (head, tail) = prime_power_gf_pieces(pr);
    Ok(&head.eval(x)? - &tail.eval(x)?)
}

/// Exact value of the Q_2 generating function at a rational point.
pub fn q2_value(x: &ExactRational) -> Result<ExactRational> {
    q2_gf().eval(x)
}

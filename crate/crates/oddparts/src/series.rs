//! Truncated formal power series with exact rational coefficients.
//!
//! A series of order N carries the coefficients of x^0 .. x^N and nothing
//! beyond; binary operations return the largest order both operands
//! support, so knowledge is never overstated.

use num::{BigInt, One};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::ExactRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// Series whose coefficients 0..len-1 are given; order = len - 1.
    pub fn new(coeffs: Vec<ExactRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    pub fn from_int_coeffs(coeffs: Vec<BigInt>) -> Self {
        TruncatedSeries::new(coeffs.into_iter().map(ExactRational::from).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ExactRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = ExactRational::one();
        s
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(|k| p.coeff(k)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^n; n must not exceed the truncation order, since
    /// coefficients beyond it are unknown rather than zero.
    pub fn coeff(&self, n: usize) -> &ExactRational {
        assert!(
            n < self.coeffs.len(),
            "coefficient {n} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product to the shared order. Zero coefficients of the left
    /// factor are skipped, so multiplying by a sparse polynomial-like
    /// series costs little.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![ExactRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + &t;
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        self.mul(&TruncatedSeries::from_poly(p, self.order()))
    }

    /// Multiply by x^k; the result is known through order + k.
    pub fn shift_left(&self, k: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse as a series; the constant term must be
    /// nonzero for one to exist.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantDenominator);
        }
        let a0_inv = a0.recip().unwrap();
        let n = self.order();
        let mut out = Vec::with_capacity(n + 1);
        out.push(a0_inv.clone());
        for k in 1..=n {
            let mut acc = ExactRational::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[j] * &out[k - j]);
            }
            out.push(&(-acc) * &a0_inv);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Value of the truncating polynomial at x (a partial sum of the
    /// underlying series, not the series' limit).
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// The coefficients as integers; `None` if any is a proper fraction.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.denom().is_one().then(|| c.numer().clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_int_coeffs(v.iter().map(|&n| BigInt::from(n)).collect())
    }

    #[test]
    fn order_tracking() {
        let a = ints(&[1, 2, 3, 4]);
        let b = ints(&[1, 1]);
        assert_eq!(a.order(), 3);
        assert_eq!(a.add(&b).order(), 1);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.truncate(2).order(), 2);
        assert_eq!(a.shift_left(2).order(), 5);
        assert_eq!(a.shift_left(2).coeff(2), &ExactRational::from(1));
    }

    #[test]
    #[should_panic(expected = "beyond truncation order")]
    fn coeff_beyond_order_panics() {
        ints(&[1, 2]).coeff(2);
    }

    #[test]
    fn multiplication() {
        // (1 + x)^2 = 1 + 2x + x^2
        let a = ints(&[1, 1, 0, 0]);
        assert_eq!(a.mul(&a), ints(&[1, 2, 1, 0]));
        // (1 - x)(1 + x + x^2 + ...) = 1
        let geo = ints(&[1, 1, 1, 1, 1, 1]);
        let one_minus_x = ints(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(geo.mul(&one_minus_x), TruncatedSeries::one(5));
    }

    #[test]
    fn reciprocal_geometric() {
        let one_minus_x = ints(&[1, -1, 0, 0, 0, 0, 0, 0]);
        let geo = one_minus_x.reciprocal().unwrap();
        assert_eq!(geo, ints(&[1, 1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(geo.mul(&one_minus_x), TruncatedSeries::one(7));
        let no_constant = ints(&[0, 1]);
        assert_eq!(
            no_constant.reciprocal().unwrap_err(),
            Error::ZeroConstantDenominator
        );
    }

    #[test]
    fn reciprocal_roundtrip_rational() {
        let s = TruncatedSeries::new(
            ["2", "1/3", "-5/7", "0", "11/2"]
                .iter()
                .map(|t| t.parse().unwrap())
                .collect(),
        );
        let inv = s.reciprocal().unwrap();
        assert_eq!(s.mul(&inv), TruncatedSeries::one(4));
    }

    #[test]
    fn eval_is_partial_sum() {
        // 1 + x + x^2 at 1/2 = 7/4
        let s = ints(&[1, 1, 1]);
        assert_eq!(s.eval(&"1/2".parse().unwrap()), "7/4".parse().unwrap());
    }

    #[test]
    fn integer_extraction() {
        assert!(ints(&[1, -2, 3]).integer_coeffs().is_some());
        let s = TruncatedSeries::new(vec!["1/2".parse().unwrap()]);
        assert!(s.integer_coeffs().is_none());
    }
}

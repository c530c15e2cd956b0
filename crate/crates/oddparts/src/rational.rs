//! Arbitrary-precision rationals in canonical reduced form, plus the
//! tagged evaluation points used by the bound families.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number. Always stored reduced, with a positive
/// denominator; equality is structural equality of the canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Build `num/den`, reducing to canonical form.
    ///
    /// Panics if `den` is zero; a zero denominator is a programming error,
    /// not an input condition (use [`ExactRational::from_str`] for input).
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        ExactRational(BigRational::new(num.into(), den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The numerator, provided the value is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| ExactRational(self.0.recip()))
    }

    /// Integer power with negative exponents allowed (value must be
    /// nonzero for those).
    pub fn pow(&self, exp: i64) -> Self {
        if exp >= 0 {
            ExactRational(num::traits::Pow::pow(&self.0, exp as u64))
        } else {
            let inv = self.recip().expect("zero base with negative exponent");
            ExactRational(num::traits::Pow::pow(&inv.0, (-exp) as u64))
        }
    }

    /// Decimal rendering with `digits` fractional digits, rounded in the
    /// requested direction relative to the true value. Floor/ceil keep a
    /// printed lower/upper bound certified.
    pub fn to_decimal(&self, digits: u32, mode: RoundMode) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let num = self.numer() * &scale;
        let den = self.denom();
        let scaled = match mode {
            RoundMode::Floor => num.div_floor(den),
            RoundMode::Ceil => -(-num).div_floor(den),
            RoundMode::Nearest => {
                let two = BigInt::from(2u32);
                (num * &two + den).div_floor(&(den * &two))
            }
        };
        let neg = scaled.sign() == Sign::Minus;
        let body = scaled.magnitude().to_string();
        let digits = digits as usize;
        let padded = if body.len() <= digits {
            format!("{}{}", "0".repeat(digits + 1 - body.len()), body)
        } else {
            body
        };
        let split = padded.len() - digits;
        let (int_part, frac_part) = padded.split_at(split);
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(int_part);
        if digits > 0 {
            out.push('.');
            out.push_str(frac_part);
        }
        out
    }
}

/// Rounding direction for decimal rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoundMode {
    Floor,
    Ceil,
    Nearest,
}

impl fmt::Display for ExactRational {
    /// `num/den`, with the denominator omitted when it is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num_s
            .parse()
            .map_err(|_| Error::ParseError(format!("bad numerator in {s:?}")))?;
        let den: BigInt = match den_s {
            Some(d) => d
                .parse()
                .map_err(|_| Error::ParseError(format!("bad denominator in {s:?}")))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::ParseError(format!("zero denominator in {s:?}")));
        }
        Ok(ExactRational(BigRational::new(num, den)))
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::from_integer(n)
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        ExactRational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: ExactRational) -> ExactRational {
        assert!(!rhs.is_zero(), "division by zero");
        ExactRational(self.0 / rhs.0)
    }
}

impl Div<&ExactRational> for &ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: &ExactRational) -> ExactRational {
        assert!(!rhs.is_zero(), "division by zero");
        ExactRational(&self.0 / &rhs.0)
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&ExactRational> for ExactRational {
    fn sub_assign(&mut self, rhs: &ExactRational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&ExactRational> for ExactRational {
    fn mul_assign(&mut self, rhs: &ExactRational) {
        self.0 *= &rhs.0;
    }
}

/// Domains on which the bound families are valid.
///
/// The golden interval 0 < x < phi-1 is tested by the exact rational
/// predicate x + x^2 < 1, which is equivalent and avoids the irrational
/// endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// 0 < x < 1.
    UnitInterval,
    /// 0 < x and x + x^2 < 1.
    GoldenInterval,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::UnitInterval => write!(f, "unit-interval"),
            Domain::GoldenInterval => write!(f, "golden-interval"),
        }
    }
}

/// A rational evaluation point tagged with the domain predicate it has
/// been checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    x: ExactRational,
    domain: Domain,
}

impl EvalPoint {
    /// Tag `x` for the unit interval; fails with the exact violated
    /// predicate otherwise.
    pub fn unit_interval(x: ExactRational) -> Result<Self> {
        if !x.is_positive() {
            return Err(Error::DomainError("x <= 0".into()));
        }
        if x >= ExactRational::one() {
            return Err(Error::DomainError("x >= 1".into()));
        }
        Ok(EvalPoint {
            x,
            domain: Domain::UnitInterval,
        })
    }

    /// Tag `x` for the golden interval (x + x^2 < 1).
    pub fn golden_interval(x: ExactRational) -> Result<Self> {
        if !x.is_positive() {
            return Err(Error::DomainError("x <= 0".into()));
        }
        if &x + &(&x * &x) >= ExactRational::one() {
            return Err(Error::DomainError("x + x^2 >= 1".into()));
        }
        Ok(EvalPoint {
            x,
            domain: Domain::GoldenInterval,
        })
    }

    pub fn in_domain(x: ExactRational, domain: Domain) -> Result<Self> {
        match domain {
            Domain::UnitInterval => Self::unit_interval(x),
            Domain::GoldenInterval => Self::golden_interval(x),
        }
    }

    pub fn x(&self) -> &ExactRational {
        &self.x
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Whether this point may be used where `required` is demanded. A
    /// golden-interval point lies inside the unit interval, so it
    /// satisfies both requirements.
    pub fn satisfies(&self, required: Domain) -> bool {
        match (self.domain, required) {
            (Domain::GoldenInterval, _) => true,
            (Domain::UnitInterval, Domain::UnitInterval) => true,
            (Domain::UnitInterval, Domain::GoldenInterval) => false,
        }
    }

    /// Error unless [`Self::satisfies`] holds.
    pub fn require(&self, required: Domain) -> Result<()> {
        if self.satisfies(required) {
            Ok(())
        } else {
            Err(Error::DomainError(format!(
                "point tagged {} where {} is required",
                self.domain, required
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = ExactRational::new(4, -6);
        assert_eq!(a.to_string(), "-2/3");
        assert_eq!(a.numer(), &BigInt::from(-2));
        assert_eq!(a.denom(), &BigInt::from(3));
        assert_eq!(ExactRational::new(8, 4).to_string(), "2");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["15/11", "-3/7", "0", "42", "-1"] {
            assert_eq!(r(s).to_string(), s);
        }
        assert_eq!(r("6/4").to_string(), "3/2");
        assert!(ExactRational::from_str("1/0").is_err());
        assert!(ExactRational::from_str("x/2").is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&r("1/4") + &r("1/4"), r("1/2"));
        assert_eq!(&r("1/4") * &r("4/3"), r("1/3"));
        assert_eq!(&r("1") - &r("1/4") - &r("1/16"), r("11/16"));
        assert_eq!(r("1/4").pow(-2), r("16"));
        assert_eq!(r("-2/3").pow(3), r("-8/27"));
    }

    #[test]
    fn decimal_rendering_directions() {
        let x = r("15/11");
        assert_eq!(x.to_decimal(6, RoundMode::Floor), "1.363636");
        assert_eq!(x.to_decimal(6, RoundMode::Ceil), "1.363637");
        assert_eq!(x.to_decimal(6, RoundMode::Nearest), "1.363636");
        let y = r("-15/11");
        assert_eq!(y.to_decimal(3, RoundMode::Floor), "-1.364");
        assert_eq!(y.to_decimal(3, RoundMode::Ceil), "-1.363");
        assert_eq!(r("1/2").to_decimal(0, RoundMode::Ceil), "1");
        assert_eq!(r("1/200").to_decimal(2, RoundMode::Floor), "0.00");
        assert_eq!(r("1/200").to_decimal(2, RoundMode::Ceil), "0.01");
    }

    #[test]
    fn domain_predicates() {
        assert!(EvalPoint::unit_interval(r("1/4")).is_ok());
        assert!(EvalPoint::unit_interval(r("0")).is_err());
        assert!(EvalPoint::unit_interval(r("1")).is_err());
        // 1/2 + 1/4 < 1, so 1/2 is inside the golden interval;
        // 3/5 + 9/25 = 24/25 < 1 too; 5/8 + 25/64 = 65/64 is not.
        assert!(EvalPoint::golden_interval(r("1/2")).is_ok());
        assert!(EvalPoint::golden_interval(r("3/5")).is_ok());
        let err = EvalPoint::golden_interval(r("5/8")).unwrap_err();
        assert_eq!(err, Error::DomainError("x + x^2 >= 1".into()));
    }

    #[test]
    fn golden_satisfies_unit() {
        let g = EvalPoint::golden_interval(r("1/4")).unwrap();
        assert!(g.satisfies(Domain::UnitInterval));
        assert!(g.satisfies(Domain::GoldenInterval));
        let u = EvalPoint::unit_interval(r("9/10")).unwrap();
        assert!(u.satisfies(Domain::UnitInterval));
        assert!(!u.satisfies(Domain::GoldenInterval));
        assert!(u.require(Domain::GoldenInterval).is_err());
    }
}

//! Dense polynomials over exact rationals, and quotients of them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::ExactRational;

/// Polynomial with exact rational coefficients, stored dense in ascending
/// order with trailing zeros trimmed. The zero polynomial has an empty
/// coefficient vector.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<ExactRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| ExactRational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Poly::new(vec![c])
    }

    /// c * x^k.
    pub fn monomial(c: ExactRational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> ExactRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Multiply by x^k.
    pub fn shift_left(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Exact division by x^k. Fails with the index of the first offending
    /// coefficient if any of the k low-order coefficients is nonzero.
    pub fn shift_right(&self, k: usize) -> Result<Self> {
        for (i, c) in self.coeffs.iter().take(k).enumerate() {
            if !c.is_zero() {
                return Err(Error::CancellationFailure(i));
            }
        }
        if self.coeffs.len() <= k {
            return Ok(Poly::zero());
        }
        Ok(Poly {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm. The
    /// coefficients form a field, so no pseudo-remainder tricks are needed.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => Poly::zero(),
            Some(lead) => {
                let inv = lead.recip().expect("trimmed polynomial has nonzero lead");
                self.scale(&inv)
            }
        }
    }

    /// Remainder of self divided by d (d nonzero).
    fn rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.coeffs[dd].recip().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let q = &r[r.len() - 1] * &lead_inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = &q * dc;
                r[k + i] = &r[k + i] - &t;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Poly { coeffs: r }
    }

    /// Exact quotient; panics unless d divides self exactly (internal use
    /// after a gcd computation).
    fn div_exact(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.coeffs[dd].recip().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![ExactRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] * &lead_inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                r[k + i] = &r[k + i] - &t;
            }
            q[k] = c;
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        assert!(r.is_empty(), "inexact polynomial division");
        Poly::new(q)
    }
}

impl fmt::Display for Poly {
    /// Human form in ascending powers, e.g. `1 + 4*x - 3*x^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + &t;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// A quotient of polynomials. The denominator is nonzero; beyond that no
/// normalization is imposed at construction, so two structurally different
/// values can represent the same function (compare with [`RationalFunction::fn_eq`]
/// or via [`RationalFunction::normalized`]).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator polynomial");
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn eval(&self, x: &ExactRational) -> Result<ExactRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(&self.num.eval(x) / &d)
    }

    pub fn add(&self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn sub(&self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn mul(&self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn scale(&self, c: &ExactRational) -> RationalFunction {
        RationalFunction::new(self.num.scale(c), self.den.clone())
    }

    /// Cancel the polynomial gcd and rescale so the denominator's lowest
    /// nonzero coefficient is 1. Equal functions then have equal parts.
    pub fn normalized(&self) -> RationalFunction {
        if self.num.is_zero() {
            return RationalFunction::from_poly(Poly::zero());
        }
        let g = self.num.gcd(&self.den);
        let num = self.num.div_exact(&g);
        let den = self.den.div_exact(&g);
        let anchor = den
            .coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero denominator")
            .clone();
        let inv = anchor.recip().unwrap();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    /// Function equality by cross-multiplication, no cancellation needed.
    pub fn fn_eq(&self, rhs: &RationalFunction) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }

    /// Power-series expansion of num/den through x^order inclusive. The
    /// denominator must have a nonzero constant term.
    pub fn expand(&self, order: usize) -> Result<Vec<ExactRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::ZeroConstantDenominator);
        }
        let d0_inv = d0.recip().unwrap();
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for j in 1..=n.min(self.den.coeffs().len().saturating_sub(1)) {
                let dj = self.den.coeff(j);
                if dj.is_zero() {
                    continue;
                }
                let prev: &ExactRational = &out[n - j];
                acc = &acc - &(&dj * prev);
            }
            out.push(&acc * &d0_inv);
        }
        Ok(out)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

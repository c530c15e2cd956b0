//! The bound families: certified enclosures of the odd-divisor sum and
//! the distinct-parts product, the corollary constants, the {A_k, B_k}
//! sandwich, the R_k rational functions, and the later upper bounds.
//!
//! Truncating the prime-power sums is always one-sidedly safe: every
//! dropped term is a generating function with nonnegative coefficients
//! (each Q_k(n) >= 0), so dropping it weakens a lower bound and
//! strengthens nothing.

use std::fmt;

use crate::error::{Error, Result};
use crate::fibonacci::FibCache;
use crate::genfun::{prime_power_gf_value, q2_value};
use crate::partitions::{is_prime_power, PrimePowerSet, QCounts};
use crate::poly::{Poly, RationalFunction};
use crate::rational::{Domain, EvalPoint, ExactRational, RoundMode};
use crate::verify::{compute_s, SVariant};

/// Certified two-sided bound on an infinite sum or product: the target
/// provably lies in [lo, hi].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: ExactRational,
    pub hi: ExactRational,
}

impl Enclosure {
    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// `[lo, hi]` with directionally rounded decimals, so the printed
    /// interval still contains the target.
    pub fn render(&self, digits: u32) -> String {
        format!(
            "[{}, {}] ~ [{}, {}]",
            self.lo,
            self.hi,
            self.lo.to_decimal(digits, RoundMode::Floor),
            self.hi.to_decimal(digits, RoundMode::Ceil)
        )
    }
}

/// Enclose sum_{n>=1} x^n/(1 - x^{2n}).
///
/// lo is the exact partial sum through `terms`. The tail bound: for
/// n > N each term x^n/(1-x^{2n}) <= x^n/(1-x^{2(N+1)}), and summing the
/// geometric x^n gives hi = lo + x^{N+1}/((1-x)(1-x^{2(N+1)})).
pub fn enclose_odd_divisor_sum(point: &EvalPoint, terms: u64) -> Result<Enclosure> {
    point.require(Domain::UnitInterval)?;
    let x = point.x();
    let one = ExactRational::one();
    let mut lo = ExactRational::zero();
    for n in 1..=terms {
        let xn = x.pow(n as i64);
        let term = &xn / &(&one - &(&xn * &xn));
        lo += &term;
    }
    let xn1 = x.pow(terms as i64 + 1);
    let tail = &xn1 / &(&(&one - x) * &(&one - &(&xn1 * &xn1)));
    let hi = &lo + &tail;
    Ok(Enclosure { lo, hi })
}

/// The exact partial product prod_{n=1}^{terms} (1 + x^n): always a
/// valid lower bound on the infinite product on its own.
pub fn distinct_product_partial(point: &EvalPoint, terms: u64) -> Result<ExactRational> {
    point.require(Domain::UnitInterval)?;
    let x = point.x();
    let mut lo = ExactRational::one();
    for n in 1..=terms {
        lo *= &(ExactRational::one() + x.pow(n as i64));
    }
    Ok(lo)
}

/// Enclose prod_{n>=1} (1 + x^n).
///
/// lo is the exact partial product. With t = x^{N+1}/(1-x) (the sum of
/// the dropped exponents' geometric majorant), the dropped factor is at
/// most exp(t) <= 1/(1-t), giving hi = lo/(1-t) provided t < 1.
pub fn enclose_distinct_product(point: &EvalPoint, terms: u64) -> Result<Enclosure> {
    let lo = distinct_product_partial(point, terms)?;
    let x = point.x();
    let one = ExactRational::one();
    let t = &x.pow(terms as i64 + 1) / &(&one - x);
    if t >= one {
        return Err(Error::TailDiverges);
    }
    let hi = &lo / &(&one - &t);
    Ok(Enclosure { lo, hi })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// An evaluated member of one of the bound families.
#[derive(Clone, Debug)]
pub struct BoundResult {
    pub family: &'static str,
    pub k: Option<u64>,
    pub side: Side,
    pub value: ExactRational,
}

/// Constant part of the corollary1 lower bound: 1 plus the Q_2 term plus
/// the generating-function values over the chosen subset of P. Add the
/// enclosed odd-divisor sum to get the full lower bound on the product.
pub fn corollary1_lower(point: &EvalPoint, subset: &PrimePowerSet) -> Result<BoundResult> {
    point.require(Domain::UnitInterval)?;
    let x = point.x();
    let mut value = ExactRational::one() + q2_value(x)?;
    for &m in subset.elements() {
        value += &prime_power_gf_value(m, x)?;
    }
    Ok(BoundResult {
        family: "corollary1",
        k: None,
        side: Side::Lower,
        value,
    })
}

/// Constant part of the corollary2 upper bound on the odd-divisor sum:
/// x/(1-x-x^2) - 2 (Q_2 term) - sum over the subset of k times the
/// Q_k generating function value.
pub fn corollary2_upper(point: &EvalPoint, subset: &PrimePowerSet) -> Result<BoundResult> {
    point.require(Domain::GoldenInterval)?;
    let x = point.x();
    let mut value = &fib_gf_value(x) - &(ExactRational::from(2) * q2_value(x)?);
    for &m in subset.elements() {
        value -= &(ExactRational::from(m as i64) * prime_power_gf_value(m, x)?);
    }
    Ok(BoundResult {
        family: "corollary2",
        k: None,
        side: Side::Upper,
        value,
    })
}

/// x/(1 - x - x^2); positive denominator anywhere x + x^2 < 1, and on
/// the unit interval only the golden tag guarantees that.
fn fib_gf_value(x: &ExactRational) -> ExactRational {
    let den = &(&ExactRational::one() - x) - &(x * x);
    x / &den
}

/// The first `count` elements of P (prime powers > 2, ascending).
fn p_elements(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut m = 3;
    while out.len() < count {
        if is_prime_power(m).is_some() {
            out.push(m);
        }
        m += 1;
    }
    out
}

/// A_k(x): A_1 = 1, A_2 adds the Q_2 generating function, and each later
/// step adds the generating function of the next member of P. The index
/// sequence p_1 = 1, p_2 = 2, p_3 = 3, p_4 = 4, p_5 = 5, p_6 = 7, ...
/// walks the positive integers whose divisors form a geometric
/// progression.
pub fn a_k(point: &EvalPoint, k: u64) -> Result<BoundResult> {
    point.require(Domain::UnitInterval)?;
    if k == 0 {
        return Err(Error::UnsupportedK(0));
    }
    let x = point.x();
    let mut value = ExactRational::one();
    if k >= 2 {
        value += &q2_value(x)?;
    }
    for pr in p_elements(k.saturating_sub(2) as usize) {
        value += &prime_power_gf_value(pr, x)?;
    }
    Ok(BoundResult {
        family: "Ak",
        k: Some(k),
        side: Side::Lower,
        value,
    })
}

/// GF_j(x) for the j values the B-family recurrence consumes.
fn gf_value(j: u64, x: &ExactRational) -> Result<ExactRational> {
    if j == 2 {
        q2_value(x)
    } else {
        prime_power_gf_value(j, x)
    }
}

/// B_k(x) by the recurrence k B_k = (k-1) B_{k-1} + 1 + sum_{j=2}^{k-1}
/// GF_j(x), seeded with B_1 = 1 + x/(1-x-x^2). k runs only to 6: the
/// step to k = 7 needs GF_6, which has no closed form, and no certified
/// substitute exists.
pub fn b_k(point: &EvalPoint, k: u64) -> Result<BoundResult> {
    point.require(Domain::GoldenInterval)?;
    if k == 0 || k > 6 {
        return Err(Error::UnsupportedK(k));
    }
    let x = point.x();
    let mut b = ExactRational::one() + fib_gf_value(x);
    for step in 2..=k {
        let mut rhs = &(&ExactRational::from(step as i64 - 1) * &b) + &ExactRational::one();
        for j in 2..step {
            rhs += &gf_value(j, x)?;
        }
        b = &rhs / &ExactRational::from(step as i64);
    }
    Ok(BoundResult {
        family: "Bk",
        k: Some(k),
        side: Side::Upper,
        value: b,
    })
}

/// The same bound in closed form, bypassing the recurrence:
/// 1 + x/(k(1-x-x^2)) + (1/k) sum_{j=2}^{k-1} (k-j) GF_j(x). Equal to
/// B_k wherever both are defined; kept separate as a cross-check.
pub fn b_k_closed(point: &EvalPoint, k: u64) -> Result<BoundResult> {
    point.require(Domain::GoldenInterval)?;
    if k == 0 || k > 6 {
        return Err(Error::UnsupportedK(k));
    }
    let x = point.x();
    let kq = ExactRational::from(k as i64);
    let mut value = ExactRational::one() + (&fib_gf_value(x) / &kq);
    for j in 2..k {
        let weight = ExactRational::from((k - j) as i64);
        value += &(&(&weight * &gf_value(j, x)?) / &kq);
    }
    Ok(BoundResult {
        family: "Bk-closed",
        k: Some(k),
        side: Side::Upper,
        value,
    })
}

/// Assemble the family-generic upper-bound rational function
///
///   1/(x^{k-1}(1+x)^k(1-x-x^2)) - W(x)/(x^k(1+x)^k),
///   W(x) = sum_{n=0}^{2k} (F_n - S_{n,k}) x^n,
///
/// over the common denominator (1+x)^k(1-x-x^2). The combined numerator
/// x - (1-x-x^2)W(x) must vanish to order k at 0; the x^k prefactor is
/// cancelled by exact polynomial division, never by evaluating near 0.
pub fn assemble_upper_rf(variant: SVariant, k: u64) -> Result<RationalFunction> {
    let qc = QCounts::up_to(2 * k as usize);
    let mut fib = FibCache::new();
    let w = Poly::new(
        (0..=2 * k)
            .map(|n| ExactRational::from(fib.get(n as usize) - compute_s(variant, k, n, &qc)))
            .collect(),
    );
    let m = &Poly::from_ints(&[0, 1]) - &(&Poly::from_ints(&[1, -1, -1]) * &w);
    let num = m.shift_right(k as usize)?;
    let mut den = Poly::from_ints(&[1, -1, -1]);
    let one_plus_x = Poly::from_ints(&[1, 1]);
    for _ in 0..k {
        den = &den * &one_plus_x;
    }
    Ok(RationalFunction::new(num, den))
}

/// R_k as a rational function (the q-only variant of the assembly).
pub fn r_k_symbolic(k: u64) -> Result<RationalFunction> {
    assemble_upper_rf(SVariant::QOnly, k)
}

/// R_k evaluated at a golden-interval point.
pub fn r_k_value(point: &EvalPoint, k: u64) -> Result<BoundResult> {
    point.require(Domain::GoldenInterval)?;
    let value = r_k_symbolic(k)?.eval(point.x())?;
    Ok(BoundResult {
        family: "Rk",
        k: Some(k),
        side: Side::Upper,
        value,
    })
}

/// Right-hand side of the first mixed upper bound (the 2q - Q_1 window):
/// bounds 2(-x;x)_inf minus the odd-divisor sum from above.
pub fn mixed2_upper(point: &EvalPoint, k: u64) -> Result<BoundResult> {
    point.require(Domain::GoldenInterval)?;
    let value = assemble_upper_rf(SVariant::TwoQMinusQ1, k)?.eval(point.x())?;
    Ok(BoundResult {
        family: "mixed2",
        k: Some(k),
        side: Side::Upper,
        value,
    })
}

/// Right-hand side of the second mixed upper bound (the 3q - 2Q_1 - Q_2
/// window), including its additive Q_2 generating-function term: bounds
/// 3(-x;x)_inf minus twice the odd-divisor sum from above.
pub fn mixed3_upper(point: &EvalPoint, k: u64) -> Result<BoundResult> {
    point.require(Domain::GoldenInterval)?;
    let x = point.x();
    let value =
        &q2_value(x)? + &assemble_upper_rf(SVariant::ThreeQMinusTwoQ1MinusQ2, k)?.eval(x)?;
    Ok(BoundResult {
        family: "mixed3",
        k: Some(k),
        side: Side::Upper,
        value,
    })
}

/// The family names addressable from user-facing interfaces.
pub const FAMILIES: [&str; 8] = [
    "Ak",
    "Bk",
    "Bk-closed",
    "Rk",
    "corollary1",
    "corollary2",
    "mixed2",
    "mixed3",
];

/// Evaluate a family by surface name, building the point in the domain
/// that family requires. `k` addresses the indexed families, `subset`
/// the corollaries; each family ignores the argument it does not take.
pub fn eval_family(
    name: &str,
    k: Option<u64>,
    x: ExactRational,
    subset: &PrimePowerSet,
) -> Result<BoundResult> {
    let point = match name {
        "Ak" | "corollary1" => EvalPoint::unit_interval(x)?,
        "Bk" | "Bk-closed" | "Rk" | "corollary2" | "mixed2" | "mixed3" => {
            EvalPoint::golden_interval(x)?
        }
        _ => return Err(Error::ParseError(format!("unknown bound family '{name}'"))),
    };
    if matches!(name, "corollary1" | "corollary2") {
        return if name == "corollary1" {
            corollary1_lower(&point, subset)
        } else {
            corollary2_upper(&point, subset)
        };
    }
    let k = k.ok_or_else(|| Error::ParseError(format!("family {name} requires an index k")))?;
    match name {
        "Ak" => a_k(&point, k),
        "Bk" => b_k(&point, k),
        "Bk-closed" => b_k_closed(&point, k),
        "Rk" => r_k_value(&point, k),
        "mixed2" => mixed2_upper(&point, k),
        _ => mixed3_upper(&point, k),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// lower < product.lo <= product.hi < upper: the sandwich is
    /// certified strictly at this point.
    Straddled,
    /// The enclosures are too wide to separate the three quantities.
    Inconclusive,
}

/// One run of the two-sided family at a point: A_k plus the sum's lower
/// enclosure against the product from below, B_k plus (k-1)/k times the
/// sum's upper enclosure from above.
#[derive(Clone, Debug)]
pub struct SandwichReport {
    pub k: u64,
    pub terms: u64,
    pub lower: ExactRational,
    pub upper: ExactRational,
    pub sum: Enclosure,
    pub product: Enclosure,
    pub verdict: Verdict,
}

impl fmt::Display for SandwichReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sandwich k={} terms={}", self.k, self.terms)?;
        writeln!(
            f,
            "  lower  = {} ~ {}",
            self.lower,
            self.lower.to_decimal(12, RoundMode::Floor)
        )?;
        writeln!(f, "  product {}", self.product.render(12))?;
        writeln!(
            f,
            "  upper  = {} ~ {}",
            self.upper,
            self.upper.to_decimal(12, RoundMode::Ceil)
        )?;
        write!(
            f,
            "  verdict: {}",
            match self.verdict {
                Verdict::Straddled => "straddled".to_string(),
                Verdict::Inconclusive => format!(
                    "inconclusive (product width {}, sum width {})",
                    self.product.width(),
                    self.sum.width()
                ),
            }
        )
    }
}

pub fn sandwich(point: &EvalPoint, k: u64, terms: u64) -> Result<SandwichReport> {
    point.require(Domain::GoldenInterval)?;
    let a = a_k(point, k)?.value;
    let b = b_k(point, k)?.value;
    let sum = enclose_odd_divisor_sum(point, terms)?;
    let product = enclose_distinct_product(point, terms)?;
    let lower = &a + &sum.lo;
    let frac = ExactRational::new(k as i64 - 1, k as i64);
    let upper = &b + &(&frac * &sum.hi);
    let verdict = if lower < product.lo && product.hi < upper {
        Verdict::Straddled
    } else {
        Verdict::Inconclusive
    };
    Ok(SandwichReport {
        k,
        terms,
        lower,
        upper,
        sum,
        product,
        verdict,
    })
}

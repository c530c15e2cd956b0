//! Pinned reference values at x = 1/4: the exact rationals every bound
//! family must reproduce, frozen here so the `report` command and the
//! acceptance suite compare against fixed expectations instead of
//! re-deriving them.
//!
//! The mixed-family entries record which derivation produced each pinned
//! number. At k = 5 the mixed2 inequality bounds twice the product minus
//! the sum, and the pinned constant is half the assembled right-hand
//! side; at k = 6 the pinned constant is the right-hand side itself,
//! unhalved. The asymmetry is deliberate: these are the constants as
//! published, and the labels say which rule each one came from.

use crate::bounds::{
    b_k, corollary1_lower, corollary2_upper, enclose_odd_divisor_sum, mixed2_upper, mixed3_upper,
    r_k_symbolic, r_k_value,
};
use crate::error::Result;
use crate::partitions::PrimePowerSet;
use crate::poly::Poly;
use crate::rational::{EvalPoint, ExactRational};

/// A labeled computed-vs-pinned equality check.
#[derive(Clone, Debug)]
pub struct ConstantCheck {
    pub label: &'static str,
    pub computed: ExactRational,
    pub expected: ExactRational,
}

impl ConstantCheck {
    pub fn passed(&self) -> bool {
        self.computed == self.expected
    }
}

/// A labeled polynomial identity check (numerators of the R family).
#[derive(Clone, Debug)]
pub struct PolyCheck {
    pub label: &'static str,
    pub computed: Poly,
    pub expected: Poly,
}

impl PolyCheck {
    pub fn passed(&self) -> bool {
        self.computed == self.expected
    }
}

/// A labeled one-sided check: computed must be >= threshold.
#[derive(Clone, Debug)]
pub struct ThresholdCheck {
    pub label: &'static str,
    pub computed: ExactRational,
    pub threshold: ExactRational,
}

impl ThresholdCheck {
    pub fn passed(&self) -> bool {
        self.computed >= self.threshold
    }
}

fn pinned(s: &str) -> ExactRational {
    s.parse().expect("pinned constant parses")
}

/// The point every pinned value below is tied to.
pub fn quarter_point() -> EvalPoint {
    EvalPoint::golden_interval(ExactRational::new(1, 4)).expect("1/4 is in the golden interval")
}

/// The full table of pinned bound constants at x = 1/4, in report order.
pub fn quarter_constants() -> Result<Vec<ConstantCheck>> {
    let p = quarter_point();
    let three = PrimePowerSet::from_elements(&[3])?;
    let two = ExactRational::from(2);
    let checks = vec![
        ConstantCheck {
            label: "B1",
            computed: b_k(&p, 1)?.value,
            expected: pinned("15/11"),
        },
        ConstantCheck {
            label: "B2",
            computed: b_k(&p, 2)?.value,
            expected: pinned("13/11"),
        },
        ConstantCheck {
            label: "B3",
            computed: b_k(&p, 3)?.value,
            expected: pinned("141701/126225"),
        },
        ConstantCheck {
            label: "corollary1 P={3}",
            computed: corollary1_lower(&p, &three)?.value,
            expected: pinned("69983/69615"),
        },
        ConstantCheck {
            label: "corollary2 P={3}",
            computed: corollary2_upper(&p, &three)?.value,
            expected: pinned("1347596/3828825"),
        },
        ConstantCheck {
            label: "R4",
            computed: r_k_value(&p, 4)?.value,
            expected: pinned("9364/6875"),
        },
        ConstantCheck {
            label: "R5",
            computed: r_k_value(&p, 5)?.value,
            expected: pinned("46754/34375"),
        },
        ConstantCheck {
            label: "R6",
            computed: r_k_value(&p, 6)?.value,
            expected: pinned("233506/171875"),
        },
        ConstantCheck {
            label: "mixed2 k=5 (rhs/2)",
            computed: &mixed2_upper(&p, 5)?.value / &two,
            expected: pinned("81239/68750"),
        },
        ConstantCheck {
            label: "mixed2 k=6 (rhs)",
            computed: mixed2_upper(&p, 6)?.value,
            expected: pinned("406118/171875"),
        },
        ConstantCheck {
            label: "mixed3 k=6 (rhs/3)",
            computed: &mixed3_upper(&p, 6)?.value / &ExactRational::from(3),
            expected: pinned("88561442/78890625"),
        },
    ];
    Ok(checks)
}

/// Numerator polynomials of R_4, R_5, R_6, coefficient for coefficient.
pub fn r_numerator_checks() -> Result<Vec<PolyCheck>> {
    let table: [(&'static str, u64, &[i64]); 3] = [
        ("R4 numerator", 4, &[1, 4, 5, 0, -6, -3]),
        ("R5 numerator", 5, &[1, 5, 9, 5, -6, -15, 3, 6]),
        ("R6 numerator", 6, &[1, 6, 14, 14, -1, -21, -36, 33, 30]),
    ];
    let mut checks = Vec::with_capacity(table.len());
    for (label, k, coeffs) in table {
        checks.push(PolyCheck {
            label,
            computed: r_k_symbolic(k)?.num().clone(),
            expected: Poly::from_ints(coeffs),
        });
    }
    Ok(checks)
}

/// The sixteen-term lower bound on the product at x = 1/4: the
/// corollary1 P={3} constant plus the exact partial sum of the first
/// sixteen odd-divisor terms must clear 1.35553519 = 135553519/10^8.
pub fn sixteen_term_lower_bound() -> Result<ThresholdCheck> {
    let p = quarter_point();
    let three = PrimePowerSet::from_elements(&[3])?;
    let constant = corollary1_lower(&p, &three)?.value;
    let partial = enclose_odd_divisor_sum(&p, 16)?.lo;
    Ok(ThresholdCheck {
        label: "corollary1 P={3} + 16-term sum",
        computed: &constant + &partial,
        threshold: pinned("135553519/100000000"),
    })
}

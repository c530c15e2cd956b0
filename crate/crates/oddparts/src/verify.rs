//! Finite verification suites for the identities and coefficientwise
//! inequalities, with first-counterexample reporting.

use std::fmt;

use num::{BigInt, Zero};

use crate::fibonacci::FibCache;
use crate::genfun::{odd_pochhammer, pochhammer_neg, prime_power_gf};
use crate::partitions::{
    fib_multinomial_sum, prime_powers_up_to, q1_closed, q2_closed, q_pr_closed, verify_fine,
    QCounts, QTable,
};
use crate::series::TruncatedSeries;

/// Which weight function the binomial window sum S_{n,k} is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SVariant {
    /// w(m) = q(m)
    QOnly,
    /// w(m) = 2q(m) - Q_1(m)
    TwoQMinusQ1,
    /// w(m) = 3q(m) - 2Q_1(m) - Q_2(m)
    ThreeQMinusTwoQ1MinusQ2,
}

fn q1_at(m: i64) -> BigInt {
    if m <= 0 {
        BigInt::zero()
    } else {
        BigInt::from(q1_closed(m as u64))
    }
}

fn q2_at(m: i64) -> BigInt {
    if m <= 0 {
        BigInt::zero()
    } else {
        BigInt::from(q2_closed(m as u64))
    }
}

fn weight(variant: SVariant, m: i64, qc: &QCounts) -> BigInt {
    let q = qc.q(m);
    match variant {
        SVariant::QOnly => q,
        SVariant::TwoQMinusQ1 => 2 * q - q1_at(m),
        SVariant::ThreeQMinusTwoQ1MinusQ2 => 3 * q - 2 * q1_at(m) - q2_at(m),
    }
}

/// S_{n,k} = sum_{j=0}^{k} C(k,j) w(n-k-j); arguments below zero follow
/// the conventions q(0) = 1, q(m) = 0 and Q_1(m) = Q_2(m) = 0 for m <= 0
/// (with Q at 0 also 0).
pub fn compute_s(variant: SVariant, k: u64, n: u64, qc: &QCounts) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=k {
        let c = num::integer::binomial(BigInt::from(k), BigInt::from(j));
        let m = n as i64 - k as i64 - j as i64;
        acc += c * weight(variant, m, qc);
    }
    acc
}

/// S_{n,k} for one (variant, k) over n = 0..=max_n.
pub struct SWeights {
    pub variant: SVariant,
    pub k: u64,
    values: Vec<BigInt>,
}

impl SWeights {
    pub fn compute(variant: SVariant, k: u64, max_n: u64, qc: &QCounts) -> Self {
        SWeights {
            variant,
            k,
            values: (0..=max_n).map(|n| compute_s(variant, k, n, qc)).collect(),
        }
    }

    pub fn value(&self, n: u64) -> &BigInt {
        &self.values[n as usize]
    }

    pub fn max_n(&self) -> u64 {
        self.values.len() as u64 - 1
    }
}

/// First failing cell of a suite scan, in canonical order (n outer
/// ascending, k inner ascending). k is 0 where the suite has no k grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub n: u64,
    pub k: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub range: String,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    fn pass(suite: &str, range: String) -> Self {
        VerificationReport {
            suite: suite.into(),
            range,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: PASS [{}]", self.suite, self.range),
            Some(c) => write!(
                f,
                "{}: FAIL at n={}, k={}: lhs={} rhs={} [{}]",
                self.suite, c.n, c.k, c.lhs, c.rhs, self.range
            ),
        }
    }
}

/// Scan driver: returns the report for the first cell where `cell`
/// yields a (lhs, rhs) disagreement per `ok`.
fn scan<I, F, G>(suite: &str, range: String, grid: I, mut cell: F, ok: G) -> VerificationReport
where
    I: Iterator<Item = (u64, u64)>,
    F: FnMut(u64, u64) -> (BigInt, BigInt),
    G: Fn(&BigInt, &BigInt) -> bool,
{
    for (n, k) in grid {
        let (lhs, rhs) = cell(n, k);
        if !ok(&lhs, &rhs) {
            return VerificationReport {
                suite: suite.into(),
                range,
                counterexample: Some(Counterexample { n, k, lhs, rhs }),
            };
        }
    }
    VerificationReport::pass(suite, range)
}

/// Row sums of the brute histograms: sum_k Q_k(n) = q(n) and
/// sum_k k Q_k(n) = F_n for every row of the table.
pub fn check_qk_sums(table: &QTable, qc: &QCounts, fib: &mut FibCache) -> VerificationReport {
    let range = format!("n <= {}", table.max_n());
    for row in table.rows() {
        let n = row.n();
        let total = row.total();
        let q = qc.q(n as i64);
        if total != q {
            return VerificationReport {
                suite: "qk-sums".into(),
                range,
                counterexample: Some(Counterexample {
                    n,
                    k: 0,
                    lhs: total,
                    rhs: q,
                }),
            };
        }
        let weighted = row.weighted_total();
        let f = fib.get(n as usize);
        if weighted != f {
            return VerificationReport {
                suite: "qk-sums".into(),
                range,
                counterexample: Some(Counterexample {
                    n,
                    k: 1,
                    lhs: weighted,
                    rhs: f,
                }),
            };
        }
    }
    VerificationReport::pass("qk-sums", range)
}

/// Brute-force Q_k(n) against the closed forms for k = 1, k = 2 and all
/// prime powers 2 < p^r <= pr_bound.
pub fn check_closed_forms(table: &QTable, pr_bound: u64) -> VerificationReport {
    let range = format!("n <= {}, p^r <= {pr_bound}", table.max_n());
    let powers = prime_powers_up_to(pr_bound);
    let mut ks: Vec<u64> = vec![1, 2];
    ks.extend_from_slice(powers.elements());
    let grid = (1..=table.max_n()).flat_map(|n| ks.clone().into_iter().map(move |k| (n, k)));
    scan(
        "closed-forms",
        range,
        grid,
        |n, k| {
            let brute = table.row(n).q_k_u64(k);
            let closed = match k {
                1 => q1_closed(n),
                2 => q2_closed(n),
                _ => q_pr_closed(k, n).expect("k is a prime power > 2"),
            };
            (brute, BigInt::from(closed))
        },
        |lhs, rhs| lhs == rhs,
    )
}

/// Generating-function coefficients against the closed form, for the
/// standard prime-power sample, through x^max_n.
pub fn check_gf_vs_closed(max_n: u64) -> VerificationReport {
    const SAMPLE: [u64; 12] = [3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32];
    let range = format!("n <= {max_n}, p^r in {SAMPLE:?}");
    for pr in SAMPLE {
        let gf = prime_power_gf(pr, max_n as usize).expect("sample is prime powers > 2");
        let coeffs = gf.integer_coeffs().expect("integer generating function");
        for n in 1..=max_n {
            let closed = BigInt::from(q_pr_closed(pr, n).unwrap());
            if coeffs[n as usize] != closed {
                return VerificationReport {
                    suite: "gf-vs-closed".into(),
                    range,
                    counterexample: Some(Counterexample {
                        n,
                        k: pr,
                        lhs: coeffs[n as usize].clone(),
                        rhs: closed,
                    }),
                };
            }
        }
    }
    VerificationReport::pass("gf-vs-closed", range)
}

/// Sum of multinomials over odd partitions of n equals F_n.
pub fn check_fib_multinomial(max_n: u64, fib: &mut FibCache) -> VerificationReport {
    let range = format!("n <= {max_n}");
    scan(
        "fib-multinomial",
        range,
        (1..=max_n).map(|n| (n, 0)),
        |n, _| (fib_multinomial_sum(n), fib.get(n as usize)),
        |lhs, rhs| lhs == rhs,
    )
}

/// Fine's identity on the full triangle 1 <= k <= n <= max_n.
pub fn check_fine(max_n: u64) -> VerificationReport {
    let range = format!("1 <= k <= n <= {max_n}");
    for n in 1..=max_n {
        for k in 1..=n {
            if !verify_fine(n, k) {
                return VerificationReport {
                    suite: "fine".into(),
                    range,
                    counterexample: Some(Counterexample {
                        n,
                        k,
                        lhs: num::integer::binomial(BigInt::from(n - 1), BigInt::from(k - 1)),
                        rhs: crate::partitions::sum_multinomials_exact_parts(n, k),
                    }),
                };
            }
        }
    }
    VerificationReport::pass("fine", range)
}

/// k q(n) <= F_n + sum_{j=1}^{k-1} (k-j) Q_j(n), with Q_j taken from the
/// brute-force table so composite j are covered.
pub fn check_kq_bound(
    table: &QTable,
    qc: &QCounts,
    fib: &mut FibCache,
    max_k: u64,
) -> VerificationReport {
    let range = format!("k <= {max_k}, n <= {}", table.max_n());
    let max_n = table.max_n();
    scan(
        "kq-bound",
        range,
        (1..=max_n).flat_map(move |n| (1..=max_k).map(move |k| (n, k))),
        |n, k| {
            let lhs = BigInt::from(k) * qc.q(n as i64);
            let mut rhs = fib.get(n as usize);
            for j in 1..k {
                rhs += BigInt::from(k - j) * table.row(n).q_k_u64(j);
            }
            (lhs, rhs)
        },
        |lhs, rhs| lhs <= rhs,
    )
}

/// q(n) - q(n-1) - q(n-2) <= 0, twice over: once from the q table and
/// once as the series coefficients of (1 - x - x^2) / (x; x^2)_inf.
pub fn check_q_difference(max_n: u64) -> VerificationReport {
    let range = format!("0 < n <= {max_n}");
    let qc = QCounts::up_to(max_n as usize);
    let recip = odd_pochhammer(max_n as usize)
        .reciprocal()
        .expect("constant term 1");
    let numer = crate::poly::Poly::from_ints(&[1, -1, -1]);
    let series = recip.mul_poly(&numer);
    let coeffs = series.integer_coeffs().expect("integer coefficients");
    scan(
        "q-difference",
        range,
        (1..=max_n).map(|n| (n, 0)),
        |n, _| {
            let direct = qc.q(n as i64) - qc.q(n as i64 - 1) - qc.q(n as i64 - 2);
            assert_eq!(
                direct, coeffs[n as usize],
                "series form disagrees with the q table at n={n}"
            );
            (direct, BigInt::zero())
        },
        |lhs, rhs| lhs <= rhs,
    )
}

/// S_{n,k} <= F_n for the q-only variant, on 0 <= k <= max_k, 2k < n <= max_n.
pub fn check_proposition(max_k: u64, max_n: u64) -> VerificationReport {
    let range = format!("k <= {max_k}, 2k < n <= {max_n}");
    let qc = QCounts::up_to(max_n as usize);
    let mut fib = FibCache::new();
    scan(
        "proposition",
        range,
        (1..=max_n).flat_map(move |n| (0..=max_k).filter(move |&k| 2 * k < n).map(move |k| (n, k))),
        |n, k| (compute_s(SVariant::QOnly, k, n, &qc), fib.get(n as usize)),
        |lhs, rhs| lhs <= rhs,
    )
}

/// The recurrence S_{n+2,k+1} = S_{n+1,k} + S_{n,k} (q-only variant).
pub fn check_s_recurrence(max_k: u64, max_n: u64) -> VerificationReport {
    let range = format!("k <= {max_k}, n <= {max_n}");
    let qc = QCounts::up_to(max_n as usize + 2);
    scan(
        "s-recurrence",
        range,
        (0..=max_n).flat_map(move |n| (0..=max_k).map(move |k| (n, k))),
        |n, k| {
            let lhs = compute_s(SVariant::QOnly, k + 1, n + 2, &qc);
            let rhs =
                compute_s(SVariant::QOnly, k, n + 1, &qc) + compute_s(SVariant::QOnly, k, n, &qc);
            (lhs, rhs)
        },
        |lhs, rhs| lhs == rhs,
    )
}

/// sum_j C(k,j) F_{n-k-j} = F_n for n >= 2k.
pub fn check_fib_binomial(max_k: u64, max_n: u64) -> VerificationReport {
    let range = format!("k <= {max_k}, 2k <= n <= {max_n}");
    let mut fib = FibCache::new();
    scan(
        "fib-binomial",
        range,
        (0..=max_n).flat_map(move |n| {
            (0..=max_k)
                .filter(move |&k| 2 * k <= n)
                .map(move |k| (n, k))
        }),
        |n, k| {
            let mut lhs = BigInt::zero();
            for j in 0..=k {
                let c = num::integer::binomial(BigInt::from(k), BigInt::from(j));
                lhs += c * fib.get((n - k - j) as usize);
            }
            (lhs, fib.get(n as usize))
        },
        |lhs, rhs| lhs == rhs,
    )
}

/// (-x; x)_inf times (x; x^2)_inf is 1 through x^max_n: the two truncated
/// products are mutual reciprocals.
pub fn check_euler_reciprocal(max_n: u64) -> VerificationReport {
    let range = format!("order {max_n}");
    let n = max_n as usize;
    let prod = pochhammer_neg(n).mul(&odd_pochhammer(n));
    let one = TruncatedSeries::one(n);
    for i in 0..=n {
        if prod.coeff(i) != one.coeff(i) {
            return VerificationReport {
                suite: "euler-reciprocal".into(),
                range,
                counterexample: Some(Counterexample {
                    n: i as u64,
                    k: 0,
                    lhs: prod.coeff(i).numer().clone(),
                    rhs: one.coeff(i).numer().clone(),
                }),
            };
        }
    }
    VerificationReport::pass("euler-reciprocal", range)
}

/// The named suites, in the canonical execution and report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    QkSums,
    ClosedForms,
    GfVsClosed,
    FibMultinomial,
    Fine,
    KqBound,
    QDifference,
    Proposition,
    SRecurrence,
    FibBinomial,
    EulerReciprocal,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::QkSums,
        Suite::ClosedForms,
        Suite::GfVsClosed,
        Suite::FibMultinomial,
        Suite::Fine,
        Suite::KqBound,
        Suite::QDifference,
        Suite::Proposition,
        Suite::SRecurrence,
        Suite::FibBinomial,
        Suite::EulerReciprocal,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::QkSums => "qk-sums",
            Suite::ClosedForms => "closed-forms",
            Suite::GfVsClosed => "gf-vs-closed",
            Suite::FibMultinomial => "fib-multinomial",
            Suite::Fine => "fine",
            Suite::KqBound => "kq-bound",
            Suite::QDifference => "q-difference",
            Suite::Proposition => "proposition",
            Suite::SRecurrence => "s-recurrence",
            Suite::FibBinomial => "fib-binomial",
            Suite::EulerReciprocal => "euler-reciprocal",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// (default max_n, default max_k if the suite has a k grid).
    pub fn defaults(&self) -> (u64, Option<u64>) {
        match self {
            Suite::QkSums => (100, None),
            Suite::ClosedForms => (100, Some(32)),
            Suite::GfVsClosed => (500, None),
            Suite::FibMultinomial => (60, None),
            Suite::Fine => (40, None),
            Suite::KqBound => (100, Some(8)),
            Suite::QDifference => (1000, None),
            Suite::Proposition => (1000, Some(10)),
            Suite::SRecurrence => (200, Some(20)),
            Suite::FibBinomial => (500, Some(10)),
            Suite::EulerReciprocal => (1000, None),
        }
    }
}

/// Run one suite with optional grid overrides (overrides replace the
/// defaults exactly). `shared` lets callers reuse a prebuilt brute-force
/// QTable; it is used only when its size matches the requested grid.
pub fn run_suite(
    suite: Suite,
    max_n: Option<u64>,
    max_k: Option<u64>,
    shared: Option<&QTable>,
) -> VerificationReport {
    let (def_n, def_k) = suite.defaults();
    let n = max_n.unwrap_or(def_n);
    let k = max_k.or(def_k).unwrap_or(0);
    let needs_table = matches!(suite, Suite::QkSums | Suite::ClosedForms | Suite::KqBound);
    let local_table;
    let table: Option<&QTable> = if needs_table {
        match shared {
            Some(t) if t.max_n() == n => Some(t),
            _ => {
                local_table = QTable::build(n);
                Some(&local_table)
            }
        }
    } else {
        None
    };
    match suite {
        Suite::QkSums => {
            let qc = QCounts::up_to(n as usize);
            let mut fib = FibCache::new();
            check_qk_sums(table.unwrap(), &qc, &mut fib)
        }
        Suite::ClosedForms => check_closed_forms(table.unwrap(), k),
        Suite::GfVsClosed => check_gf_vs_closed(n),
        Suite::FibMultinomial => {
            let mut fib = FibCache::new();
            check_fib_multinomial(n, &mut fib)
        }
        Suite::Fine => check_fine(n),
        Suite::KqBound => {
            let qc = QCounts::up_to(n as usize);
            let mut fib = FibCache::new();
            check_kq_bound(table.unwrap(), &qc, &mut fib, k)
        }
        Suite::QDifference => check_q_difference(n),
        Suite::Proposition => check_proposition(k, n),
        Suite::SRecurrence => check_s_recurrence(k, n),
        Suite::FibBinomial => check_fib_binomial(k, n),
        Suite::EulerReciprocal => check_euler_reciprocal(n),
    }
}

/// Run every suite, sharing one brute-force table between the suites
/// that need it. Overrides CAP each suite's default grid rather than
/// replace it, so a small --max-n shrinks every scan and a huge one
/// cannot blow up the cheap suites' bounds.
pub fn run_all(max_n: Option<u64>, max_k: Option<u64>) -> Vec<VerificationReport> {
    let cap = |def: u64, o: Option<u64>| o.map_or(def, |v| def.min(v));
    let table = QTable::build(cap(100, max_n));
    Suite::ALL
        .iter()
        .map(|&s| {
            let (def_n, def_k) = s.defaults();
            let n = Some(cap(def_n, max_n));
            let k = def_k.map(|dk| cap(dk, max_k));
            run_suite(s, n, k, Some(&table))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    #[test]
    fn s_values_examples() {
        let qc = QCounts::up_to(20);
        // q(3) + 2 q(2) + q(1) = 2 + 2 + 1
        assert_eq!(compute_s(SVariant::QOnly, 2, 5, &qc), BigInt::from(5));
        // k = 0 collapses to q(n)
        assert_eq!(compute_s(SVariant::QOnly, 0, 7, &qc), qc.q(7));
        // k=1, n=3: q(2) + q(1) = 2 = F_3
        assert_eq!(compute_s(SVariant::QOnly, 1, 3, &qc), BigInt::from(2));
    }

    #[test]
    fn s_weights_range() {
        let qc = QCounts::up_to(30);
        let w = SWeights::compute(SVariant::QOnly, 2, 30, &qc);
        for n in 0..=30u64 {
            assert_eq!(w.value(n), &compute_s(SVariant::QOnly, 2, n, &qc));
        }
        assert_eq!(w.max_n(), 30);
    }

    #[test]
    fn small_suites_pass() {
        let table = QTable::build(30);
        let qc = QCounts::up_to(30);
        let mut fib = FibCache::new();
        assert!(check_qk_sums(&table, &qc, &mut fib).passed());
        assert!(check_closed_forms(&table, 30).passed());
        assert!(check_fib_multinomial(25, &mut fib).passed());
        assert!(check_fine(12).passed());
        assert!(check_kq_bound(&table, &qc, &mut fib, 5).passed());
        assert!(check_q_difference(200).passed());
        assert!(check_proposition(5, 200).passed());
        assert!(check_s_recurrence(8, 50).passed());
        assert!(check_fib_binomial(6, 100).passed());
        assert!(check_euler_reciprocal(150).passed());
        assert!(check_gf_vs_closed(60).passed());
    }

    #[test]
    fn counterexample_reporting_shape() {
        // a deliberately wrong scan: claim q(n) = 1 for all n
        let qc = QCounts::up_to(10);
        let report = scan(
            "demo",
            "n <= 10".into(),
            (1..=10u64).map(|n| (n, 0)),
            |n, _| (qc.q(n as i64), BigInt::one()),
            |l, r| l == r,
        );
        let c = report.counterexample.as_ref().expect("q(3) = 2 breaks it");
        assert_eq!(c.n, 3);
        assert_eq!(c.lhs, BigInt::from(2));
        assert!(report.to_string().contains("FAIL at n=3"));
        let good = VerificationReport::pass("demo", "n <= 10".into());
        assert!(good.to_string().contains("PASS"));
    }

    #[test]
    fn suite_lookup_and_defaults() {
        assert_eq!(Suite::from_name("q-difference"), Some(Suite::QDifference));
        assert_eq!(Suite::from_name("nope"), None);
        assert_eq!(Suite::Proposition.defaults(), (1000, Some(10)));
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
    }
}

//! Partitions into odd parts, multinomial coefficients over them, and the
//! counting functions q(n), tau(n), Q_k(n) in both brute-force and
//! closed-form evaluation.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::genfun::pochhammer_neg_ints;

/// A partition of n into odd parts, stored as the multiplicity vector
/// (t_1, t_2, ..., t_m) where t_i counts the part 2i - 1. Trailing zeros
/// are trimmed; interior zeros are meaningful.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OddPartition {
    multiplicities: Vec<u64>,
}

impl OddPartition {
    pub fn from_multiplicities(mut multiplicities: Vec<u64>) -> Self {
        while multiplicities.last() == Some(&0) {
            multiplicities.pop();
        }
        OddPartition { multiplicities }
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// n = sum of (2i - 1) * t_i.
    pub fn weight(&self) -> u64 {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, t)| (2 * i as u64 + 1) * t)
            .sum()
    }

    /// Number of parts k = sum of t_i.
    pub fn num_parts(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    /// The multinomial coefficient k!/(t_1! t_2! ... t_m!).
    pub fn multinomial(&self) -> BigInt {
        multinomial_of_multiplicities(self.multiplicities.iter().copied())
    }
}

impl fmt::Display for OddPartition {
    /// e.g. `{1^3, 3}` for 1+1+1+3.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for (i, &t) in self.multiplicities.iter().enumerate() {
            if t == 0 {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}", 2 * i + 1)?;
            if t > 1 {
                write!(f, "^{t}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Multinomial coefficient (sum t_i)!/prod t_i!, with exact integral
/// intermediates (zero multiplicities contribute nothing).
fn multinomial_of_multiplicities(mults: impl Iterator<Item = u64>) -> BigInt {
    let nonzero: Vec<BigInt> = mults.filter(|&t| t > 0).map(BigInt::from).collect();
    if nonzero.is_empty() {
        return BigInt::one();
    }
    num::integer::multinomial(&nonzero)
}

/// Lazily yields every partition of n into odd parts exactly once, in
/// descending lexicographic order of multiplicity vectors: all the mass
/// on part 1 first, {(0,...)}-prefixed vectors last. For n = 6 the order
/// is {1^6}, {1^3, 3}, {1, 5}, {3^2}.
pub fn enumerate_odd_partitions(n: u64) -> OddPartitionIter {
    OddPartitionIter {
        stack: Vec::new(),
        remaining: n,
        descending: true,
        done: false,
    }
}

pub struct OddPartitionIter {
    // stack[i] is the chosen multiplicity of part 2i + 1
    stack: Vec<u64>,
    remaining: u64,
    descending: bool,
    done: bool,
}

impl Iterator for OddPartitionIter {
    type Item = OddPartition;

    fn next(&mut self) -> Option<OddPartition> {
        if self.done {
            return None;
        }
        loop {
            if self.descending {
                if self.remaining == 0 {
                    self.descending = false;
                    return Some(OddPartition::from_multiplicities(self.stack.clone()));
                }
                let part = 2 * self.stack.len() as u64 + 1;
                if part > self.remaining {
                    self.descending = false;
                    continue;
                }
                let t = self.remaining / part;
                self.stack.push(t);
                self.remaining -= t * part;
            } else {
                let Some(t) = self.stack.pop() else {
                    self.done = true;
                    return None;
                };
                let part = 2 * self.stack.len() as u64 + 1;
                self.remaining += t * part;
                if t > 0 {
                    self.stack.push(t - 1);
                    self.remaining -= (t - 1) * part;
                    self.descending = true;
                }
            }
        }
    }
}

/// q(0..=max_n) read off the coefficients of prod (1 + x^j), with the
/// usual boundary conventions on the accessor: q(0) = 1, q(n) = 0 for n < 0.
pub struct QCounts {
    q: Vec<BigInt>,
}

impl QCounts {
    pub fn up_to(max_n: usize) -> Self {
        QCounts {
            q: pochhammer_neg_ints(max_n),
        }
    }

    pub fn max_n(&self) -> usize {
        self.q.len() - 1
    }

    /// q(n); 0 for negative n, and q(0) = 1.
    pub fn q(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        let n = n as usize;
        assert!(
            n <= self.max_n(),
            "q({n}) beyond table size {}",
            self.max_n()
        );
        self.q[n].clone()
    }
}

/// Divisor-count data for one n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisorInfo {
    pub n: u64,
    pub tau: u64,
    pub odd_divisor_count: u64,
}

impl DivisorInfo {
    pub fn for_n(n: u64) -> Self {
        assert!(n >= 1);
        let mut tau = 0;
        let mut odd = 0;
        let mut d = 1;
        while d * d <= n {
            if n.is_multiple_of(d) {
                let e = n / d;
                tau += if e == d { 1 } else { 2 };
                odd += u64::from(d % 2 == 1) + u64::from(e != d && e % 2 == 1);
            }
            d += 1;
        }
        DivisorInfo {
            n,
            tau,
            odd_divisor_count: odd,
        }
    }
}

/// Q_1(n): the number of odd divisors of n.
pub fn q1_closed(n: u64) -> u64 {
    DivisorInfo::for_n(n).odd_divisor_count
}

/// Q_2(n): 0 for odd n, floor(n/4) for even n.
pub fn q2_closed(n: u64) -> u64 {
    if n % 2 == 1 {
        0
    } else {
        n / 4
    }
}

fn ceil_half(a: u64) -> u64 {
    a.div_ceil(2)
}

/// Q_{p^r}(n) in closed form for a prime power p^r > 2.
///
/// Odd p: zero at even n; at odd n the value is
/// ceil((1/2) floor((n-1)/(p^r-1))) minus 1 exactly when p^r divides n.
/// p = 2 (r > 1): zero at odd n; at even n the same main term, minus
/// floor(n/2^r) mod 2 when 2^r divides n.
pub fn q_pr_closed(pr: u64, n: u64) -> Result<u64> {
    let Some((p, _r)) = is_prime_power(pr) else {
        return Err(Error::NotAPrimePower(pr));
    };
    if pr == 2 {
        return Err(Error::UnsupportedCase(
            "no separate closed form at p^r = 2; use q2_closed".into(),
        ));
    }
    assert!(n >= 1);
    let active_parity = if p == 2 { 0 } else { 1 };
    if n % 2 != active_parity {
        return Ok(0);
    }
    let main = ceil_half((n - 1) / (pr - 1));
    let correction = if !n.is_multiple_of(pr) {
        0
    } else if p == 2 {
        (n / pr) % 2
    } else {
        1
    };
    Ok(main - correction)
}

/// (p, r) if m = p^r with p prime and r >= 1.
pub fn is_prime_power(m: u64) -> Option<(u64, u32)> {
    if m < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut rest = m;
            let mut r = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                r += 1;
            }
            return (rest == 1).then_some((p, r));
        }
        p += 1;
    }
    Some((m, 1))
}

/// The set P: prime powers strictly greater than 2, up to a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePowerSet {
    bound: u64,
    elements: Vec<u64>,
}

impl PrimePowerSet {
    pub fn empty() -> Self {
        PrimePowerSet {
            bound: 0,
            elements: vec![],
        }
    }

    /// Validated, sorted, deduplicated subset of P.
    pub fn from_elements(elements: &[u64]) -> Result<Self> {
        let mut out = Vec::with_capacity(elements.len());
        for &m in elements {
            if is_prime_power(m).is_none() {
                return Err(Error::NotAPrimePower(m));
            }
            if m == 2 {
                return Err(Error::UnsupportedCase("2 is not a member of P".into()));
            }
            out.push(m);
        }
        out.sort_unstable();
        out.dedup();
        Ok(PrimePowerSet {
            bound: out.last().copied().unwrap_or(0),
            elements: out,
        })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn contains(&self, m: u64) -> bool {
        self.elements.binary_search(&m).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// All of P up to and including `bound`.
pub fn prime_powers_up_to(bound: u64) -> PrimePowerSet {
    let elements = (3..=bound)
        .filter(|&m| is_prime_power(m).is_some())
        .collect();
    PrimePowerSet { bound, elements }
}

/// How a table entry was obtained or confirmed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Brute,
    ClosedForm,
}

/// One row of the Q table: the complete histogram of multinomial values
/// over the odd partitions of n. Keys absent from the map have count 0.
#[derive(Clone, Debug)]
pub struct QRow {
    n: u64,
    entries: BTreeMap<BigInt, (BigInt, Provenance)>,
}

impl QRow {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Q_k(n); 0 when no partition attains multinomial k.
    pub fn q_k(&self, k: &BigInt) -> BigInt {
        self.entries
            .get(k)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn q_k_u64(&self, k: u64) -> BigInt {
        self.q_k(&BigInt::from(k))
    }

    pub fn provenance(&self, k: &BigInt) -> Option<Provenance> {
        self.entries.get(k).map(|&(_, p)| p)
    }

    /// (k, Q_k(n), provenance) in ascending k.
    pub fn iter(&self) -> impl Iterator<Item = (&BigInt, &BigInt, Provenance)> {
        self.entries.iter().map(|(k, (c, p))| (k, c, *p))
    }

    /// Sum of Q_k(n) over all k: should equal q(n).
    pub fn total(&self) -> BigInt {
        self.entries.values().map(|(c, _)| c).sum()
    }

    /// Sum of k * Q_k(n) over all k: should equal F_n.
    pub fn weighted_total(&self) -> BigInt {
        self.entries.iter().map(|(k, (c, _))| k * c).sum()
    }
}

/// Complete histogram {k -> Q_k(n)} by enumerating all odd partitions of
/// n and bucketing their multinomial values.
pub fn qk_brute(n: u64) -> QRow {
    let mut entries: BTreeMap<BigInt, (BigInt, Provenance)> = BTreeMap::new();
    for p in enumerate_odd_partitions(n) {
        let m = p.multinomial();
        entries
            .entry(m)
            .or_insert_with(|| (BigInt::zero(), Provenance::Brute))
            .0 += 1;
    }
    QRow { n, entries }
}

/// Q_k(n) rows for n = 1..=max_n with per-entry provenance.
pub struct QTable {
    rows: Vec<QRow>,
}

impl QTable {
    pub fn build(max_n: u64) -> Self {
        QTable {
            rows: (1..=max_n).map(qk_brute).collect(),
        }
    }

    pub fn max_n(&self) -> u64 {
        self.rows.len() as u64
    }

    pub fn row(&self, n: u64) -> &QRow {
        assert!(n >= 1 && n <= self.max_n(), "row {n} out of range");
        &self.rows[(n - 1) as usize]
    }

    pub fn rows(&self) -> impl Iterator<Item = &QRow> {
        self.rows.iter()
    }

    /// Check every brute entry with a known closed form (k = 1, k = 2,
    /// and prime powers 2 < p^r <= n) and mark it closed-form confirmed.
    /// Any disagreement aborts with the offending (n, k).
    pub fn annotate_closed_forms(&mut self) -> Result<()> {
        for row in &mut self.rows {
            let n = row.n;
            let mut confirm = |k: u64, closed: u64| -> Result<()> {
                let key = BigInt::from(k);
                let brute = row
                    .entries
                    .get(&key)
                    .map(|(c, _)| c.clone())
                    .unwrap_or_else(BigInt::zero);
                if brute != BigInt::from(closed) {
                    return Err(Error::ClosedFormMismatch { n, k });
                }
                if let Some(entry) = row.entries.get_mut(&key) {
                    entry.1 = Provenance::ClosedForm;
                }
                Ok(())
            };
            confirm(1, q1_closed(n))?;
            confirm(2, q2_closed(n))?;
            for &pr in prime_powers_up_to(n).elements() {
                confirm(pr, q_pr_closed(pr, n)?)?;
            }
        }
        Ok(())
    }
}

/// Sum of multinomial coefficients over all odd partitions of n; equals
/// F_n for every n >= 1.
pub fn fib_multinomial_sum(n: u64) -> BigInt {
    enumerate_odd_partitions(n).map(|p| p.multinomial()).sum()
}

/// Sum of multinomial coefficients over all partitions of n into exactly
/// k parts of any size.
pub fn sum_multinomials_exact_parts(n: u64, k: u64) -> BigInt {
    fn walk(rem: u64, left: u64, v: u64, mults: &mut Vec<u64>, acc: &mut BigInt) {
        if left == 0 {
            if rem == 0 {
                *acc += multinomial_of_multiplicities(mults.iter().copied());
            }
            return;
        }
        if v == 0 {
            return;
        }
        if v == 1 {
            if rem == left {
                mults.push(left);
                *acc += multinomial_of_multiplicities(mults.iter().copied());
                mults.pop();
            }
            return;
        }
        for c in (0..=left.min(rem / v)).rev() {
            let rem2 = rem - c * v;
            let left2 = left - c;
            if rem2 < left2 {
                // parts are >= 1 each; a smaller c only grows rem2
                continue;
            }
            if rem2 > left2 * (v - 1) {
                // remaining parts are <= v - 1 each; smaller c is worse
                break;
            }
            if c > 0 {
                mults.push(c);
            }
            walk(rem2, left2, v - 1, mults, acc);
            if c > 0 {
                mults.pop();
            }
        }
    }
    let mut acc = BigInt::zero();
    if k >= 1 && n >= k {
        walk(n, k, n - k + 1, &mut Vec::new(), &mut acc);
    }
    acc
}

/// Fine's identity at (n, k): the binomial C(n-1; k-1, n-k) equals the
/// sum of multinomials over partitions of n into exactly k parts.
pub fn verify_fine(n: u64, k: u64) -> bool {
    assert!(n >= 1 && k >= 1);
    let lhs = num::integer::binomial(BigInt::from(n - 1), BigInt::from(k - 1));
    lhs == sum_multinomials_exact_parts(n, k)
}

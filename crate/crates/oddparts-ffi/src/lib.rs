//! C ABI for the oddparts library.
//!
//! Conventions: every fallible call returns `OddpartsStatus` and writes
//! its result through out-pointers only on `Ok`. Values that can exceed
//! 64 bits travel as NUL-terminated decimal or `p/q` strings allocated
//! here; release them with `oddparts_string_free`. Handles returned by
//! the `*_build`/`*_new` constructors are opaque and released with their
//! matching `*_free`. Passing a handle to any function after freeing it,
//! or freeing it twice, is undefined behavior, as in any C API. All
//! functions are panic-safe: a caught panic reports `InternalError`.
//!
//! The header `include/oddparts.h` is generated by the build script and
//! committed alongside the source.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use oddparts::bounds::{
    distinct_product_partial, enclose_distinct_product, enclose_odd_divisor_sum, eval_family,
};
use oddparts::error::Error;
use oddparts::fibonacci::fib;
use oddparts::genfun::{lambert_odd_divisors, odd_pochhammer, pochhammer_neg, prime_power_gf};
use oddparts::partitions::{q1_closed, q2_closed, q_pr_closed, PrimePowerSet, QCounts, QTable};
use oddparts::rational::{EvalPoint, ExactRational};
use oddparts::series::TruncatedSeries;
use oddparts::verify::{run_suite, Suite};

/// Result of every fallible call in this ABI.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OddpartsStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A string argument did not parse (rational, family, suite name).
    ParseError = 3,
    /// The evaluation point violates the required domain predicate.
    DomainError = 4,
    /// The argument must be a prime power.
    NotAPrimePower = 5,
    /// The requested case has no closed form (for example p^r = 2).
    UnsupportedCase = 6,
    /// The family is not defined at the requested index k.
    UnsupportedK = 7,
    /// The tail estimate diverges at this truncation depth.
    TailDiverges = 8,
    /// An index is outside the object's range, or a count does not fit
    /// in 64 bits.
    OutOfRange = 9,
    /// A library invariant failed; not a valid input condition.
    InternalError = 10,
}

fn status_of(e: &Error) -> OddpartsStatus {
    match e {
        Error::ParseError(_) => OddpartsStatus::ParseError,
        Error::DomainError(_) => OddpartsStatus::DomainError,
        Error::NotAPrimePower(_) => OddpartsStatus::NotAPrimePower,
        Error::UnsupportedCase(_) => OddpartsStatus::UnsupportedCase,
        Error::UnsupportedK(_) => OddpartsStatus::UnsupportedK,
        Error::TailDiverges => OddpartsStatus::TailDiverges,
        _ => OddpartsStatus::InternalError,
    }
}

/// Static description of a status code; never free the result.
#[no_mangle]
pub extern "C" fn oddparts_status_describe(status: OddpartsStatus) -> *const c_char {
    let text: &'static [u8] = match status {
        OddpartsStatus::Ok => b"ok\0",
        OddpartsStatus::NullPointer => b"required pointer argument was NULL\0",
        OddpartsStatus::InvalidUtf8 => b"string argument was not valid UTF-8\0",
        OddpartsStatus::ParseError => b"string argument did not parse\0",
        OddpartsStatus::DomainError => b"evaluation point outside the required domain\0",
        OddpartsStatus::NotAPrimePower => b"argument is not a prime power\0",
        OddpartsStatus::UnsupportedCase => b"no closed form for the requested case\0",
        OddpartsStatus::UnsupportedK => b"family is not defined at the requested k\0",
        OddpartsStatus::TailDiverges => b"tail bound diverges at this truncation depth\0",
        OddpartsStatus::OutOfRange => b"index out of range or count exceeds 64 bits\0",
        OddpartsStatus::InternalError => b"internal error\0",
    };
    text.as_ptr() as *const c_char
}

/// Release a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be a pointer previously returned through an out-parameter of
/// this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oddparts_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn write_string(out: *mut *mut c_char, value: String) -> OddpartsStatus {
    match CString::new(value) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            OddpartsStatus::Ok
        }
        Err(_) => OddpartsStatus::InternalError,
    }
}

fn guarded(body: impl FnOnce() -> OddpartsStatus) -> OddpartsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => OddpartsStatus::InternalError,
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, OddpartsStatus> {
    if s.is_null() {
        return Err(OddpartsStatus::NullPointer);
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| OddpartsStatus::InvalidUtf8)
}

/// q(n), the number of partitions of n into odd parts, as a decimal
/// string (the value outgrows 64 bits near n = 900).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_q_string(n: u64, out: *mut *mut c_char) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    guarded(|| {
        let qc = QCounts::up_to(n as usize);
        write_string(out, qc.q(n as i64).to_string())
    })
}

/// F_n with F_0 = 0, F_1 = 1, as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_fibonacci_string(
    n: u64,
    out: *mut *mut c_char,
) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    guarded(|| write_string(out, fib(n as usize).to_string()))
}

/// Q_1(n): the number of odd divisors of n (0 when n = 0).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_q1(n: u64, out: *mut u64) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    guarded(|| {
        *out = q1_closed(n);
        OddpartsStatus::Ok
    })
}

/// Q_2(n) in closed form: 0 for odd n, floor(n/4) for even n.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_q2(n: u64, out: *mut u64) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    guarded(|| {
        *out = q2_closed(n);
        OddpartsStatus::Ok
    })
}

/// Q_{p^r}(n) in closed form, for prime powers p^r except 2.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_q_prime_power(pr: u64, n: u64, out: *mut u64) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    guarded(|| match q_pr_closed(pr, n) {
        Ok(v) => {
            *out = v;
            OddpartsStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Opaque handle: the brute-force Q_k(n) histogram table.
pub struct OddpartsQTable(QTable);

/// Build the table for n = 1..=max_n by enumerating every odd partition
/// of every n; cost grows rapidly, n <= 100 stays comfortable. When
/// `annotate` is set, every entry with a known closed form is
/// cross-checked against it (InternalError on disagreement).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_qtable_build(
    max_n: u64,
    annotate: bool,
    out: *mut *mut OddpartsQTable,
) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    if max_n == 0 {
        return OddpartsStatus::OutOfRange;
    }
    guarded(|| {
        let mut table = QTable::build(max_n);
        if annotate && table.annotate_closed_forms().is_err() {
            return OddpartsStatus::InternalError;
        }
        *out = Box::into_raw(Box::new(OddpartsQTable(table)));
        OddpartsStatus::Ok
    })
}

/// Release a table handle. NULL is a no-op.
///
/// # Safety
/// `table` must come from `oddparts_qtable_build` and not be used after.
#[no_mangle]
pub unsafe extern "C" fn oddparts_qtable_free(table: *mut OddpartsQTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Largest n covered by the table; 0 if `table` is NULL.
///
/// # Safety
/// `table` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn oddparts_qtable_max_n(table: *const OddpartsQTable) -> u64 {
    if table.is_null() {
        return 0;
    }
    (*table).0.max_n()
}

/// Q_k(n) from the table. OutOfRange when n is not a table row.
///
/// # Safety
/// `table` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_qtable_entry(
    table: *const OddpartsQTable,
    n: u64,
    k: u64,
    out: *mut u64,
) -> OddpartsStatus {
    if table.is_null() || out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    let table = &(*table).0;
    if n == 0 || n > table.max_n() {
        return OddpartsStatus::OutOfRange;
    }
    guarded(|| match u64::try_from(&table.row(n).q_k_u64(k)) {
        Ok(v) => {
            *out = v;
            OddpartsStatus::Ok
        }
        Err(_) => OddpartsStatus::OutOfRange,
    })
}

/// q(n) as the row total of the table. OutOfRange when n is not a row
/// or the count exceeds 64 bits.
///
/// # Safety
/// `table` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_qtable_q(
    table: *const OddpartsQTable,
    n: u64,
    out: *mut u64,
) -> OddpartsStatus {
    if table.is_null() || out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    let table = &(*table).0;
    if n == 0 || n > table.max_n() {
        return OddpartsStatus::OutOfRange;
    }
    guarded(|| match u64::try_from(&table.row(n).total()) {
        Ok(v) => {
            *out = v;
            OddpartsStatus::Ok
        }
        Err(_) => OddpartsStatus::OutOfRange,
    })
}

/// Opaque handle: a power series truncated at a fixed order, with exact
/// rational coefficients.
pub struct OddpartsSeries(TruncatedSeries);

unsafe fn emit_series(out: *mut *mut OddpartsSeries, series: TruncatedSeries) -> OddpartsStatus {
    *out = Box::into_raw(Box::new(OddpartsSeries(series)));
    OddpartsStatus::Ok
}

/// prod_{j>=1} (1 + x^j) through x^order: the coefficients are q(n).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_series_pochhammer(
    order: u64,
    out: *mut *mut OddpartsSeries,
) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    guarded(|| emit_series(out, pochhammer_neg(order as usize)))
}

/// prod_{j>=0} (1 - x^{2j+1}) through x^order: the reciprocal of the
/// previous series.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_series_odd_pochhammer(
    order: u64,
    out: *mut *mut OddpartsSeries,
) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    guarded(|| emit_series(out, odd_pochhammer(order as usize)))
}

/// sum_{m>=1} x^m/(1 - x^{2m}) through x^order: coefficient n counts the
/// odd divisors of n.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_series_lambert(
    order: u64,
    out: *mut *mut OddpartsSeries,
) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    guarded(|| emit_series(out, lambert_odd_divisors(order as usize)))
}

/// The Q_{p^r} generating function through x^order, prime powers > 2.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_series_prime_power_gf(
    pr: u64,
    order: u64,
    out: *mut *mut OddpartsSeries,
) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    guarded(|| match prime_power_gf(pr, order as usize) {
        Ok(series) => emit_series(out, series),
        Err(e) => status_of(&e),
    })
}

/// Release a series handle. NULL is a no-op.
///
/// # Safety
/// `series` must come from a series constructor and not be used after.
#[no_mangle]
pub unsafe extern "C" fn oddparts_series_free(series: *mut OddpartsSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// Truncation order of the series; 0 if `series` is NULL.
///
/// # Safety
/// `series` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn oddparts_series_order(series: *const OddpartsSeries) -> u64 {
    if series.is_null() {
        return 0;
    }
    (*series).0.order() as u64
}

/// Coefficient of x^n as an exact `p/q` string (`p` alone when the
/// coefficient is an integer). OutOfRange beyond the truncation order.
///
/// # Safety
/// `series` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_series_coeff(
    series: *const OddpartsSeries,
    n: u64,
    out: *mut *mut c_char,
) -> OddpartsStatus {
    if series.is_null() || out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    let series = &(*series).0;
    if n as usize > series.order() {
        return OddpartsStatus::OutOfRange;
    }
    guarded(|| write_string(out, series.coeff(n as usize).to_string()))
}

/// Evaluate one bound family member at the exact rational `x` ("p/q").
/// `k` indexes the Ak/Bk/Bk-closed/Rk/mixed2/mixed3 families and must be
/// negative for the corollaries; `pset` is a comma-separated subset of P
/// for the corollaries (NULL means {3}) and is ignored otherwise. The
/// result is written as an exact `p/q` string.
///
/// # Safety
/// `family` and `x` must be NUL-terminated strings; `pset` must be one
/// or NULL; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_bound(
    family: *const c_char,
    k: i64,
    x: *const c_char,
    pset: *const c_char,
    out: *mut *mut c_char,
) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    let family = match read_str(family) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let x = match read_str(x) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let pset = if pset.is_null() {
        "3"
    } else {
        match read_str(pset) {
            Ok(s) => s,
            Err(status) => return status,
        }
    };
    guarded(|| {
        let x: ExactRational = match x.parse() {
            Ok(v) => v,
            Err(_) => return OddpartsStatus::ParseError,
        };
        let mut elems = Vec::new();
        for part in pset.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            match part.parse::<u64>() {
                Ok(m) => elems.push(m),
                Err(_) => return OddpartsStatus::ParseError,
            }
        }
        let subset = match PrimePowerSet::from_elements(&elems) {
            Ok(s) => s,
            Err(e) => return status_of(&e),
        };
        let k = if k < 0 { None } else { Some(k as u64) };
        match eval_family(family, k, x, &subset) {
            Ok(result) => write_string(out, result.value.to_string()),
            Err(e) => status_of(&e),
        }
    })
}

unsafe fn enclose_common(
    x: *const c_char,
    terms: u64,
    out_lo: *mut *mut c_char,
    out_hi: *mut *mut c_char,
    product: bool,
) -> OddpartsStatus {
    if out_lo.is_null() || out_hi.is_null() {
        return OddpartsStatus::NullPointer;
    }
    let x = match read_str(x) {
        Ok(s) => s,
        Err(status) => return status,
    };
    guarded(|| {
        let x: ExactRational = match x.parse() {
            Ok(v) => v,
            Err(_) => return OddpartsStatus::ParseError,
        };
        let point = match EvalPoint::unit_interval(x) {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        let enclosure = if product {
            enclose_distinct_product(&point, terms)
        } else {
            enclose_odd_divisor_sum(&point, terms)
        };
        match enclosure {
            Ok(e) => {
                let status = write_string(out_lo, e.lo.to_string());
                if status != OddpartsStatus::Ok {
                    return status;
                }
                let status = write_string(out_hi, e.hi.to_string());
                if status != OddpartsStatus::Ok {
                    oddparts_string_free(*out_lo);
                    *out_lo = ptr::null_mut();
                }
                status
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Enclose sum_{n>=1} x^n/(1-x^{2n}) with `terms` exact terms plus a
/// certified tail bound: the sum lies in [lo, hi].
///
/// # Safety
/// `x` must be a NUL-terminated string; the out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn oddparts_enclose_sum(
    x: *const c_char,
    terms: u64,
    out_lo: *mut *mut c_char,
    out_hi: *mut *mut c_char,
) -> OddpartsStatus {
    enclose_common(x, terms, out_lo, out_hi, false)
}

/// Enclose prod_{n>=1} (1 + x^n). TailDiverges when the tail estimate
/// does not apply at this depth; `oddparts_product_partial` still gives
/// the certified lower bound then.
///
/// # Safety
/// `x` must be a NUL-terminated string; the out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn oddparts_enclose_product(
    x: *const c_char,
    terms: u64,
    out_lo: *mut *mut c_char,
    out_hi: *mut *mut c_char,
) -> OddpartsStatus {
    enclose_common(x, terms, out_lo, out_hi, true)
}

/// The exact partial product prod_{n=1}^{terms} (1 + x^n), always a
/// valid lower bound on the infinite product.
///
/// # Safety
/// `x` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oddparts_product_partial(
    x: *const c_char,
    terms: u64,
    out: *mut *mut c_char,
) -> OddpartsStatus {
    if out.is_null() {
        return OddpartsStatus::NullPointer;
    }
    let x = match read_str(x) {
        Ok(s) => s,
        Err(status) => return status,
    };
    guarded(|| {
        let x: ExactRational = match x.parse() {
            Ok(v) => v,
            Err(_) => return OddpartsStatus::ParseError,
        };
        let point = match EvalPoint::unit_interval(x) {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        match distinct_product_partial(&point, terms) {
            Ok(v) => write_string(out, v.to_string()),
            Err(e) => status_of(&e),
        }
    })
}

/// Run one verification suite by name ("qk-sums", "fine", ...). Zero for
/// `max_n`/`max_k` keeps that suite default. On Ok, `out_passed` tells
/// whether the scan found no counterexample.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out_passed` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oddparts_verify_suite(
    name: *const c_char,
    max_n: u64,
    max_k: u64,
    out_passed: *mut bool,
) -> OddpartsStatus {
    if out_passed.is_null() {
        return OddpartsStatus::NullPointer;
    }
    let name = match read_str(name) {
        Ok(s) => s,
        Err(status) => return status,
    };
    guarded(|| {
        let suite = match Suite::from_name(name) {
            Some(s) => s,
            None => return OddpartsStatus::ParseError,
        };
        let n = if max_n == 0 { None } else { Some(max_n) };
        let k = if max_k == 0 { None } else { Some(max_k) };
        let report = run_suite(suite, n, k, None);
        *out_passed = report.passed();
        OddpartsStatus::Ok
    })
}

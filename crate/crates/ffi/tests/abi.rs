use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ordalab_ffi::*;

fn last_error() -> String {
    let p = ordalab_last_error();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { ordalab_string_free(p) };
    s
}

fn check(config: &str) -> (OrdalabStatus, *mut OrdalabReport) {
    let c = CString::new(config).unwrap();
    let mut report = ptr::null_mut();
    let status = unsafe { ordalab_check(c.as_ptr(), &mut report) };
    (status, report)
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(ordalab_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn structure_keys_round_trip() {
    let n = ordalab_structure_count();
    assert_eq!(n, 12);
    let mut keys = Vec::new();
    for i in 0..n {
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { ordalab_structure_key(i, &mut out) }, OrdalabStatus::Ok);
        keys.push(take_string(out));
    }
    assert!(keys.iter().any(|k| k == "Z(X)"));
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ordalab_structure_key(n, &mut out) }, OrdalabStatus::OutOfRange);
    assert!(out.is_null());
    assert!(last_error().contains("index 12"));
}

#[test]
fn check_report_matches_exit_contract() {
    let (status, report) = check(r#"{"structure": "Q", "suite": "density"}"#);
    assert_eq!(status, OrdalabStatus::Ok);
    assert!(ordalab_last_error().is_null());
    unsafe {
        assert_eq!(ordalab_report_exit_code(report), 0);
        let len = ordalab_report_len(report);
        assert!(len > 0);
        let json = CStr::from_ptr(ordalab_report_json(report)).to_str().unwrap();
        assert_eq!(json.lines().count(), len);
        let mut st = OrdalabRecordStatus::Violation;
        assert_eq!(ordalab_report_record_status(report, 0, &mut st), OrdalabStatus::Ok);
        assert_eq!(st, OrdalabRecordStatus::Pass);
        assert_eq!(ordalab_report_record_status(report, len, &mut st), OrdalabStatus::OutOfRange);
        ordalab_report_free(report);
    }

    let (status, report) = check(r#"{"structure": "Z", "suite": "density"}"#);
    assert_eq!(status, OrdalabStatus::Ok);
    assert_eq!(unsafe { ordalab_report_exit_code(report) }, 3);
    unsafe { ordalab_report_free(report) };

    let (status, report) = check(r#"{"structure": "Lex", "suite": "metric"}"#);
    assert_eq!(status, OrdalabStatus::Ok);
    assert_eq!(unsafe { ordalab_report_exit_code(report) }, 1);
    unsafe { ordalab_report_free(report) };
}

#[test]
fn check_errors_map_to_status_codes() {
    let (status, report) = check(r#"{"structure": "Nope", "suite": "density"}"#);
    assert_eq!(status, OrdalabStatus::Unknown);
    assert!(report.is_null());
    assert!(last_error().contains("Nope"));

    let (status, _) = check(r#"{"structure": "Q", "suite": "density", "grid": ["1/+"]}"#);
    assert_eq!(status, OrdalabStatus::Parse);

    let (status, _) = check("not json");
    assert_eq!(status, OrdalabStatus::InvalidArgument);

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { ordalab_check(ptr::null(), &mut report) }, OrdalabStatus::NullPointer);
    let c = CString::new(r#"{"structure": "Q", "suite": "density"}"#).unwrap();
    assert_eq!(unsafe { ordalab_check(c.as_ptr(), ptr::null_mut()) }, OrdalabStatus::NullPointer);

    let bad = [0xffu8, 0];
    assert_eq!(unsafe { ordalab_check(bad.as_ptr().cast(), &mut report) }, OrdalabStatus::InvalidUtf8);
}

#[test]
fn series_and_algebra_reports() {
    let expr = CString::new("1/2^n").unwrap();
    let key = CString::new("Q").unwrap();
    let mut report = ptr::null_mut();
    let status = unsafe { ordalab_series(expr.as_ptr(), key.as_ptr(), OrdalabSeriesTest::Condensation, 64, &mut report) };
    assert_eq!(status, OrdalabStatus::Ok);
    assert_eq!(unsafe { ordalab_report_exit_code(report) }, 0);
    unsafe { ordalab_report_free(report) };

    let table = include_str!("../../core/data/algebras/quaternions.json");
    let table = CString::new(table).unwrap();
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { ordalab_algebra(table.as_ptr(), 0, true, &mut report) }, OrdalabStatus::Ok);
    let json = unsafe { CStr::from_ptr(ordalab_report_json(report)) }.to_str().unwrap().to_owned();
    assert!(json.contains("H(Q)"));
    assert_eq!(unsafe { ordalab_report_exit_code(report) }, 0);
    unsafe { ordalab_report_free(report) };

    let bad = CString::new(r#"{"n": 2, "gamma": [1, 0, 0]}"#).unwrap();
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { ordalab_algebra(bad.as_ptr(), 0, false, &mut report) }, OrdalabStatus::Dimension);
}

#[test]
fn rationals_and_padic_norms() {
    let parse = |s: &str| {
        let c = CString::new(s).unwrap();
        let mut out = ptr::null_mut();
        let status = unsafe { ordalab_rational_parse(c.as_ptr(), &mut out) };
        (status, out)
    };
    let (status, r) = parse("-12/18");
    assert_eq!(status, OrdalabStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ordalab_rational_to_string(r, &mut s) }, OrdalabStatus::Ok);
    assert_eq!(take_string(s), "-2/3");

    let (mut zero, mut exp) = (true, 0i64);
    // |-2/3|_3 = 3^1, |-2/3|_2 = 2^-1
    assert_eq!(unsafe { ordalab_padic_norm(r, 3, &mut zero, &mut exp) }, OrdalabStatus::Ok);
    assert!(!zero);
    assert_eq!(exp, 1);
    assert_eq!(unsafe { ordalab_padic_norm(r, 2, &mut zero, &mut exp) }, OrdalabStatus::Ok);
    assert_eq!(exp, -1);
    assert_eq!(unsafe { ordalab_padic_norm(r, 4, &mut zero, &mut exp) }, OrdalabStatus::InvalidArgument);
    assert_eq!(unsafe { ordalab_padic_norm(r, 2, ptr::null_mut(), &mut exp) }, OrdalabStatus::NullPointer);
    unsafe { ordalab_rational_free(r) };

    let (status, z) = parse("0");
    assert_eq!(status, OrdalabStatus::Ok);
    assert_eq!(unsafe { ordalab_padic_norm(z, 5, &mut zero, &mut exp) }, OrdalabStatus::Ok);
    assert!(zero);
    unsafe { ordalab_rational_free(z) };

    assert_eq!(parse("1/0").0, OrdalabStatus::Parse);
    assert_eq!(parse("x").0, OrdalabStatus::Parse);
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        assert_eq!(ordalab_report_exit_code(ptr::null()), -1);
        assert_eq!(ordalab_report_len(ptr::null()), 0);
        assert!(ordalab_report_json(ptr::null()).is_null());
        ordalab_report_free(ptr::null_mut());
        ordalab_rational_free(ptr::null_mut());
        ordalab_string_free(ptr::null_mut());
    }
}

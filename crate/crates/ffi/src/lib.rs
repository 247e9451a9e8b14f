//! C ABI for ordalab.
//!
//! Every function returns an [`OrdalabStatus`] or a value with a documented
//! sentinel, never unwinds across the boundary, and records a message for
//! [`ordalab_last_error`] on failure. Handles are opaque and owned by the
//! caller until passed to their `_free` function. Strings returned through
//! `char **` out-parameters are freed with [`ordalab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::str::FromStr;

use num_rational::BigRational;

use ordalab::cli::config::RunConfig;
use ordalab::cli::report::{json_lines, Record, Status};
use ordalab::cli::suites::{run_algebra, run_check, run_series, SeriesTest};
use ordalab::instances::{registry, ValueGroup};
use ordalab::pseudonorm::{padic_norm, AlgebraTable};
use ordalab::Error;

/// Result codes. `ORDALAB_STATUS_OK` is zero; every other value is an error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdalabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Unknown = 5,
    NotPositive = 6,
    Capability = 7,
    Precondition = 8,
    NotInvertible = 9,
    Evaluation = 10,
    Dimension = 11,
    OutOfRange = 12,
    Panic = 13,
}

/// Convergence tests for [`ordalab_series`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdalabSeriesTest {
    Condensation = 0,
    Ratio = 1,
    Alternating = 2,
}

/// Outcome of one check record.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdalabRecordStatus {
    Pass = 0,
    Violation = 1,
    Unverifiable = 2,
}

/// Records of one run and their JSON-lines rendering.
pub struct OrdalabReport {
    records: Vec<Record>,
    json: CString,
}

/// An exact rational number.
pub struct OrdalabRational(BigRational);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(OrdalabStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::NotPositive(_) => OrdalabStatus::NotPositive,
            Error::Capability(_) => OrdalabStatus::Capability,
            Error::InvalidArgument(_) => OrdalabStatus::InvalidArgument,
            Error::Precondition(_) => OrdalabStatus::Precondition,
            Error::NotInvertible(_) => OrdalabStatus::NotInvertible,
            Error::Evaluation(_) => OrdalabStatus::Evaluation,
            Error::Parse { .. } => OrdalabStatus::Parse,
            Error::Dimension { .. } => OrdalabStatus::Dimension,
            Error::Unknown { .. } => OrdalabStatus::Unknown,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Run `f`, catching panics and recording the error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> OrdalabStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OrdalabStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("panic: {msg}"));
            OrdalabStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(OrdalabStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `p` is null or a NUL-terminated string valid for reads.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(OrdalabStatus::InvalidUtf8, format!("{what}: {e}")))
}

/// # Safety
/// `out` is null or valid for a pointer-sized write.
unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior NULs removed").into_raw()
}

fn into_report(records: Vec<Record>) -> *mut OrdalabReport {
    let json = CString::new(json_lines(&records)).expect("JSON has no NUL");
    Box::into_raw(Box::new(OrdalabReport { records, json }))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ordalab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next ordalab call on the same thread.
#[no_mangle]
pub extern "C" fn ordalab_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Free a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or was returned through a `char **` out-parameter of this
/// library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ordalab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of registered structures.
#[no_mangle]
pub extern "C" fn ordalab_structure_count() -> usize {
    catch_unwind(|| registry().len()).unwrap_or(0)
}

/// Registry key of structure `index` as an owned string.
///
/// # Safety
/// `out` is valid for a pointer-sized write.
#[no_mangle]
pub unsafe extern "C" fn ordalab_structure_key(index: usize, out: *mut *mut c_char) -> OrdalabStatus {
    guard(|| {
        let key = registry()
            .get(index)
            .map(|s| s.key())
            .ok_or_else(|| Failure(OrdalabStatus::OutOfRange, format!("no structure at index {index}")))?;
        write_out(out, owned_string(key), "out")
    })
}

/// Run `ordalab check` from a JSON configuration with keys `structure`,
/// `suite`, and optionally `grid`, `horizon`, `seed`.
///
/// # Safety
/// `config_json` is a NUL-terminated string; `out` is valid for a
/// pointer-sized write.
#[no_mangle]
pub unsafe extern "C" fn ordalab_check(config_json: *const c_char, out: *mut *mut OrdalabReport) -> OrdalabStatus {
    guard(|| {
        let src = read_str(config_json, "config_json")?;
        let cfg = RunConfig::from_json(src)?;
        let records = run_check(&cfg)?;
        write_out(out, into_report(records), "out")
    })
}

/// Run a convergence test on `Σ_{n≥1} expr` in the structure `structure`.
///
/// # Safety
/// `expr` and `structure` are NUL-terminated strings; `out` is valid for a
/// pointer-sized write.
#[no_mangle]
pub unsafe extern "C" fn ordalab_series(
    expr: *const c_char,
    structure: *const c_char,
    test: OrdalabSeriesTest,
    horizon: u64,
    out: *mut *mut OrdalabReport,
) -> OrdalabStatus {
    guard(|| {
        let expr = read_str(expr, "expr")?;
        let key = read_str(structure, "structure")?;
        let test = match test {
            OrdalabSeriesTest::Condensation => SeriesTest::Condensation,
            OrdalabSeriesTest::Ratio => SeriesTest::Ratio,
            OrdalabSeriesTest::Alternating => SeriesTest::Alternating,
        };
        let records = run_series(expr, key, test, horizon)?;
        write_out(out, into_report(records), "out")
    })
}

/// Run the Albert pseudonorm suite on an algebra given as a JSON table
/// `{"name": ..., "n": ..., "gamma": [...]}`.
///
/// # Safety
/// `table_json` is a NUL-terminated string; `out` is valid for a
/// pointer-sized write.
#[no_mangle]
pub unsafe extern "C" fn ordalab_algebra(
    table_json: *const c_char,
    seed: u64,
    associativity: bool,
    out: *mut *mut OrdalabReport,
) -> OrdalabStatus {
    guard(|| {
        let src = read_str(table_json, "table_json")?;
        let table: AlgebraTable = serde_json::from_str(src)
            .map_err(|e| Failure(OrdalabStatus::InvalidArgument, format!("algebra table: {e}")))?;
        let records = run_algebra(&table, seed, associativity)?;
        write_out(out, into_report(records), "out")
    })
}

/// Process exit code of the report: 0 all pass, 1 a violation, 3
/// unverifiable; -1 for a null report.
///
/// # Safety
/// `report` is null or a live report.
#[no_mangle]
pub unsafe extern "C" fn ordalab_report_exit_code(report: *const OrdalabReport) -> i32 {
    match report.as_ref() {
        Some(r) => ordalab::cli::report::exit_code(&r.records),
        None => -1,
    }
}

/// Number of records; 0 for a null report.
///
/// # Safety
/// `report` is null or a live report.
#[no_mangle]
pub unsafe extern "C" fn ordalab_report_len(report: *const OrdalabReport) -> usize {
    report.as_ref().map_or(0, |r| r.records.len())
}

/// Status of record `index`.
///
/// # Safety
/// `report` is a live report; `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ordalab_report_record_status(
    report: *const OrdalabReport,
    index: usize,
    out: *mut OrdalabRecordStatus,
) -> OrdalabStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        let rec = r
            .records
            .get(index)
            .ok_or_else(|| Failure(OrdalabStatus::OutOfRange, format!("no record at index {index}")))?;
        let status = match rec.status {
            Status::Pass => OrdalabRecordStatus::Pass,
            Status::Violation => OrdalabRecordStatus::Violation,
            Status::Unverifiable => OrdalabRecordStatus::Unverifiable,
        };
        write_out(out, status, "out")
    })
}

/// JSON-lines rendering, owned by the report; null for a null report.
///
/// # Safety
/// `report` is null or a live report.
#[no_mangle]
pub unsafe extern "C" fn ordalab_report_json(report: *const OrdalabReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// Free a report. Null is ignored.
///
/// # Safety
/// `report` is null or a report from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ordalab_report_free(report: *mut OrdalabReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Parse `"a"` or `"a/b"` into an exact rational.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is valid for a pointer-sized
/// write.
#[no_mangle]
pub unsafe extern "C" fn ordalab_rational_parse(text: *const c_char, out: *mut *mut OrdalabRational) -> OrdalabStatus {
    guard(|| {
        let src = read_str(text, "text")?;
        let value = BigRational::from_str(src.trim())
            .map_err(|e| Failure(OrdalabStatus::Parse, format!("{src:?}: {e}")))?;
        write_out(out, Box::into_raw(Box::new(OrdalabRational(value))), "out")
    })
}

/// Reduced `"a/b"` form (or `"a"` for integers) as an owned string.
///
/// # Safety
/// `value` is a live rational; `out` is valid for a pointer-sized write.
#[no_mangle]
pub unsafe extern "C" fn ordalab_rational_to_string(
    value: *const OrdalabRational,
    out: *mut *mut c_char,
) -> OrdalabStatus {
    guard(|| {
        let v = value.as_ref().ok_or_else(|| null("value"))?;
        write_out(out, owned_string(v.0.to_string()), "out")
    })
}

/// Free a rational. Null is ignored.
///
/// # Safety
/// `value` is null or a rational from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ordalab_rational_free(value: *mut OrdalabRational) {
    if !value.is_null() {
        drop(Box::from_raw(value));
    }
}

/// p-adic norm `|value|_p = p^exponent`, with `*is_zero` set for zero.
///
/// # Safety
/// `value` is a live rational; `is_zero` and `exponent` are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ordalab_padic_norm(
    value: *const OrdalabRational,
    p: u64,
    is_zero: *mut bool,
    exponent: *mut i64,
) -> OrdalabStatus {
    guard(|| {
        let v = value.as_ref().ok_or_else(|| null("value"))?;
        if is_zero.is_null() || exponent.is_null() {
            return Err(null("out"));
        }
        match padic_norm(&v.0, p)? {
            ValueGroup::Zero => {
                is_zero.write(true);
                exponent.write(0);
            }
            ValueGroup::Pow(k) => {
                is_zero.write(false);
                exponent.write(k);
            }
        }
        Ok(())
    })
}

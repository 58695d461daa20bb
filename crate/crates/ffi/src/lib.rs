//! C ABI over `unitroot`.
//!
//! Instances are opaque handles created from a schema-1 JSON document. Every call
//! returns a [`UrStatus`]; on failure a message is available from
//! [`ur_last_error_message`] on the same thread. Strings handed out by the library
//! must be released with [`ur_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use unitroot::config::parse_config;
use unitroot::pipeline::{exit, run_command, Command, RunOptions};
use unitroot::ProblemInstance;

/// Status codes; 0 through 5 mirror the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UrStatus {
    Ok = 0,
    Other = 1,
    Validation = 2,
    NonOrdinary = 3,
    OracleInconsistent = 4,
    Disagreement = 5,
    NullPointer = 10,
    InvalidUtf8 = 11,
    UnknownCommand = 12,
    Panic = 13,
}

impl UrStatus {
    fn from_exit(code: i32) -> Self {
        match code {
            exit::OK => Self::Ok,
            exit::VALIDATION => Self::Validation,
            exit::NON_ORDINARY => Self::NonOrdinary,
            exit::ORACLE_INCONSISTENT => Self::OracleInconsistent,
            exit::DISAGREEMENT => Self::Disagreement,
            _ => Self::Other,
        }
    }
}

/// Opaque instance handle.
pub struct UrInstance {
    inner: ProblemInstance,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let msg = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn guarded(f: impl FnOnce() -> UrStatus) -> UrStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            UrStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, UrStatus> {
    if ptr.is_null() {
        set_error("null pointer argument");
        return Err(UrStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        UrStatus::InvalidUtf8
    })
}

/// Parse a JSON instance document into a new handle stored in `*out`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ur_instance_from_json(json: *const c_char, out: *mut *mut UrInstance) -> UrStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return UrStatus::NullPointer;
        }
        *out = std::ptr::null_mut();
        let doc = match read_str(json) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match parse_config(doc) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(UrInstance { inner }));
                UrStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                UrStatus::Validation
            }
        }
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `instance` must come from [`ur_instance_from_json`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ur_instance_free(instance: *mut UrInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// Number of monomials `N` and of unit monomials `M`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ur_instance_basis_size(
    instance: *const UrInstance,
    n_monomials: *mut usize,
    unit_count: *mut usize,
) -> UrStatus {
    guarded(|| {
        if instance.is_null() || n_monomials.is_null() || unit_count.is_null() {
            set_error("null pointer argument");
            return UrStatus::NullPointer;
        }
        let basis = (*instance).inner.basis();
        *n_monomials = basis.len();
        *unit_count = basis.unit_count();
        UrStatus::Ok
    })
}

/// Run `command` (`basis`, `hasse-witt`, `zeta`, `unit-roots` or `verify`) and store
/// the JSON report in `*out_json`. `precision = 0` keeps the instance's own.
/// The report is produced even when the status is not `Ok`.
///
/// # Safety
/// `instance` must be a live handle, `command` NUL-terminated, `out_json` valid.
#[no_mangle]
pub unsafe extern "C" fn ur_run(
    instance: *const UrInstance,
    command: *const c_char,
    precision: u32,
    out_json: *mut *mut c_char,
) -> UrStatus {
    guarded(|| {
        if instance.is_null() || out_json.is_null() {
            set_error("null pointer argument");
            return UrStatus::NullPointer;
        }
        *out_json = std::ptr::null_mut();
        let name = match read_str(command) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let Ok(cmd) = name.parse::<Command>() else {
            set_error(format!("unknown command {name:?}"));
            return UrStatus::UnknownCommand;
        };
        let opts = RunOptions { precision: (precision > 0).then_some(precision), ..Default::default() };
        let report = run_command(cmd, &(*instance).inner, &opts);
        if let Some(err) = report.errors.first() {
            set_error(format!("{} stage: {}", err.stage, err.message));
        }
        *out_json = CString::new(report.to_json()).expect("JSON has no NUL").into_raw();
        UrStatus::from_exit(report.exit_code)
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ur_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failing call on this thread, or null. Valid until the next
/// call into the library from the same thread.
#[no_mangle]
pub extern "C" fn ur_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |s| s.as_ptr()))
}

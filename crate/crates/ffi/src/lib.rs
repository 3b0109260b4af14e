//! C ABI over the claim registry.
//!
//! Handles are opaque and owned by the caller once returned; free them with
//! the matching `*_free`. Strings returned through out-parameters are
//! allocated here and released with [`f3_string_free`]. Every fallible call
//! returns an [`F3Status`]; on failure [`f3_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fano3::catalog::{self, CatalogError, ClaimResult, RunConfig, Status};
use fano3::lattice::{verify_embedding, IntegerLattice, LatticeMap};
use fano3::report::{emit_report, exit_code, ReportFormat};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum F3Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    UnknownClaim = 4,
    OutOfRange = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum F3ClaimStatus {
    Pass = 0,
    Fail = 1,
    Skipped = 2,
    Unstable = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum F3Format {
    Text = 0,
    Json = 1,
    Markdown = 2,
}

/// Run configuration. Starts at the library defaults.
pub struct F3Config(RunConfig);

/// Results of one run, sorted by claim id.
pub struct F3Results(Vec<ClaimResult>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let mut bytes = msg.into();
    bytes.retain(|&b| b != 0);
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(bytes).expect("nul bytes removed"));
}

fn fail(status: F3Status, msg: impl Into<Vec<u8>>) -> F3Status {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> F3Status) -> F3Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == F3Status::Ok {
                set_error("");
            }
            s
        }
        Err(_) => fail(F3Status::Panic, "internal panic"),
    }
}

fn catalog_status(e: &CatalogError) -> F3Status {
    match e {
        CatalogError::UnknownClaim(_) => F3Status::UnknownClaim,
        _ => F3Status::InvalidArgument,
    }
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, F3Status> {
    if s.is_null() {
        return Err(fail(F3Status::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(F3Status::InvalidUtf8, "string is not UTF-8"))
}

fn give_string(s: String, out: *mut *mut c_char) -> F3Status {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            F3Status::Ok
        }
        Err(_) => fail(F3Status::InvalidArgument, "output contains a nul byte"),
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn f3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static, nul-terminated crate version.
#[no_mangle]
pub extern "C" fn f3_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn f3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn f3_config_new() -> *mut F3Config {
    Box::into_raw(Box::new(F3Config(RunConfig::default())))
}

/// # Safety
/// `cfg` must be null or a handle from [`f3_config_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn f3_config_free(cfg: *mut F3Config) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

unsafe fn with_config(cfg: *mut F3Config, f: impl FnOnce(&mut RunConfig) -> F3Status) -> F3Status {
    if cfg.is_null() {
        return fail(F3Status::NullPointer, "null config");
    }
    let cfg = &mut (*cfg).0;
    guard(|| f(cfg))
}

/// Sets the primary prime. Non-primes are rejected here rather than at run.
///
/// # Safety
/// `cfg` must be a live config handle.
#[no_mangle]
pub unsafe extern "C" fn f3_config_set_prime(cfg: *mut F3Config, prime: u64) -> F3Status {
    with_config(cfg, |c| {
        if !fano3::poly::is_prime(prime) {
            return fail(F3Status::InvalidArgument, format!("{prime} is not prime"));
        }
        c.prime = prime;
        F3Status::Ok
    })
}

/// # Safety
/// `cfg` must be a live config handle.
#[no_mangle]
pub unsafe extern "C" fn f3_config_set_seed(cfg: *mut F3Config, seed: u64) -> F3Status {
    with_config(cfg, |c| {
        c.seed = seed;
        F3Status::Ok
    })
}

/// # Safety
/// `cfg` must be a live config handle.
#[no_mangle]
pub unsafe extern "C" fn f3_config_set_trials(cfg: *mut F3Config, trials: u32) -> F3Status {
    with_config(cfg, |c| {
        if trials == 0 {
            return fail(F3Status::InvalidArgument, "trials must be at least 1");
        }
        c.trials = trials as usize;
        F3Status::Ok
    })
}

/// # Safety
/// `cfg` must be a live config handle.
#[no_mangle]
pub unsafe extern "C" fn f3_config_set_include_slow(cfg: *mut F3Config, include: bool) -> F3Status {
    with_config(cfg, |c| {
        c.include_slow = include;
        F3Status::Ok
    })
}

/// Adds a claim id to the filter. With no ids added every claim runs.
///
/// # Safety
/// `cfg` must be a live config handle; `id` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn f3_config_add_claim(cfg: *mut F3Config, id: *const c_char) -> F3Status {
    let id = match str_arg(id) {
        Ok(s) => s.to_string(),
        Err(s) => return s,
    };
    with_config(cfg, |c| match catalog::find(&id) {
        Ok(_) => {
            c.claims.push(id);
            F3Status::Ok
        }
        Err(e) => fail(catalog_status(&e), e.to_string()),
    })
}

/// Runs the configured claims. On success `*out` receives a results handle.
///
/// # Safety
/// `cfg` must be a live config handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn f3_run(cfg: *const F3Config, out: *mut *mut F3Results) -> F3Status {
    if cfg.is_null() || out.is_null() {
        return fail(F3Status::NullPointer, "null argument");
    }
    *out = ptr::null_mut();
    let cfg = &(*cfg).0;
    guard(|| match catalog::run_all(cfg) {
        Ok(r) => {
            *out = Box::into_raw(Box::new(F3Results(r)));
            F3Status::Ok
        }
        Err(e) => fail(catalog_status(&e), e.to_string()),
    })
}

/// # Safety
/// `res` must be null or a handle from [`f3_run`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn f3_results_free(res: *mut F3Results) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// Number of results; 0 for a null handle.
///
/// # Safety
/// `res` must be null or a live results handle.
#[no_mangle]
pub unsafe extern "C" fn f3_results_len(res: *const F3Results) -> usize {
    res.as_ref().map_or(0, |r| r.0.len())
}

/// 0 if every result passed or was skipped, 1 otherwise; the CLI's exit code.
///
/// # Safety
/// `res` must be a live results handle.
#[no_mangle]
pub unsafe extern "C" fn f3_results_exit_code(res: *const F3Results) -> i32 {
    res.as_ref().map_or(2, |r| exit_code(&r.0))
}

/// Status of result `index`.
///
/// # Safety
/// `res` must be a live results handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn f3_results_status(res: *const F3Results, index: usize, out: *mut F3ClaimStatus) -> F3Status {
    let (Some(r), false) = (res.as_ref(), out.is_null()) else {
        return fail(F3Status::NullPointer, "null argument");
    };
    let Some(item) = r.0.get(index) else {
        return fail(F3Status::OutOfRange, format!("index {index} out of range"));
    };
    *out = match item.status {
        Status::Pass => F3ClaimStatus::Pass,
        Status::Fail => F3ClaimStatus::Fail,
        Status::Skipped => F3ClaimStatus::Skipped,
        Status::Unstable => F3ClaimStatus::Unstable,
    };
    F3Status::Ok
}

/// Claim id of result `index`, as a new string.
///
/// # Safety
/// `res` must be a live results handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn f3_results_claim_id(res: *const F3Results, index: usize, out: *mut *mut c_char) -> F3Status {
    let (Some(r), false) = (res.as_ref(), out.is_null()) else {
        return fail(F3Status::NullPointer, "null argument");
    };
    match r.0.get(index) {
        Some(item) => give_string(item.claim_id.clone(), out),
        None => fail(F3Status::OutOfRange, format!("index {index} out of range")),
    }
}

/// Renders the results in `format`, as a new string.
///
/// # Safety
/// `res` must be a live results handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn f3_results_report(res: *const F3Results, format: F3Format, out: *mut *mut c_char) -> F3Status {
    let (Some(r), false) = (res.as_ref(), out.is_null()) else {
        return fail(F3Status::NullPointer, "null argument");
    };
    let format = match format {
        F3Format::Text => ReportFormat::Text,
        F3Format::Json => ReportFormat::Json,
        F3Format::Markdown => ReportFormat::Markdown,
    };
    guard(|| give_string(emit_report(&r.0, format), out))
}

/// Tab-separated registry table, as printed by `fano3 list`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn f3_registry_table(out: *mut *mut c_char) -> F3Status {
    if out.is_null() {
        return fail(F3Status::NullPointer, "null argument");
    }
    guard(|| give_string(fano3::cli::list_table(), out))
}

unsafe fn square(ptr: *const i64, n: usize) -> Vec<Vec<i64>> {
    let flat = std::slice::from_raw_parts(ptr, n * n);
    flat.chunks(n).map(<[i64]>::to_vec).collect()
}

fn labels(n: usize, prefix: &str) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Checks that the map sending source basis vector `j` to column `j` of
/// `images` preserves the bilinear forms. Gram matrices are row-major
/// `rank x rank`; `images` is row-major `target_rank x source_rank`.
///
/// # Safety
/// The arrays must hold the stated number of elements and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn f3_lattice_verify_embedding(
    source_gram: *const i64,
    source_rank: usize,
    target_gram: *const i64,
    target_rank: usize,
    images: *const i64,
    out: *mut bool,
) -> F3Status {
    if source_gram.is_null() || target_gram.is_null() || images.is_null() || out.is_null() {
        return fail(F3Status::NullPointer, "null argument");
    }
    if source_rank == 0 || target_rank == 0 {
        return fail(F3Status::InvalidArgument, "lattice rank must be positive");
    }
    guard(|| {
        let (sl, tl) = (labels(source_rank, "e"), labels(target_rank, "f"));
        let sl: Vec<&str> = sl.iter().map(String::as_str).collect();
        let tl: Vec<&str> = tl.iter().map(String::as_str).collect();
        let built = IntegerLattice::new(&sl, square(source_gram, source_rank)).and_then(|s| {
            let t = IntegerLattice::new(&tl, square(target_gram, target_rank))?;
            let flat = std::slice::from_raw_parts(images, source_rank * target_rank);
            let rows = flat.chunks(source_rank).map(<[i64]>::to_vec).collect();
            LatticeMap::new(s, t, rows)
        });
        match built {
            Ok(m) => {
                *out = verify_embedding(&m);
                F3Status::Ok
            }
            Err(e) => fail(F3Status::InvalidArgument, e.to_string()),
        }
    })
}

use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use fano3_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(f3_last_error()) }.to_str().unwrap().to_string()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    f3_string_free(s);
    out
}

#[test]
fn run_one_claim() {
    unsafe {
        let cfg = f3_config_new();
        let id = CString::new("h22.degphi").unwrap();
        assert_eq!(f3_config_add_claim(cfg, id.as_ptr()), F3Status::Ok);
        let mut res = ptr::null_mut();
        assert_eq!(f3_run(cfg, &mut res), F3Status::Ok);
        assert_eq!(f3_results_len(res), 1);
        let mut st = F3ClaimStatus::Fail;
        assert_eq!(f3_results_status(res, 0, &mut st), F3Status::Ok);
        assert_eq!(st, F3ClaimStatus::Pass);
        assert_eq!(f3_results_exit_code(res), 0);

        let mut s = ptr::null_mut();
        assert_eq!(f3_results_claim_id(res, 0, &mut s), F3Status::Ok);
        assert_eq!(take(s), "h22.degphi");
        assert_eq!(f3_results_report(res, F3Format::Json, &mut s), F3Status::Ok);
        let json: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(json[0]["computed"], 2);
        assert_eq!(json[0]["status"], "pass");

        assert_eq!(f3_results_status(res, 1, &mut st), F3Status::OutOfRange);
        assert!(last_error().contains("out of range"));
        f3_results_free(res);
        f3_config_free(cfg);
    }
}

#[test]
fn configuration_errors() {
    unsafe {
        let cfg = f3_config_new();
        assert_eq!(f3_config_set_prime(cfg, 6), F3Status::InvalidArgument);
        assert_eq!(last_error(), "6 is not prime");
        assert_eq!(f3_config_set_prime(cfg, 31), F3Status::Ok);
        assert_eq!(last_error(), "");
        assert_eq!(f3_config_set_trials(cfg, 0), F3Status::InvalidArgument);
        let bad = CString::new("no.such").unwrap();
        assert_eq!(f3_config_add_claim(cfg, bad.as_ptr()), F3Status::UnknownClaim);
        assert_eq!(f3_config_add_claim(cfg, ptr::null()), F3Status::NullPointer);
        assert_eq!(f3_config_add_claim(ptr::null_mut(), bad.as_ptr()), F3Status::NullPointer);
        assert_eq!(f3_run(cfg, ptr::null_mut()), F3Status::NullPointer);
        assert_eq!(f3_results_len(ptr::null()), 0);
        f3_config_free(cfg);
        f3_config_free(ptr::null_mut());
        f3_results_free(ptr::null_mut());
        f3_string_free(ptr::null_mut());
    }
}

#[test]
fn slow_claim_is_skipped_unless_requested() {
    unsafe {
        let cfg = f3_config_new();
        let id = CString::new("h22.jac36").unwrap();
        f3_config_add_claim(cfg, id.as_ptr());
        f3_config_set_include_slow(cfg, false);
        let mut res = ptr::null_mut();
        assert_eq!(f3_run(cfg, &mut res), F3Status::Ok);
        let mut st = F3ClaimStatus::Pass;
        f3_results_status(res, 0, &mut st);
        assert_eq!(st, F3ClaimStatus::Skipped);
        f3_results_free(res);
        f3_config_free(cfg);
    }
}

#[test]
fn registry_table() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(f3_registry_table(&mut s), F3Status::Ok);
        let table = take(s);
        assert!(table.lines().any(|l| l.starts_with("v222.lattice\t")));
        assert_eq!(CStr::from_ptr(f3_version()).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn lattice_embedding() {
    // <2> into <4> + <-2>: the class h - R has square 4 - 2 = 2
    let src = [2i64];
    let tgt = [4i64, 0, 0, -2];
    let mut ok = false;
    unsafe {
        assert_eq!(f3_lattice_verify_embedding(src.as_ptr(), 1, tgt.as_ptr(), 2, [1i64, -1].as_ptr(), &mut ok), F3Status::Ok);
        assert!(ok);
        assert_eq!(f3_lattice_verify_embedding(src.as_ptr(), 1, tgt.as_ptr(), 2, [1i64, 0].as_ptr(), &mut ok), F3Status::Ok);
        assert!(!ok);
        let asym = [0i64, 1, 0, 0];
        assert_eq!(
            f3_lattice_verify_embedding(src.as_ptr(), 1, asym.as_ptr(), 2, [1i64, 0].as_ptr(), &mut ok),
            F3Status::InvalidArgument
        );
        assert_eq!(f3_lattice_verify_embedding(src.as_ptr(), 0, tgt.as_ptr(), 2, [1i64].as_ptr(), &mut ok), F3Status::InvalidArgument);
        assert_eq!(f3_lattice_verify_embedding(ptr::null(), 1, tgt.as_ptr(), 2, [1i64].as_ptr(), &mut ok), F3Status::NullPointer);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/fano3.h");
    let text = std::fs::read_to_string(header).unwrap();
    for sym in ["f3_run", "f3_results_report", "f3_lattice_verify_embedding", "F3_STATUS_UNKNOWN_CLAIM"] {
        assert!(text.contains(sym), "{sym} missing from header");
    }
    match Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header]).status() {
        Ok(st) => assert!(st.success(), "header does not compile"),
        Err(_) => eprintln!("no C compiler; syntax check skipped"),
    }
}

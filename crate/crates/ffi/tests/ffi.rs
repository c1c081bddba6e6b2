use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use modrad_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    modrad_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = modrad_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

#[test]
fn eval_check_and_witness() {
    unsafe {
        let mut obj = ptr::null_mut();
        assert_eq!(
            modrad_eval(c("sub(Zmod(4),[])").as_ptr(), &mut obj),
            ModradStatus::Ok
        );
        let mut w = ptr::null_mut();
        assert_eq!(
            modrad_check(obj, c("quasi_J").as_ptr(), &mut w),
            ModradStatus::Ok
        );
        assert!(w.is_null());
        assert_eq!(
            modrad_check(obj, c("J").as_ptr(), &mut w),
            ModradStatus::False
        );
        assert_eq!(take(w), "r=2, m=2\u{304}");
        assert_eq!(
            modrad_check(obj, c("bogus").as_ptr(), ptr::null_mut()),
            ModradStatus::UnknownPredicate
        );
        assert!(last_error().contains("bogus"));
        let mut info = ptr::null_mut();
        assert_eq!(modrad_info(obj, &mut info), ModradStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(info)).unwrap();
        assert_eq!(v["residual"], "4ℤ");
        assert_eq!(v["m_rad"], "⟨2\u{304}⟩");
        let mut expr = ptr::null_mut();
        assert_eq!(modrad_object_expression(obj, &mut expr), ModradStatus::Ok);
        assert_eq!(take(expr), "sub(Zmod(4),[])");
        modrad_object_free(obj);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut obj = ptr::null_mut();
        assert_eq!(
            modrad_eval(ptr::null(), &mut obj),
            ModradStatus::NullPointer
        );
        assert_eq!(
            modrad_eval(c("Zn(4").as_ptr(), &mut obj),
            ModradStatus::ParseError
        );
        assert!(last_error().contains("offset"));
        assert_eq!(
            modrad_eval(c("Foo(4)").as_ptr(), &mut obj),
            ModradStatus::ParseError
        );
        assert_eq!(
            modrad_eval(c("Zn(1)").as_ptr(), &mut obj),
            ModradStatus::EvalError
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            modrad_eval(bad.as_ptr().cast(), &mut obj),
            ModradStatus::InvalidUtf8
        );
        assert_eq!(
            modrad_info(ptr::null(), ptr::null_mut()),
            ModradStatus::NullPointer
        );
        let mut out = ptr::null_mut();
        assert_eq!(
            modrad_verify(c("nope").as_ptr(), c("quick").as_ptr(), &mut out),
            ModradStatus::UnknownClaim
        );
        assert_eq!(
            modrad_verify(ptr::null(), c("nope").as_ptr(), &mut out),
            ModradStatus::UnknownCorpus
        );
        assert_eq!(
            modrad_search(c("nope").as_ptr(), c("quick").as_ptr(), &mut out),
            ModradStatus::UnknownTarget
        );
        let name = CStr::from_ptr(modrad_status_name(ModradStatus::Panic));
        assert_eq!(name.to_str().unwrap(), "PANIC");
        modrad_object_free(ptr::null_mut());
        modrad_string_free(ptr::null_mut());
    }
}

#[test]
fn harness_entry_points() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            modrad_verify(
                c("thm6, ideal.J").as_ptr(),
                c("idealization").as_ptr(),
                &mut out
            ),
            ModradStatus::Ok
        );
        let text = take(out);
        let lines: Vec<serde_json::Value> = text
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0]["id"], "thm6");
        assert_eq!(lines[0]["status"], "PASS");
        assert_eq!(
            modrad_search(c("quasiJ⇒J").as_ptr(), c("quick").as_ptr(), &mut out),
            ModradStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["found"]["replayed"], true);
        assert_eq!(modrad_list_claims(&mut out), ModradStatus::Ok);
        assert!(take(out).lines().any(|l| l.contains("\"thm1.2\"")));
    }
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/modrad.h")
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(header()).unwrap();
    for f in [
        "modrad_eval",
        "modrad_check",
        "modrad_info",
        "modrad_verify",
        "modrad_search",
        "modrad_list_claims",
        "modrad_object_free",
        "modrad_string_free",
        "modrad_last_error_message",
        "MODRAD_STATUS_PARSE_ERROR = 2",
        "typedef struct ModradObject ModradObject",
    ] {
        assert!(h.contains(f), "header lacks {f}");
    }
}

/// Compiles and runs the C smoke program against the static library when a
/// C compiler and the archive are available.
#[test]
fn c_program_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let target = std::env::var_os("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| manifest.join("../../target"));
    let profile = if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    };
    let lib = target.join(profile).join("libmodrad_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("modrad_smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}

//! C ABI over the `modrad` kernel and harness.
//!
//! Every function returns a [`ModradStatus`]. Strings handed out are owned
//! by the caller and released with [`modrad_string_free`]; objects with
//! [`modrad_object_free`]. After a non-`OK` status,
//! [`modrad_last_error_message`] describes the failure on the calling
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use modrad::cli::{self, CheckError, ErrorKind, Value};
use modrad::harness::{self, CorpusSpec};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModradStatus {
    Ok = 0,
    /// The predicate is false, or a verify run had a failing claim.
    False = 1,
    ParseError = 2,
    EvalError = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    UnknownClaim = 6,
    UnknownPredicate = 7,
    UnknownCorpus = 8,
    UnknownTarget = 9,
    Panic = 10,
}

/// An evaluated ring, module, ideal or submodule expression.
pub struct ModradObject {
    value: Value,
    source: String,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

type Outcome = Result<ModradStatus, ModradStatus>;

fn fail(status: ModradStatus, msg: impl Into<String>) -> ModradStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> Outcome) -> ModradStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) | Ok(Err(s)) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(ModradStatus::Panic, msg)
        }
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, ModradStatus> {
    if p.is_null() {
        return Err(fail(ModradStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(ModradStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` is null or writable.
unsafe fn give(out: *mut *mut c_char, s: String) -> Outcome {
    if out.is_null() {
        return Err(fail(ModradStatus::NullPointer, "output pointer is null"));
    }
    *out = CString::new(s.replace('\0', " ")).unwrap().into_raw();
    Ok(ModradStatus::Ok)
}

fn corpus(name: &str) -> Result<harness::Corpus, ModradStatus> {
    let spec = CorpusSpec::named(name).ok_or_else(|| {
        fail(
            ModradStatus::UnknownCorpus,
            format!("unknown corpus `{name}`"),
        )
    })?;
    harness::build_corpus(&spec).map_err(|e| fail(ModradStatus::EvalError, e.to_string()))
}

/// Parses and evaluates `expr`, storing a new object in `*out`.
///
/// # Safety
/// `expr` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn modrad_eval(
    expr: *const c_char,
    out: *mut *mut ModradObject,
) -> ModradStatus {
    guard(|| {
        let src = text(expr, "expr")?;
        if out.is_null() {
            return Err(fail(ModradStatus::NullPointer, "output pointer is null"));
        }
        let value = cli::evaluate(src).map_err(|e| {
            let status = match e.kind {
                ErrorKind::Syntax | ErrorKind::UnknownConstructor => ModradStatus::ParseError,
                ErrorKind::Eval => ModradStatus::EvalError,
            };
            fail(status, e.to_string())
        })?;
        *out = Box::into_raw(Box::new(ModradObject {
            value,
            source: src.to_string(),
        }));
        Ok(ModradStatus::Ok)
    })
}

/// # Safety
/// `obj` is null or came from [`modrad_eval`] and was not freed.
#[no_mangle]
pub unsafe extern "C" fn modrad_object_free(obj: *mut ModradObject) {
    if !obj.is_null() {
        drop(Box::from_raw(obj));
    }
}

/// # Safety
/// `obj` is null or a live object.
unsafe fn object<'a>(obj: *const ModradObject) -> Result<&'a ModradObject, ModradStatus> {
    obj.as_ref()
        .ok_or_else(|| fail(ModradStatus::NullPointer, "object is null"))
}

/// Writes the object's invariants as one JSON object to `*out_json`.
///
/// # Safety
/// `obj` is a live object and `out_json` is writable.
#[no_mangle]
pub unsafe extern "C" fn modrad_info(
    obj: *const ModradObject,
    out_json: *mut *mut c_char,
) -> ModradStatus {
    guard(|| {
        let o = object(obj)?;
        let rec = cli::info(&o.value).map_err(|e| fail(ModradStatus::EvalError, e.to_string()))?;
        give(out_json, rec.json().trim_end().to_string())
    })
}

/// Decides `predicate` on the object. Returns `OK` when it holds and
/// `FALSE` when it does not; in the latter case `*out_witness` (if
/// non-null) receives the rendered witness or NULL.
///
/// # Safety
/// `obj` is a live object, `predicate` a NUL-terminated string and
/// `out_witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn modrad_check(
    obj: *const ModradObject,
    predicate: *const c_char,
    out_witness: *mut *mut c_char,
) -> ModradStatus {
    guard(|| {
        let o = object(obj)?;
        let pred = text(predicate, "predicate")?;
        let c = cli::check(pred, &o.value).map_err(|e| match e {
            CheckError::UnknownPredicate(m) => fail(ModradStatus::UnknownPredicate, m),
            CheckError::Kernel(e) => fail(ModradStatus::EvalError, e.to_string()),
        })?;
        if !out_witness.is_null() {
            *out_witness = match c.witness {
                Some(w) => CString::new(w).unwrap().into_raw(),
                None => ptr::null_mut(),
            };
        }
        Ok(if c.verdict.holds {
            ModradStatus::Ok
        } else {
            ModradStatus::False
        })
    })
}

/// The canonical printed form of the object's expression.
///
/// # Safety
/// `obj` is a live object and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn modrad_object_expression(
    obj: *const ModradObject,
    out: *mut *mut c_char,
) -> ModradStatus {
    guard(|| {
        let o = object(obj)?;
        let e = cli::parse(&o.source).map_err(|e| fail(ModradStatus::ParseError, e.to_string()))?;
        give(out, e.to_string())
    })
}

/// Runs claims over a named corpus and writes JSON Lines reports to
/// `*out_jsonl`. `claims` is a comma-separated id list, or NULL/empty for
/// every claim. Returns `FALSE` when any claim fails.
///
/// # Safety
/// `claims` is null or a NUL-terminated string, `corpus_name` a
/// NUL-terminated string and `out_jsonl` writable.
#[no_mangle]
pub unsafe extern "C" fn modrad_verify(
    claims: *const c_char,
    corpus_name: *const c_char,
    out_jsonl: *mut *mut c_char,
) -> ModradStatus {
    guard(|| {
        let ids: Vec<&str> = if claims.is_null() {
            Vec::new()
        } else {
            text(claims, "claims")?
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect()
        };
        let corpus = corpus(text(corpus_name, "corpus")?)?;
        let reports = if ids.is_empty() {
            harness::run_all(&corpus)
        } else {
            harness::check_claims(&ids, &corpus)
                .map_err(|e| fail(ModradStatus::UnknownClaim, e.to_string()))?
        };
        give(out_jsonl, harness::render_machine(&reports))?;
        Ok(if harness::any_failed(&reports) {
            ModradStatus::False
        } else {
            ModradStatus::Ok
        })
    })
}

/// Runs one counterexample search and writes its JSON result. Returns
/// `FALSE` when nothing was found.
///
/// # Safety
/// `target` and `corpus_name` are NUL-terminated strings and `out_json` is
/// writable.
#[no_mangle]
pub unsafe extern "C" fn modrad_search(
    target: *const c_char,
    corpus_name: *const c_char,
    out_json: *mut *mut c_char,
) -> ModradStatus {
    guard(|| {
        let id = text(target, "target")?;
        if !harness::search_targets().iter().any(|t| t.id == id) {
            return Err(fail(
                ModradStatus::UnknownTarget,
                format!("unknown target `{id}`"),
            ));
        }
        let corpus = corpus(text(corpus_name, "corpus")?)?;
        let result = harness::search_counterexample(id, &corpus)
            .map_err(|e| fail(ModradStatus::EvalError, e.to_string()))?;
        let found = result.found.is_some();
        give(
            out_json,
            harness::render_search_machine(&result)
                .trim_end()
                .to_string(),
        )?;
        Ok(if found {
            ModradStatus::Ok
        } else {
            ModradStatus::False
        })
    })
}

/// Writes one JSON object per claim, one per line.
///
/// # Safety
/// `out_jsonl` is writable.
#[no_mangle]
pub unsafe extern "C" fn modrad_list_claims(out_jsonl: *mut *mut c_char) -> ModradStatus {
    guard(|| {
        let mut s = String::new();
        for c in harness::registry() {
            let line = serde_json::json!({
                "id": c.id,
                "anchor": c.anchor,
                "hypothesis": c.hypothesis,
                "shape": c.shape,
                "note": c.note,
            });
            s.push_str(&line.to_string());
            s.push('\n');
        }
        give(out_jsonl, s)
    })
}

/// Caps the size of every carrier built afterwards; `0` restores the
/// default.
#[no_mangle]
pub extern "C" fn modrad_set_carrier_cap(cap: usize) {
    modrad::limits::set_carrier_cap(cap);
}

/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn modrad_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last non-`OK` status on this thread, or NULL. Valid
/// until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn modrad_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Status code as a static NUL-terminated name.
#[no_mangle]
pub extern "C" fn modrad_status_name(status: ModradStatus) -> *const c_char {
    let s: &'static CStr = match status {
        ModradStatus::Ok => c"OK",
        ModradStatus::False => c"FALSE",
        ModradStatus::ParseError => c"PARSE_ERROR",
        ModradStatus::EvalError => c"EVAL_ERROR",
        ModradStatus::NullPointer => c"NULL_POINTER",
        ModradStatus::InvalidUtf8 => c"INVALID_UTF8",
        ModradStatus::UnknownClaim => c"UNKNOWN_CLAIM",
        ModradStatus::UnknownPredicate => c"UNKNOWN_PREDICATE",
        ModradStatus::UnknownCorpus => c"UNKNOWN_CORPUS",
        ModradStatus::UnknownTarget => c"UNKNOWN_TARGET",
        ModradStatus::Panic => c"PANIC",
    };
    s.as_ptr()
}

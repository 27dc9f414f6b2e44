//! C interface to the solver. Handles are opaque; every call returns a
//! status code, text comes back as heap strings released through
//! [`bicolor_string_free`], and the message of the most recent failure on
//! the calling thread is kept for [`bicolor_last_error`].
//!
//! Status codes: 0 success, 1 the examined object has violations (details
//! travel in the output document), 2 rejected input, 3 internal failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bicolor::dataset::{build_gprime_quotient, load_dataset, shipped_errata, FoldedGraph};
use bicolor::error::Error;
use bicolor::import::{import_paper_solution, printed_solution};
use bicolor::solver::{
    count_gcc_solutions, enumerate_gcc_solutions, is_distribution_reversible, level_distribution,
    verify_gcc_solution, SolutionDoc, SolveOptions,
};
use serde_json::json;

/// The call succeeded.
pub const BICOLOR_OK: i32 = 0;
/// The examined object violates its contract; the output document holds the report.
pub const BICOLOR_FINDINGS: i32 = 1;
/// The input was rejected; `bicolor_last_error` explains why.
pub const BICOLOR_INVALID: i32 = 2;
/// Something failed internally; `bicolor_last_error` explains why.
pub const BICOLOR_INTERNAL: i32 = 3;

/// The folded great-circle graph with its vertex aliases. Opaque.
#[allow(non_camel_case_types)]
pub struct bicolor_folded {
    inner: FoldedGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let stored = CString::new(message.replace('\0', " ")).expect("NUL stripped");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = stored);
}

fn fail(err: &Error) -> i32 {
    set_error(&err.to_string());
    match err {
        Error::Internal(_) => BICOLOR_INTERNAL,
        _ => BICOLOR_INVALID,
    }
}

fn reject(message: &str) -> i32 {
    set_error(message);
    BICOLOR_INVALID
}

/// Runs the body behind a panic barrier so unwinding never crosses the
/// language boundary.
fn guarded(body: impl FnOnce() -> i32) -> i32 {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| {
        set_error("internal panic");
        BICOLOR_INTERNAL
    })
}

fn emit(out: *mut *mut c_char, text: String) -> Option<i32> {
    match CString::new(text) {
        Ok(text) => {
            unsafe { *out = text.into_raw() };
            None
        }
        Err(_) => Some(reject("output contained an interior NUL byte")),
    }
}

/// Reads a borrowed handle, or reports why it cannot.
///
/// # Safety
/// `g` must be null or a pointer from `bicolor_folded_new`.
unsafe fn handle<'a>(g: *const bicolor_folded) -> Result<&'a FoldedGraph, i32> {
    match g.as_ref() {
        Some(g) => Ok(&g.inner),
        None => Err(reject("null graph handle")),
    }
}

/// Reads a borrowed C string, or reports why it cannot.
///
/// # Safety
/// `text` must be null or a NUL-terminated string.
unsafe fn text_arg<'a>(text: *const c_char, what: &str) -> Result<&'a str, i32> {
    if text.is_null() {
        return Err(reject(&format!("null {what}")));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| reject(&format!("{what} is not valid UTF-8")))
}

/// Builds the folded graph from the shipped tables (errata applied) and
/// writes the new handle to `out`.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn bicolor_folded_new(out: *mut *mut bicolor_folded) -> i32 {
    guarded(|| {
        if out.is_null() {
            return reject("null output location");
        }
        let built = load_dataset(Some(&shipped_errata())).and_then(|ds| build_gprime_quotient(&ds));
        match built {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(bicolor_folded { inner })) };
                BICOLOR_OK
            }
            Err(err) => fail(&err),
        }
    })
}

/// Releases a handle from `bicolor_folded_new`. Null is a no-op.
///
/// # Safety
/// `g` must be null or a pointer from `bicolor_folded_new`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bicolor_folded_free(g: *mut bicolor_folded) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Writes the exact number of solutions to `out` — the full space counts
/// 3685171200, the 1/3/5-pinned family 6. Runs in milliseconds; this is
/// the right call for totals, enumeration is not.
///
/// # Safety
/// `g` as for `bicolor_folded_free`; `out` must point to writable storage.
#[no_mangle]
pub unsafe extern "C" fn bicolor_count_solutions(
    g: *const bicolor_folded,
    fix_135: bool,
    out: *mut u64,
) -> i32 {
    guarded(|| {
        let gp = match unsafe { handle(g) } {
            Ok(gp) => gp,
            Err(code) => return code,
        };
        if out.is_null() {
            return reject("null output location");
        }
        match count_gcc_solutions(gp, fix_135) {
            Ok(count) => {
                unsafe { *out = count };
                BICOLOR_OK
            }
            Err(err) => fail(&err),
        }
    })
}

/// Enumerates solutions and writes a JSON document `{"count", "solutions"}`
/// to `out`. `limit` caps the stream (0 = no cap — with `fix_135` false
/// that means billions of rows; cap it or use `bicolor_count_solutions`).
///
/// # Safety
/// `g` as for `bicolor_folded_free`; `out` receives a string to release
/// with `bicolor_string_free`.
#[no_mangle]
pub unsafe extern "C" fn bicolor_solve_json(
    g: *const bicolor_folded,
    fix_135: bool,
    reversible_only: bool,
    limit: usize,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let gp = match unsafe { handle(g) } {
            Ok(gp) => gp,
            Err(code) => return code,
        };
        if out.is_null() {
            return reject("null output location");
        }
        let outcome = match enumerate_gcc_solutions(
            gp,
            &SolveOptions {
                fix_135,
                reversible_only,
                limit,
                ..SolveOptions::default()
            },
        ) {
            Ok(outcome) => outcome,
            Err(err) => return fail(&err),
        };
        let docs: Vec<SolutionDoc> = match outcome
            .solutions
            .iter()
            .map(|sol| SolutionDoc::from_solution(gp, sol))
            .collect()
        {
            Ok(docs) => docs,
            Err(err) => return fail(&err),
        };
        let body = json!({ "count": outcome.count, "solutions": docs });
        emit(out, body.to_string()).unwrap_or(BICOLOR_OK)
    })
}

/// Checks a solution document and writes
/// `{"ok", "distribution_reversible", "violations"}` to `out`. Returns 0
/// for a valid solution, 1 when the report is nonempty.
///
/// # Safety
/// `g` as for `bicolor_folded_free`; `solution_json` must be a
/// NUL-terminated string; `out` as for `bicolor_solve_json`.
#[no_mangle]
pub unsafe extern "C" fn bicolor_verify_json(
    g: *const bicolor_folded,
    solution_json: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let gp = match unsafe { handle(g) } {
            Ok(gp) => gp,
            Err(code) => return code,
        };
        if out.is_null() {
            return reject("null output location");
        }
        let text = match unsafe { text_arg(solution_json, "solution document") } {
            Ok(text) => text,
            Err(code) => return code,
        };
        let sol = match SolutionDoc::from_json(text).and_then(|doc| doc.to_solution(gp)) {
            Ok(sol) => sol,
            Err(err) => return fail(&err),
        };
        let report = match verify_gcc_solution(gp, &sol) {
            Ok(report) => report,
            Err(err) => return fail(&err),
        };
        let reversible = if report.ok() {
            match is_distribution_reversible(gp, &sol) {
                Ok(flag) => Some(flag),
                Err(err) => return fail(&err),
            }
        } else {
            None
        };
        let body = json!({
            "ok": report.ok(),
            "distribution_reversible": reversible,
            "violations": report.violations,
        });
        let status = if report.ok() {
            BICOLOR_OK
        } else {
            BICOLOR_FINDINGS
        };
        emit(out, body.to_string()).unwrap_or(status)
    })
}

/// Writes the per-level piece table of a valid solution to `out` as CSV
/// (rows the seven pairs, columns the five levels). Returns 1 and the
/// violation report instead when the solution fails verification.
///
/// # Safety
/// As for `bicolor_verify_json`.
#[no_mangle]
pub unsafe extern "C" fn bicolor_level_table_csv(
    g: *const bicolor_folded,
    solution_json: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let gp = match unsafe { handle(g) } {
            Ok(gp) => gp,
            Err(code) => return code,
        };
        if out.is_null() {
            return reject("null output location");
        }
        let text = match unsafe { text_arg(solution_json, "solution document") } {
            Ok(text) => text,
            Err(code) => return code,
        };
        let sol = match SolutionDoc::from_json(text).and_then(|doc| doc.to_solution(gp)) {
            Ok(sol) => sol,
            Err(err) => return fail(&err),
        };
        let report = match verify_gcc_solution(gp, &sol) {
            Ok(report) => report,
            Err(err) => return fail(&err),
        };
        if !report.ok() {
            let body = json!({ "ok": false, "violations": report.violations });
            return emit(out, body.to_string()).unwrap_or(BICOLOR_FINDINGS);
        }
        emit(out, level_distribution(gp, &sol).to_csv()).unwrap_or(BICOLOR_OK)
    })
}

/// Maps one shipped solution table ("ss4", "ss5a" or "ss5b") onto the
/// graph and writes `{"source", "assigned", "open", "violations"}` to
/// `out`. Returns 1 when the table contradicts the graph anywhere — every
/// shipped table does.
///
/// # Safety
/// `g` as for `bicolor_folded_free`; `label` must be a NUL-terminated
/// string; `out` as for `bicolor_solve_json`.
#[no_mangle]
pub unsafe extern "C" fn bicolor_import_json(
    g: *const bicolor_folded,
    label: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let gp = match unsafe { handle(g) } {
            Ok(gp) => gp,
            Err(code) => return code,
        };
        if out.is_null() {
            return reject("null output location");
        }
        let label = match unsafe { text_arg(label, "table label") } {
            Ok(label) => label,
            Err(code) => return code,
        };
        let doc = match printed_solution(label) {
            Ok(doc) => doc,
            Err(err) => return fail(&err),
        };
        let (partial, report) = match import_paper_solution(gp, &doc) {
            Ok(pair) => pair,
            Err(err) => return fail(&err),
        };
        let body = json!({
            "source": label,
            "assigned": partial.assigned(),
            "open": partial.open(),
            "violations": report.violations,
        });
        let status = if report.ok() {
            BICOLOR_OK
        } else {
            BICOLOR_FINDINGS
        };
        emit(out, body.to_string()).unwrap_or(status)
    })
}

/// The message of the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bicolor_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string produced by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string pointer this library handed out, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn bicolor_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

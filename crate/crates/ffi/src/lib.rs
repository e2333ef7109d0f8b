// SPDX-License-Identifier: Apache-2.0

//! C interface to the `catom` library.
//!
//! Programs live behind an opaque [`CatomProgram`] handle. Every entry point
//! returns a [`CatomStatus`]; on failure [`catom_last_error`] describes the
//! problem. Strings handed out through `char **out` belong to the caller and
//! are released with [`catom_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use catom::abstraction::{build_abstract, classify_catom};
use catom::analysis::{dependency_graph, translate_normal};
use catom::fixpoint::{fixpoint_stable, to_positive_basic, FixpointVerdict};
use catom::program::{parse_atom_list, Atom, Interpretation, Program};
use catom::reduct::{gl_reduct, is_stable, stable_models};
use catom::{parse_catom, parse_program, Error};

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CatomStatus {
    Ok = 0,
    Parse = 1,
    Guard = 2,
    Divergence = 3,
    NullArg = 4,
    InvalidUtf8 = 5,
    Class = 6,
    Internal = 7,
}

/// A parsed program.
pub struct CatomProgram {
    program: Program,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CatomStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } | Error::InvalidAtom { .. } | Error::MalformedCAtom(_) => CatomStatus::Parse,
            Error::Guard { .. } => CatomStatus::Guard,
            Error::NotInClass { .. } | Error::NegatedConstraint => CatomStatus::Class,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `f`, records any failure or panic and converts it to a status.
fn guarded(f: impl FnOnce() -> Result<(), Failure>) -> CatomStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CatomStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("internal error: {msg}"));
            CatomStatus::Internal
        }
    }
}

/// # Safety
/// `s` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(CatomStatus::NullArg, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(CatomStatus::InvalidUtf8, format!("{what}: {e}")))
}

/// # Safety
/// `p` is null or a handle from [`catom_program_parse`].
unsafe fn program<'a>(p: *const CatomProgram) -> Result<&'a Program, Failure> {
    p.as_ref()
        .map(|h| &h.program)
        .ok_or_else(|| Failure(CatomStatus::NullArg, "program is null".into()))
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(CatomStatus::NullArg, "out is null".into()));
    }
    let c = CString::new(s).map_err(|e| Failure(CatomStatus::Internal, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(CatomStatus::NullArg, "out is null".into()))
    } else {
        Ok(())
    }
}

/// Parses program text into a new handle stored in `*out`.
///
/// # Safety
/// `text` is a NUL-terminated string and `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn catom_program_parse(text: *const c_char, out: *mut *mut CatomProgram) -> CatomStatus {
    guarded(|| {
        check_out(out)?;
        let program = parse_program(read_str(text, "text")?)?;
        *out = Box::into_raw(Box::new(CatomProgram { program }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` is null or a handle from [`catom_program_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn catom_program_free(p: *mut CatomProgram) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Stable models as `{"models":[["a","b"],...]}`.
///
/// # Safety
/// `p` is a live handle and `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn catom_stable_models_json(p: *const CatomProgram, out: *mut *mut c_char) -> CatomStatus {
    guarded(|| {
        check_out(out)?;
        let models = stable_models(program(p)?)?;
        let names: Vec<Vec<&str>> = models.iter().map(|m| m.iter().map(Atom::name).collect()).collect();
        let json = serde_json::json!({ "models": names }).to_string();
        write_string(out, json)
    })
}

/// Whether the comma-separated atoms in `atoms` form a stable model.
///
/// # Safety
/// `p` is a live handle, `atoms` a NUL-terminated string, `out` valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn catom_is_stable(p: *const CatomProgram, atoms: *const c_char, out: *mut bool) -> CatomStatus {
    guarded(|| {
        check_out(out)?;
        let i = parse_atom_list(read_str(atoms, "atoms")?)?;
        *out = is_stable(program(p)?, &i)?;
        Ok(())
    })
}

/// Decides stability with both the reduct and the fixpoint operator.
/// Returns `Divergence` if they disagree. The program must be normal with
/// elementary heads.
///
/// # Safety
/// As for [`catom_is_stable`].
#[no_mangle]
pub unsafe extern "C" fn catom_check_both(p: *const CatomProgram, atoms: *const c_char, out: *mut bool) -> CatomStatus {
    guarded(|| {
        check_out(out)?;
        let p = program(p)?;
        let i: Interpretation = parse_atom_list(read_str(atoms, "atoms")?)?;
        let by_reduct = is_stable(p, &i)?;
        let by_fixpoint = fixpoint_stable(&to_positive_basic(p)?, &i)? == FixpointVerdict::Stable;
        if by_reduct != by_fixpoint {
            return Err(Failure(
                CatomStatus::Divergence,
                format!("reduct says {by_reduct}, fixpoint says {by_fixpoint}"),
            ));
        }
        *out = by_reduct;
        Ok(())
    })
}

/// The reduct of the program w.r.t. the comma-separated atoms, as text.
///
/// # Safety
/// `p` is a live handle, `atoms` a NUL-terminated string, `out` valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn catom_reduct_text(
    p: *const CatomProgram,
    atoms: *const c_char,
    out: *mut *mut c_char,
) -> CatomStatus {
    guarded(|| {
        check_out(out)?;
        let i = parse_atom_list(read_str(atoms, "atoms")?)?;
        let r = gl_reduct(program(p)?, &i)?;
        write_string(out, r.to_string())
    })
}

/// The normal-program translation of a basic program, as text.
///
/// # Safety
/// `p` is a live handle and `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn catom_translate_text(p: *const CatomProgram, out: *mut *mut c_char) -> CatomStatus {
    guarded(|| {
        check_out(out)?;
        write_string(out, translate_normal(program(p)?)?.to_string())
    })
}

/// The dependency graph of a basic program in Graphviz syntax.
///
/// # Safety
/// `p` is a live handle and `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn catom_depgraph_dot(p: *const CatomProgram, out: *mut *mut c_char) -> CatomStatus {
    guarded(|| {
        check_out(out)?;
        write_string(out, dependency_graph(program(p)?)?.to_dot())
    })
}

/// Abstract representation and class flags of one c-atom expression such
/// as `[a, b : {a}, {a, b}]` or `1 {a, b} 1`, as JSON.
///
/// # Safety
/// `expr` is a NUL-terminated string and `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn catom_abstract_json(expr: *const c_char, out: *mut *mut c_char) -> CatomStatus {
    guarded(|| {
        check_out(out)?;
        let c = parse_catom(read_str(expr, "expr")?)?;
        let abs = build_abstract(&c)?;
        let json = serde_json::json!({
            "domain": abs.domain(),
            "lattices": abs.lattices(),
            "class": classify_catom(&abs),
        });
        write_string(out, json.to_string())
    })
}

/// Releases a string returned through an `out` parameter. Null is ignored.
///
/// # Safety
/// `s` is null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn catom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn catom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub extern "C" fn catom_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

//! C ABI for the projembed library: opaque handles, integer status codes,
//! JSON results. The matching header is `include/projembed.h`.
//!
//! All functions are panic-safe: a caught panic returns `PE_ERR_PANIC` and
//! the message is available through `pe_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use projembed::catalog::{catalog_get, Params};
use projembed::chartab::CharacterTable;
use projembed::closed_forms::TableId;
use projembed::config::Config;
use projembed::covering::Covering;
use projembed::error::Error;
use projembed::group::Group;
use projembed::presentation::{parse_covering, parse_presentation};
use projembed::report::{TauReportOut, SCHEMA_VERSION};
use projembed::{tau, verify};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[allow(non_camel_case_types)]
pub enum pe_status {
    PE_OK = 0,
    PE_ERR_PARSE = 1,
    PE_ERR_INCONSISTENT = 2,
    PE_ERR_BUDGET = 3,
    PE_ERR_INVALID = 4,
    PE_ERR_UNKNOWN_ENTRY = 5,
    PE_ERR_NULL = 6,
    PE_ERR_PANIC = 7,
}

/// Opaque: a loaded covering together with its lazily computed character
/// table.
#[allow(non_camel_case_types)]
pub struct pe_group {
    covering: Covering,
    table: Option<CharacterTable>,
    config: Config,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> pe_status {
    match e {
        Error::Parse { .. } => pe_status::PE_ERR_PARSE,
        Error::Inconsistent { .. } => pe_status::PE_ERR_INCONSISTENT,
        Error::Budget { .. } | Error::OrderBound { .. } => pe_status::PE_ERR_BUDGET,
        Error::UnknownCatalogEntry(_) => pe_status::PE_ERR_UNKNOWN_ENTRY,
        _ => pe_status::PE_ERR_INVALID,
    }
}

fn guard<F: FnOnce() -> pe_status>(f: F) -> pe_status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            pe_status::PE_ERR_PANIC
        }
    }
}

unsafe fn cstr<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    CStr::from_ptr(p).to_str().ok()
}

fn emit_string(s: String, out: *mut *mut c_char) -> pe_status {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            pe_status::PE_OK
        }
        Err(_) => {
            set_error("output contained an interior NUL byte");
            pe_status::PE_ERR_INVALID
        }
    }
}

/// Version of the JSON schemas returned by the `_json` functions.
#[no_mangle]
pub extern "C" fn pe_schema_version() -> u32 {
    SCHEMA_VERSION
}

/// Message describing the most recent error on this thread.
#[no_mangle]
pub extern "C" fn pe_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Load a covering from the built-in catalog. `k` is the secondary
/// parameter (e.g. Heisenberg over Z/p^k); pass 1 when unused.
#[no_mangle]
pub unsafe extern "C" fn pe_covering_from_catalog(
    name: *const c_char,
    p: u64,
    k: u32,
    out: *mut *mut pe_group,
) -> pe_status {
    guard(|| {
        let (name, out) = match (cstr(name), out.is_null()) {
            (Some(n), false) => (n, out),
            _ => {
                set_error("null argument");
                return pe_status::PE_ERR_NULL;
            }
        };
        let config = Config::from_env();
        match catalog_get(name, &Params { p, k }, &config)
            .and_then(|e| e.load_covering(&config))
        {
            Ok(covering) => {
                let h = Box::new(pe_group {
                    covering,
                    table: None,
                    config,
                });
                *out = Box::into_raw(h);
                pe_status::PE_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Load a covering (pcgroup block with `kernel`/`quotient`) or a plain
/// presentation (treated as its own trivial covering) from grammar text.
#[no_mangle]
pub unsafe extern "C" fn pe_covering_from_text(
    text: *const c_char,
    out: *mut *mut pe_group,
) -> pe_status {
    guard(|| {
        let (text, out) = match (cstr(text), out.is_null()) {
            (Some(t), false) => (t, out),
            _ => {
                set_error("null argument");
                return pe_status::PE_ERR_NULL;
            }
        };
        let config = Config::from_env();
        let loaded = if text.contains("\nkernel") {
            parse_covering(text, &config).and_then(|spec| Covering::load(&spec, &config))
        } else {
            parse_presentation(text, &config)
                .and_then(|pres| Group::build(pres, &config))
                .map(|g| Covering::trivial(Arc::new(g)))
        };
        match loaded {
            Ok(covering) => {
                *out = Box::into_raw(Box::new(pe_group {
                    covering,
                    table: None,
                    config,
                }));
                pe_status::PE_OK
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn pe_group_free(h: *mut pe_group) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Free a string returned by any `_json` function.
#[no_mangle]
pub unsafe extern "C" fn pe_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Structural summary of the quotient group as JSON.
#[no_mangle]
pub unsafe extern "C" fn pe_group_info_json(
    h: *const pe_group,
    out: *mut *mut c_char,
) -> pe_status {
    guard(|| {
        let h = match h.as_ref() {
            Some(h) if !out.is_null() => h,
            _ => {
                set_error("null argument");
                return pe_status::PE_ERR_NULL;
            }
        };
        match verify::group_info(&h.covering.group, &h.config) {
            Ok(info) => emit_string(serde_json::to_string_pretty(&info).unwrap(), out),
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

fn ensure_table(h: &mut pe_group) -> Result<(), Error> {
    if h.table.is_none() {
        h.table = Some(CharacterTable::compute(&h.covering.gstar, &h.config)?);
    }
    Ok(())
}

/// tau (irreducible = 0) or tau_irr (irreducible != 0) as JSON.
#[no_mangle]
pub unsafe extern "C" fn pe_tau_json(
    h: *mut pe_group,
    irreducible: c_int,
    out: *mut *mut c_char,
) -> pe_status {
    guard(|| {
        let h = match h.as_mut() {
            Some(h) if !out.is_null() => h,
            _ => {
                set_error("null argument");
                return pe_status::PE_ERR_NULL;
            }
        };
        if let Err(e) = ensure_table(h) {
            set_error(&e.to_string());
            return status_of(&e);
        }
        let table = h.table.as_ref().unwrap();
        let report = if irreducible != 0 {
            tau::tau_irr(&h.covering, table, &h.config)
        } else {
            tau::tau(&h.covering, table, &h.config)
        };
        match report {
            Ok(report) => {
                let outv = TauReportOut {
                    schema_version: SCHEMA_VERSION,
                    report,
                };
                emit_string(serde_json::to_string_pretty(&outv).unwrap(), out)
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Verify one of the result tables ("p3", "2to4", "p4", "p5") at a prime;
/// the full row-by-row report is returned as JSON.
#[no_mangle]
pub unsafe extern "C" fn pe_verify_table_json(
    table: *const c_char,
    p: u64,
    high_budget: c_int,
    out: *mut *mut c_char,
) -> pe_status {
    guard(|| {
        let (table, out) = match (cstr(table), out.is_null()) {
            (Some(t), false) => (t, out),
            _ => {
                set_error("null argument");
                return pe_status::PE_ERR_NULL;
            }
        };
        let config = if high_budget != 0 {
            Config::high()
        } else {
            Config::from_env()
        };
        let id = match TableId::parse(table) {
            Ok(id) => id,
            Err(e) => {
                set_error(&e.to_string());
                return pe_status::PE_ERR_INVALID;
            }
        };
        match verify::verify_table(id, p, &config) {
            Ok(rep) => emit_string(rep.stable_json(), out),
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn catalog_roundtrip_through_the_c_abi() {
        unsafe {
            let mut h: *mut pe_group = ptr::null_mut();
            let name = c("Q8");
            let st = pe_covering_from_catalog(name.as_ptr(), 2, 1, &mut h);
            assert_eq!(st, pe_status::PE_OK);
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(pe_tau_json(h, 0, &mut s), pe_status::PE_OK);
            let json = CStr::from_ptr(s).to_str().unwrap().to_string();
            assert!(json.contains("\"value\": 3"), "{json}");
            pe_string_free(s);
            let mut s2: *mut c_char = ptr::null_mut();
            assert_eq!(pe_group_info_json(h, &mut s2), pe_status::PE_OK);
            let info = CStr::from_ptr(s2).to_str().unwrap().to_string();
            assert!(info.contains("\"order\": 8"), "{info}");
            pe_string_free(s2);
            pe_group_free(h);
        }
    }

    #[test]
    fn text_loading_and_error_paths() {
        unsafe {
            let mut h: *mut pe_group = ptr::null_mut();
            let text = c("pcgroup H3\ngen x y z\nord x=3 y=3 z=3\nconj y^x = y*z\nend\n");
            assert_eq!(pe_covering_from_text(text.as_ptr(), &mut h), pe_status::PE_OK);
            pe_group_free(h);

            let bad = c("pcgroup bad\ngen a\nord a=2\npow a = q\nend\n");
            let mut h2: *mut pe_group = ptr::null_mut();
            let st = pe_covering_from_text(bad.as_ptr(), &mut h2);
            assert_eq!(st, pe_status::PE_ERR_PARSE);
            let msg = CStr::from_ptr(pe_last_error()).to_str().unwrap();
            assert!(msg.contains("unknown generator"), "{msg}");

            let missing = c("NoSuchGroup");
            let st = pe_covering_from_catalog(missing.as_ptr(), 3, 1, &mut h2);
            assert_eq!(st, pe_status::PE_ERR_UNKNOWN_ENTRY);

            assert_eq!(
                pe_covering_from_catalog(ptr::null(), 3, 1, &mut h2),
                pe_status::PE_ERR_NULL
            );
        }
    }

    #[test]
    fn verify_table_json_through_the_c_abi() {
        unsafe {
            let mut s: *mut c_char = ptr::null_mut();
            let t = c("p3");
            assert_eq!(pe_verify_table_json(t.as_ptr(), 3, 0, &mut s), pe_status::PE_OK);
            let json = CStr::from_ptr(s).to_str().unwrap();
            assert!(json.contains("\"mismatched\": 0"), "{json}");
            pe_string_free(s);
        }
    }

    #[test]
    fn schema_version_exported() {
        assert_eq!(pe_schema_version(), SCHEMA_VERSION);
    }
}

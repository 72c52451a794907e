//! C ABI over the natcode library.
//!
//! Conventions: handles are opaque pointers created by `natcode_tupling_new`
//! and released by `natcode_tupling_free`; every number crosses the boundary
//! as a decimal NUL-terminated string (the values are arbitrary-precision,
//! so no fixed-width integer type fits); strings returned through `out`
//! parameters are owned by the caller and must be released with
//! `natcode_string_free`. On any failure the function returns a status
//! other than `NATCODE_OK` and `natcode_last_error_message` describes the
//! problem (per thread, valid until the next failing call on that thread).

#![allow(non_camel_case_types)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use natcode::enums::{self, FullBinaryTree, TuplingFamily};
use natcode::pairings::PairingKind;
use natcode::tuplings::{self, TuplingFunction};
use natcode::{verify, Nat};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum natcode_status {
    /// The call succeeded.
    NATCODE_OK = 0,
    /// A required pointer argument was NULL.
    NATCODE_ERR_NULL = 1,
    /// An argument failed to parse (number, selector name, s-expression).
    NATCODE_ERR_PARSE = 2,
    /// The arguments were outside the function's domain.
    NATCODE_ERR_DOMAIN = 3,
}

use natcode_status::*;

/// Opaque handle to a tupling function ℕ^d → ℕ.
pub struct natcode_tupling {
    inner: TuplingFunction,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("NUL bytes removed");
    });
}

fn fail(status: natcode_status, msg: &str) -> natcode_status {
    set_error(msg);
    status
}

/// Human-readable description of the most recent failure on this thread.
/// The pointer stays valid until the next failing call on the same thread;
/// do not free it.
#[no_mangle]
pub extern "C" fn natcode_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `p` must be a valid NUL-terminated string or NULL.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, natcode_status> {
    if p.is_null() {
        return Err(fail(NATCODE_ERR_NULL, "unexpected NULL string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(NATCODE_ERR_PARSE, "string argument is not valid UTF-8"))
}

fn parse_nat(s: &str) -> Result<Nat, natcode_status> {
    s.trim()
        .parse()
        .map_err(|_| fail(NATCODE_ERR_PARSE, &format!("not a natural number: {s:?}")))
}

/// # Safety
/// `out` must be valid for a single pointer write or NULL.
unsafe fn give_string(s: String, out: *mut *mut c_char) -> natcode_status {
    if out.is_null() {
        return fail(NATCODE_ERR_NULL, "unexpected NULL output pointer");
    }
    let c = CString::new(s).expect("outputs never contain NUL");
    *out = c.into_raw();
    NATCODE_OK
}

fn domain(e: natcode::Error) -> natcode_status {
    fail(NATCODE_ERR_DOMAIN, &e.to_string())
}

fn selector(name: &str, dim: usize) -> Result<TuplingFunction, natcode_status> {
    let two_only = |f: TuplingFunction| {
        if dim == 2 {
            Ok(f)
        } else {
            Err(fail(
                NATCODE_ERR_DOMAIN,
                &format!("{name} is a pairing: dim must be 2, got {dim}"),
            ))
        }
    };
    match name {
        "cantor" => two_only(tuplings::cantor()),
        "cantor-swapped" => two_only(tuplings::cantor_swapped()),
        "cantor-positive" => two_only(tuplings::cantor_positive()),
        "dyadic" => two_only(tuplings::dyadic()),
        "rs" => tuplings::rosenberg_strong(dim).map_err(domain),
        "skolem" => tuplings::skolem(dim).map_err(domain),
        "chowla" => tuplings::chowla(dim).map_err(domain),
        "fold-cantor" | "fold-rs" => {
            if dim < 2 {
                return Err(fail(
                    NATCODE_ERR_DOMAIN,
                    &format!("{name} needs dim of at least 2, got {dim}"),
                ));
            }
            let kind = if name == "fold-cantor" {
                PairingKind::Cantor
            } else {
                PairingKind::RosenbergStrong
            };
            tuplings::fold_tupling(kind, dim).map_err(domain)
        }
        _ => Err(fail(
            NATCODE_ERR_PARSE,
            &format!("unknown function selector: {name:?}"),
        )),
    }
}

fn pairing(name: &str) -> Result<PairingKind, natcode_status> {
    match name {
        "cantor" => Ok(PairingKind::Cantor),
        "cantor-swapped" => Ok(PairingKind::CantorSwapped),
        "rs" => Ok(PairingKind::RosenbergStrong),
        "dyadic" => Ok(PairingKind::Dyadic),
        _ => Err(fail(
            NATCODE_ERR_PARSE,
            &format!("unknown pairing selector: {name:?}"),
        )),
    }
}

/// Create a tupling function from a selector name (`cantor`,
/// `cantor-swapped`, `cantor-positive`, `rs`, `skolem`, `chowla`, `dyadic`,
/// `fold-cantor`, `fold-rs`) and a dimension.
///
/// # Safety
/// `name` must be a valid NUL-terminated string; `out` must be valid for a
/// single pointer write. On success `*out` owns the handle.
#[no_mangle]
pub unsafe extern "C" fn natcode_tupling_new(
    name: *const c_char,
    dim: usize,
    out: *mut *mut natcode_tupling,
) -> natcode_status {
    if out.is_null() {
        return fail(NATCODE_ERR_NULL, "unexpected NULL output pointer");
    }
    let name = match read_str(name) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match selector(name, dim) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(natcode_tupling { inner }));
            NATCODE_OK
        }
        Err(status) => status,
    }
}

/// Release a handle created by `natcode_tupling_new`. NULL is a no-op.
///
/// # Safety
/// `t` must be a pointer returned by `natcode_tupling_new` that has not
/// been freed already, or NULL.
#[no_mangle]
pub unsafe extern "C" fn natcode_tupling_free(t: *mut natcode_tupling) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of coordinates the function takes; 0 for NULL.
///
/// # Safety
/// `t` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn natcode_tupling_dim(t: *const natcode_tupling) -> usize {
    if t.is_null() {
        0
    } else {
        (*t).inner.dim()
    }
}

/// Encode `len` decimal coordinates into a single decimal code.
///
/// # Safety
/// `t` must be a live handle; `coords` must point to `len` valid strings;
/// `out` must be valid for a single pointer write.
#[no_mangle]
pub unsafe extern "C" fn natcode_encode(
    t: *const natcode_tupling,
    coords: *const *const c_char,
    len: usize,
    out: *mut *mut c_char,
) -> natcode_status {
    if t.is_null() || (coords.is_null() && len > 0) {
        return fail(NATCODE_ERR_NULL, "unexpected NULL argument");
    }
    let mut point = Vec::with_capacity(len);
    for i in 0..len {
        let s = match read_str(*coords.add(i)) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match parse_nat(s) {
            Ok(v) => point.push(v),
            Err(status) => return status,
        }
    }
    match (*t).inner.encode(&point) {
        Ok(code) => give_string(code.to_string(), out),
        Err(e) => domain(e),
    }
}

/// Decode a decimal code into space-separated decimal coordinates.
///
/// # Safety
/// `t` must be a live handle; `code` a valid string; `out` valid for a
/// single pointer write.
#[no_mangle]
pub unsafe extern "C" fn natcode_decode(
    t: *const natcode_tupling,
    code: *const c_char,
    out: *mut *mut c_char,
) -> natcode_status {
    if t.is_null() {
        return fail(NATCODE_ERR_NULL, "unexpected NULL handle");
    }
    let code = match read_str(code).and_then(parse_nat) {
        Ok(v) => v,
        Err(status) => return status,
    };
    match (*t).inner.decode(&code) {
        Ok(point) => {
            let text = point
                .iter()
                .map(Nat::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            give_string(text, out)
        }
        Err(e) => domain(e),
    }
}

/// Print the tree at a decimal index as an s-expression like `((o o) o)`.
/// `pairing_name` is one of `cantor`, `cantor-swapped`, `rs`, `dyadic`.
///
/// # Safety
/// String arguments must be valid; `out` valid for a single pointer write.
#[no_mangle]
pub unsafe extern "C" fn natcode_tree_unrank(
    pairing_name: *const c_char,
    n: *const c_char,
    out: *mut *mut c_char,
) -> natcode_status {
    let kind = match read_str(pairing_name).and_then(pairing) {
        Ok(k) => k,
        Err(status) => return status,
    };
    let n = match read_str(n).and_then(parse_nat) {
        Ok(v) => v,
        Err(status) => return status,
    };
    match enums::tree_unrank(&n, kind) {
        Ok(tree) => give_string(tree.to_string(), out),
        Err(e) => domain(e),
    }
}

/// Parse an s-expression and print its decimal index.
///
/// # Safety
/// String arguments must be valid; `out` valid for a single pointer write.
#[no_mangle]
pub unsafe extern "C" fn natcode_tree_rank(
    pairing_name: *const c_char,
    tree: *const c_char,
    out: *mut *mut c_char,
) -> natcode_status {
    let kind = match read_str(pairing_name).and_then(pairing) {
        Ok(k) => k,
        Err(status) => return status,
    };
    let text = match read_str(tree) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let parsed: FullBinaryTree = match text.parse() {
        Ok(t) => t,
        Err(e) => return fail(NATCODE_ERR_PARSE, &format!("{e}")),
    };
    match enums::tree_rank(&parsed, kind) {
        Ok(rank) => give_string(rank.to_string(), out),
        Err(e) => domain(e),
    }
}

fn family(name: Option<&str>) -> Result<TuplingFamily, natcode_status> {
    match name {
        None | Some("rs") => Ok(TuplingFamily::RosenbergStrong),
        Some("fold-cantor") => Ok(TuplingFamily::FoldCantor),
        Some(other) => Err(fail(
            NATCODE_ERR_PARSE,
            &format!("unknown tupling family: {other:?}"),
        )),
    }
}

/// Print the sequence at a decimal index, comma-separated (empty string for
/// the empty sequence). `scheme` is `xi` or `zeta`; `family_name` selects
/// the zeta tupling family (`rs` or `fold-cantor`; NULL means `rs`) and is
/// ignored by xi.
///
/// # Safety
/// String arguments must be valid (`family_name` may be NULL); `out` valid
/// for a single pointer write.
#[no_mangle]
pub unsafe extern "C" fn natcode_seq_unrank(
    scheme: *const c_char,
    pairing_name: *const c_char,
    family_name: *const c_char,
    n: *const c_char,
    out: *mut *mut c_char,
) -> natcode_status {
    let scheme = match read_str(scheme) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let kind = match read_str(pairing_name).and_then(pairing) {
        Ok(k) => k,
        Err(status) => return status,
    };
    let n = match read_str(n).and_then(parse_nat) {
        Ok(v) => v,
        Err(status) => return status,
    };
    let result = match scheme {
        "xi" => enums::seq_unrank_xi(&n, kind),
        "zeta" => {
            let fam = if family_name.is_null() {
                None
            } else {
                match read_str(family_name) {
                    Ok(s) => Some(s),
                    Err(status) => return status,
                }
            };
            match family(fam) {
                Ok(f) => enums::seq_unrank_zeta(&n, kind, f),
                Err(status) => return status,
            }
        }
        other => {
            return fail(NATCODE_ERR_PARSE, &format!("unknown scheme: {other:?}"));
        }
    };
    match result {
        Ok(seq) => {
            let text = seq
                .iter()
                .map(Nat::to_string)
                .collect::<Vec<_>>()
                .join(",");
            give_string(text, out)
        }
        Err(e) => domain(e),
    }
}

/// Read a comma-separated sequence (empty string for ()) and print its
/// decimal index. Arguments as for `natcode_seq_unrank`.
///
/// # Safety
/// String arguments must be valid (`family_name` may be NULL); `out` valid
/// for a single pointer write.
#[no_mangle]
pub unsafe extern "C" fn natcode_seq_rank(
    scheme: *const c_char,
    pairing_name: *const c_char,
    family_name: *const c_char,
    seq: *const c_char,
    out: *mut *mut c_char,
) -> natcode_status {
    let scheme = match read_str(scheme) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let kind = match read_str(pairing_name).and_then(pairing) {
        Ok(k) => k,
        Err(status) => return status,
    };
    let text = match read_str(seq) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let mut items = Vec::new();
    if !text.trim().is_empty() {
        for item in text.split(',') {
            match parse_nat(item) {
                Ok(v) => items.push(v),
                Err(status) => return status,
            }
        }
    }
    let result = match scheme {
        "xi" => enums::seq_rank_xi(&items, kind),
        "zeta" => {
            let fam = if family_name.is_null() {
                None
            } else {
                match read_str(family_name) {
                    Ok(s) => Some(s),
                    Err(status) => return status,
                }
            };
            match family(fam) {
                Ok(f) => enums::seq_rank_zeta(&items, kind, f),
                Err(status) => return status,
            }
        }
        other => {
            return fail(NATCODE_ERR_PARSE, &format!("unknown scheme: {other:?}"));
        }
    };
    match result {
        Ok(rank) => give_string(rank.to_string(), out),
        Err(e) => domain(e),
    }
}

/// Run the self-check suite over a code/rank prefix and return the number
/// of failed properties (0 means everything passed).
#[no_mangle]
pub extern "C" fn natcode_verify(limit: u64) -> u64 {
    verify::run_suite(limit)
        .iter()
        .filter(|report| !report.passed)
        .count() as u64
}

/// Release a string returned through an `out` parameter. NULL is a no-op.
///
/// # Safety
/// `s` must be a string returned by this library that has not been freed
/// already, or NULL.
#[no_mangle]
pub unsafe extern "C" fn natcode_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

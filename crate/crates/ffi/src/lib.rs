//! C ABI for the hyperquartet library.
//!
//! Hypergraphs cross the boundary as opaque `HqHypergraph` handles. Every
//! fallible function returns an `HqStatus`; on failure a message is kept in
//! thread-local storage and read with `hq_last_error`. Strings returned
//! through out-parameters are owned by the caller and released with
//! `hq_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hyperquartet::chromatic::{count_colorings, count_rainbow, quartet, rainbow_quartet};
use hyperquartet::coalgebra::{coproduct, CoproductKind};
use hyperquartet::hgx::{coproduct_json, parse_hgx, to_hgx};
use hyperquartet::laws::{run_suite, SuiteConfig};
use hyperquartet::{Error, Hypergraph, Involution};

/// Opaque hypergraph.
pub struct HqHypergraph(Hypergraph);

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HqStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Shape = 3,
    Resource = 4,
    Precondition = 5,
    Invalid = 6,
    Utf8 = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HqInvolution {
    Id = 0,
    Dual = 1,
    Complement = 2,
    DualComplement = 3,
}

impl From<HqInvolution> for Involution {
    fn from(w: HqInvolution) -> Self {
        match w {
            HqInvolution::Id => Involution::Id,
            HqInvolution::Dual => Involution::D,
            HqInvolution::Complement => Involution::C,
            HqInvolution::DualComplement => Involution::Cd,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> HqStatus {
    match e {
        Error::Parse { .. } => HqStatus::Parse,
        Error::Shape(_) => HqStatus::Shape,
        Error::Resource(_) => HqStatus::Resource,
        Error::Precondition(_) => HqStatus::Precondition,
        Error::DuplicateNode(_) | Error::Invalid(_) => HqStatus::Invalid,
    }
}

struct Fail(HqStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(HqStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HqStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            HqStatus::Panic
        }
    }
}

unsafe fn handle<'a>(h: *const HqHypergraph) -> Result<&'a Hypergraph, Fail> {
    h.as_ref().map(|h| &h.0).ok_or_else(|| null("hypergraph"))
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null("string"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Fail(HqStatus::Utf8, e.to_string()))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| Fail(HqStatus::Invalid, e.to_string()))?;
    put(out, c.into_raw())
}

unsafe fn put_handle(out: *mut *mut HqHypergraph, h: Hypergraph) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(HqHypergraph(h))))
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses HGX text (matrix or JSON form).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_hypergraph_parse(text: *const c_char, out: *mut *mut HqHypergraph) -> HqStatus {
    guard(|| {
        let h = parse_hgx(c_str(text)?)?;
        put_handle(out, h)
    })
}

/// Builds a hypergraph from `m` row bitmasks over `n` vertices.
///
/// # Safety
/// `rows` must point to `m` readable values (or be null when `m = 0`).
#[no_mangle]
pub unsafe extern "C" fn hq_hypergraph_from_rows(
    n: usize,
    rows: *const u64,
    m: usize,
    out: *mut *mut HqHypergraph,
) -> HqStatus {
    guard(|| {
        let rows = if m == 0 {
            Vec::new()
        } else if rows.is_null() {
            return Err(null("rows"));
        } else {
            std::slice::from_raw_parts(rows, m).to_vec()
        };
        put_handle(out, Hypergraph::new(n, rows)?)
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hq_hypergraph_free(h: *mut HqHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; `m` and `n` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_hypergraph_shape(h: *const HqHypergraph, m: *mut usize, n: *mut usize) -> HqStatus {
    guard(|| {
        let h = handle(h)?;
        put(m, h.edge_count())?;
        put(n, h.vertex_count())
    })
}

/// Copies the row bitmasks into `rows`, which holds `capacity` values.
///
/// # Safety
/// `h` must be a live handle; `rows` must have room for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn hq_hypergraph_rows(h: *const HqHypergraph, rows: *mut u64, capacity: usize) -> HqStatus {
    guard(|| {
        let h = handle(h)?;
        if capacity < h.edge_count() {
            return Err(Fail(HqStatus::Invalid, format!("need {} rows, have {capacity}", h.edge_count())));
        }
        if h.edge_count() > 0 {
            if rows.is_null() {
                return Err(null("rows"));
            }
            ptr::copy_nonoverlapping(h.rows().as_ptr(), rows, h.edge_count());
        }
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_hypergraph_derive(
    h: *const HqHypergraph,
    op: HqInvolution,
    out: *mut *mut HqHypergraph,
) -> HqStatus {
    guard(|| {
        let g = handle(h)?.derive(op.into());
        put_handle(out, g)
    })
}

/// # Safety
/// `a` and `b` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn hq_hypergraph_isomorphic(
    a: *const HqHypergraph,
    b: *const HqHypergraph,
    out: *mut bool,
) -> HqStatus {
    guard(|| {
        let same = handle(a)?.canonical_key() == handle(b)?.canonical_key();
        put(out, same)
    })
}

/// HGX matrix text.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_hypergraph_to_hgx(h: *const HqHypergraph, out: *mut *mut c_char) -> HqStatus {
    guard(|| put_string(out, to_hgx(handle(h)?)))
}

/// Hex canonical key.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_canonical_key(h: *const HqHypergraph, out: *mut *mut c_char) -> HqStatus {
    guard(|| put_string(out, handle(h)?.canonical_key().to_hex()))
}

/// Quartet JSON with keys `chi…` or, for `rainbow`, `rainbow…`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_quartet_json(h: *const HqHypergraph, rainbow: bool, out: *mut *mut c_char) -> HqStatus {
    guard(|| {
        let h = handle(h)?;
        let json = if rainbow { rainbow_quartet(h)?.to_json("rainbow") } else { quartet(h)?.to_json("chi") };
        put_string(out, json)
    })
}

/// Coproduct `kind` (e.g. `"Delta-cd"`) as JSON terms.
///
/// # Safety
/// `h` must be a live handle; `kind` nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hq_coproduct_json(
    h: *const HqHypergraph,
    kind: *const c_char,
    out: *mut *mut c_char,
) -> HqStatus {
    guard(|| {
        let kind: CoproductKind = c_str(kind)?.parse()?;
        let d = coproduct(kind, handle(h)?)?;
        put_string(out, coproduct_json(&d).to_string())
    })
}

/// Colorings with `k` colors; `HQ_STATUS_RESOURCE` if the count exceeds 64 bits.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_count_colorings(
    h: *const HqHypergraph,
    k: u64,
    rainbow: bool,
    out: *mut u64,
) -> HqStatus {
    guard(|| {
        let h = handle(h)?;
        let n = if rainbow { count_rainbow(h, k)? } else { count_colorings(h, k)? };
        let n = u64::try_from(n).map_err(|_| Fail(HqStatus::Resource, format!("{n} exceeds 64 bits")))?;
        put(out, n)
    })
}

/// Runs every law suite; writes the JSON report and whether all laws held.
///
/// # Safety
/// `report` and `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_laws_run(
    max_edges: usize,
    max_vertices: usize,
    samples: usize,
    seed: u64,
    report: *mut *mut c_char,
    passed: *mut bool,
) -> HqStatus {
    guard(|| {
        let cfg = SuiteConfig { max_edges, max_vertices, samples, seed, ..SuiteConfig::default() };
        let r = run_suite(&cfg)?;
        put(passed, r.passed())?;
        put_string(report, r.to_json())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

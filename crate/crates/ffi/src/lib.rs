//! C ABI over `axial-core`. Algebras live behind an opaque handle; rich
//! results come back as JSON strings owned by the library and released
//! with [`axial_string_free`]. Every call returns an [`AxialStatus`]; on
//! failure [`axial_last_error`] describes what went wrong.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use axial_core::algebra::{is_commutative, is_flexible, Algebra};
use axial_core::classify::verify_paper_suite;
use axial_core::cli::{self, AlgebraFile, CliError, Outcome};

/// Result codes. The first four match the exit codes of the `axial` binary.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxialStatus {
    Ok = 0,
    /// The computation ran and a mathematical check failed.
    CheckFailed = 1,
    InvalidInput = 2,
    /// An enumeration would exceed its cap.
    ResourceCap = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    /// A Rust panic was caught at the boundary.
    Internal = 6,
}

/// An algebra with its optional designated generators.
pub struct AxialAlgebra {
    file: AlgebraFile,
    algebra: Algebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("nul bytes removed")));
}

enum Failure {
    Status(AxialStatus, String),
    Cli(CliError),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Cli(e)
    }
}

impl From<axial_core::Error> for Failure {
    fn from(e: axial_core::Error) -> Self {
        Failure::Cli(e.into())
    }
}

fn status_of_code(code: u8) -> AxialStatus {
    match code {
        0 => AxialStatus::Ok,
        1 => AxialStatus::CheckFailed,
        3 => AxialStatus::ResourceCap,
        _ => AxialStatus::InvalidInput,
    }
}

/// Runs `f` behind `catch_unwind`, recording any failure.
fn guard(f: impl FnOnce() -> Result<AxialStatus, Failure>) -> AxialStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Failure::Cli(e))) => {
            set_error(e.to_string());
            status_of_code(e.exit_code())
        }
        Err(_) => {
            set_error("internal panic");
            AxialStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Status(
            AxialStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Status(AxialStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_opt_str<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        read_str(p, what).map(Some)
    }
}

unsafe fn handle<'a>(p: *const AxialAlgebra) -> Result<&'a AxialAlgebra, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::Status(AxialStatus::NullPointer, "algebra handle is null".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Status(
            AxialStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s)
        .map_err(|_| Failure::Status(AxialStatus::Internal, "nul byte in output".into()))?;
    write_out(out, c.into_raw())
}

/// Writes the JSON rendering and maps the verdict to a status.
unsafe fn emit(out: *mut *mut c_char, o: Outcome) -> Result<AxialStatus, Failure> {
    if out.is_null() {
        return Err(Failure::Status(
            AxialStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    write_string(out, serde_json::to_string(&o.json).expect("json value"))?;
    if o.pass {
        Ok(AxialStatus::Ok)
    } else {
        set_error("a check failed; see the JSON report");
        Ok(AxialStatus::CheckFailed)
    }
}

fn boxed(file: AlgebraFile) -> Result<*mut AxialAlgebra, Failure> {
    let algebra = file.to_algebra()?;
    Ok(Box::into_raw(Box::new(AxialAlgebra { file, algebra })))
}

/// Message for the most recent failure on this thread, or null. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn axial_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn axial_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an algebra file (JSON text).
///
/// # Safety
/// `json` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_from_json(
    json: *const c_char,
    out: *mut *mut AxialAlgebra,
) -> AxialStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let file = AlgebraFile::parse(text).map_err(|e| Failure::Cli(CliError::File(e)))?;
        write_out(out, boxed(file)?)?;
        Ok(AxialStatus::Ok)
    })
}

/// A catalog algebra: `family` is one of 2B, hss, flex1, flex2, bfamily;
/// `field` is Q, Qt or GF:p. Null parameters take their defaults.
///
/// # Safety
/// String arguments must be valid C strings or null where allowed; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_catalog_algebra(
    family: *const c_char,
    field: *const c_char,
    lambda: *const c_char,
    lambda_prime: *const c_char,
    gamma: *const c_char,
    out: *mut *mut AxialAlgebra,
) -> AxialStatus {
    guard(|| {
        let family = read_str(family, "family")?;
        let field = read_opt_str(field, "field")?.unwrap_or("Q");
        let file = cli::cmd_export(
            family,
            field,
            read_opt_str(lambda, "lambda")?,
            read_opt_str(lambda_prime, "lambda_prime")?,
            read_opt_str(gamma, "gamma")?,
        )?;
        write_out(out, boxed(file)?)?;
        Ok(AxialStatus::Ok)
    })
}

/// # Safety
/// `a` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_free(a: *mut AxialAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_dim(a: *const AxialAlgebra, out: *mut usize) -> AxialStatus {
    guard(|| {
        write_out(out, handle(a)?.algebra.dim())?;
        Ok(AxialStatus::Ok)
    })
}

/// The algebra in the file format.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_to_json(
    a: *const AxialAlgebra,
    out: *mut *mut c_char,
) -> AxialStatus {
    guard(|| {
        write_string(out, handle(a)?.file.to_json())?;
        Ok(AxialStatus::Ok)
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_is_flexible(a: *const AxialAlgebra, out: *mut bool) -> AxialStatus {
    guard(|| {
        write_out(out, is_flexible(&handle(a)?.algebra))?;
        Ok(AxialStatus::Ok)
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_is_commutative(
    a: *const AxialAlgebra,
    out: *mut bool,
) -> AxialStatus {
    guard(|| {
        write_out(out, is_commutative(&handle(a)?.algebra))?;
        Ok(AxialStatus::Ok)
    })
}

/// Axis axioms for `element` (coordinates or a basis name). `axis_type`
/// is `"λ,δ"` or null to read the type off the spectra. Returns `Ok` for
/// an axis and `CheckFailed` otherwise; the report is written either way.
///
/// # Safety
/// `a` must be a live handle; strings valid or null where allowed; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_check_axis(
    a: *const AxialAlgebra,
    element: *const c_char,
    axis_type: *const c_char,
    out: *mut *mut c_char,
) -> AxialStatus {
    guard(|| {
        let h = handle(a)?;
        let o = cli::cmd_axis(
            &h.algebra,
            read_str(element, "element")?,
            read_opt_str(axis_type, "axis_type")?,
        )?;
        emit(out, o)
    })
}

/// Classification of the algebra generated by `gens` (`"a,b"`), or by the
/// designated generators when `gens` is null.
///
/// # Safety
/// As for [`axial_check_axis`].
#[no_mangle]
pub unsafe extern "C" fn axial_classify(
    a: *const AxialAlgebra,
    gens: *const c_char,
    out: *mut *mut c_char,
) -> AxialStatus {
    guard(|| {
        let h = handle(a)?;
        let g = match read_opt_str(gens, "gens")? {
            Some(t) => cli::parse_element_list(&h.algebra, t)?,
            None => match h.file.generators(&h.algebra)? {
                Some(g) => g,
                None => {
                    return Err(Failure::Status(
                        AxialStatus::InvalidInput,
                        "no generators given".into(),
                    ));
                }
            },
        };
        emit(out, cli::cmd_classify(&h.algebra, &g)?)
    })
}

/// All idempotents over a finite field; `cap` bounds the enumeration.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_idempotents(
    a: *const AxialAlgebra,
    cap: u64,
    out: *mut *mut c_char,
) -> AxialStatus {
    guard(|| {
        emit(
            out,
            cli::cmd_idempotents(&handle(a)?.algebra, u128::from(cap))?,
        )
    })
}

/// Exhaustive 2-dimensional search over GF(p).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_search_dim2(p: u64, cap: u64, out: *mut *mut c_char) -> AxialStatus {
    guard(|| {
        emit(
            out,
            cli::cmd_search_dim2(&format!("GF:{p}"), u128::from(cap))?,
        )
    })
}

/// Replays the built-in statement suite.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_verify_suite(out: *mut *mut c_char) -> AxialStatus {
    guard(|| emit(out, cli::render_suite(verify_paper_suite())))
}

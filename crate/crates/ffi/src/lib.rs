//! C ABI over the deformed-oscillator library.
//!
//! Every entry point returns a status code and writes results through
//! out-pointers. Handles are opaque and must be released with the
//! matching `_free` call. Error details are kept per thread and can be
//! read back with `defosc_last_error`; the pointer stays valid until
//! the next failing call on the same thread.
//!
//! No call unwinds across the boundary: panics are caught and turned
//! into `DEFOSC_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::CString;
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::{c_char, c_double, c_int, size_t};

use defosc::deform1d::{self, Deform1DParams};
use defosc::harness::{auto_mode, energy_and_correction, Mode};
use defosc::radial::{self, RadialProblem, RadialState};
use defosc::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum DefoscStatus {
    DefoscStatusOk = 0,
    DefoscStatusDomain = 1,
    DefoscStatusBranch = 2,
    DefoscStatusOverflow = 3,
    DefoscStatusTruncation = 4,
    DefoscStatusConvergence = 5,
    DefoscStatusNullArg = 6,
    DefoscStatusInternal = 7,
}

use DefoscStatus::*;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn store_error(msg: &str) {
    let safe = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = safe);
}

fn status_of(e: &Error) -> DefoscStatus {
    store_error(&e.to_string());
    match e {
        Error::Domain(_) => DefoscStatusDomain,
        Error::Branch(_) => DefoscStatusBranch,
        Error::Overflow(_) => DefoscStatusOverflow,
        Error::Truncation { .. } => DefoscStatusTruncation,
        Error::Convergence { .. } => DefoscStatusConvergence,
    }
}

fn null_arg(what: &str) -> DefoscStatus {
    store_error(&format!("null pointer passed for {what}"));
    DefoscStatusNullArg
}

fn guarded<F: FnOnce() -> DefoscStatus>(f: F) -> DefoscStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            store_error("internal panic");
            DefoscStatusInternal
        }
    }
}

/// Message for the most recent failure on this thread. Never null;
/// empty before the first failure.
#[no_mangle]
pub extern "C" fn defosc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn defosc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

// ---------------------------------------------------------------------
// 1-D oscillator in a uniform field.

/// Opaque 1-D problem handle.
pub struct DefoscOsc1D {
    params: Deform1DParams,
    mode: Mode,
}

/// Creates a 1-D problem. Requires finite parameters with
/// `alpha, beta >= 0`; the evaluation branch is picked from the
/// parameters (boundary branches when a deformation vanishes).
///
/// # Safety
/// `out` must be a valid pointer. The handle must be released with
/// `defosc_osc1d_free`.
#[no_mangle]
pub unsafe extern "C" fn defosc_osc1d_new(
    alpha: c_double,
    beta: c_double,
    efield: c_double,
    out: *mut *mut DefoscOsc1D,
) -> DefoscStatus {
    if out.is_null() {
        return null_arg("out");
    }
    guarded(|| match Deform1DParams::new(alpha, beta, efield) {
        Ok(params) => {
            let mode = auto_mode(alpha, beta);
            let handle = Box::new(DefoscOsc1D { params, mode });
            unsafe { *out = Box::into_raw(handle) };
            DefoscStatusOk
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a 1-D handle. A null handle is ignored.
///
/// # Safety
/// `h` must come from `defosc_osc1d_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn defosc_osc1d_free(h: *mut DefoscOsc1D) {
    if !h.is_null() {
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Energy of level `n`, written to `energy`; the field-induced part
/// of that energy is written to `correction` when non-null.
///
/// # Safety
/// `h` must be a live handle and `energy` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn defosc_osc1d_energy(
    h: *const DefoscOsc1D,
    n: u32,
    energy: *mut c_double,
    correction: *mut c_double,
) -> DefoscStatus {
    if h.is_null() {
        return null_arg("handle");
    }
    if energy.is_null() {
        return null_arg("energy");
    }
    guarded(|| {
        let osc = unsafe { &*h };
        match energy_and_correction(
            osc.mode,
            osc.params.alpha,
            osc.params.beta,
            osc.params.efield,
            n,
        ) {
            Ok((e, c)) => {
                unsafe {
                    *energy = e;
                    if !correction.is_null() {
                        *correction = c;
                    }
                }
                DefoscStatusOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Derived base parameters (q, t, z, K) of the general branch.
/// Fails with `DEFOSC_STATUS_BRANCH` on a boundary problem, where
/// these quantities are not defined.
///
/// # Safety
/// `h` must be a live handle; out-pointers may be null to skip fields.
#[no_mangle]
pub unsafe extern "C" fn defosc_osc1d_base_params(
    h: *const DefoscOsc1D,
    q: *mut c_double,
    t: *mut c_double,
    z: *mut c_double,
    bigk: *mut c_double,
) -> DefoscStatus {
    if h.is_null() {
        return null_arg("handle");
    }
    guarded(|| {
        let osc = unsafe { &*h };
        match deform1d::derive_params(&osc.params) {
            Ok(d) => {
                unsafe {
                    if !q.is_null() {
                        *q = d.q;
                    }
                    if !t.is_null() {
                        *t = d.t;
                    }
                    if !z.is_null() {
                        *z = d.z;
                    }
                    if !bigk.is_null() {
                        *bigk = d.bigk;
                    }
                }
                DefoscStatusOk
            }
            Err(e) => status_of(&e),
        }
    })
}

// ---------------------------------------------------------------------
// D-dimensional oscillator with minimal length.

/// Opaque radial problem handle.
pub struct DefoscRadial {
    problem: RadialProblem,
    state_cache: RefCell<Option<(u32, u32, RadialState)>>,
}

/// Creates a radial problem for the D-dimensional oscillator.
/// `gamma_weight` tunes the measure weight entering `R` (zero is the
/// conventional choice; `chi` never depends on it).
///
/// # Safety
/// `out` must be a valid pointer. The handle must be released with
/// `defosc_radial_free`.
#[no_mangle]
pub unsafe extern "C" fn defosc_radial_new(
    dim: u32,
    l: u32,
    beta: c_double,
    beta_prime: c_double,
    gamma_weight: c_double,
    out: *mut *mut DefoscRadial,
) -> DefoscStatus {
    if out.is_null() {
        return null_arg("out");
    }
    guarded(|| match RadialProblem::new(dim, l, beta, beta_prime, gamma_weight) {
        Ok(problem) => {
            let handle = Box::new(DefoscRadial {
                problem,
                state_cache: RefCell::new(None),
            });
            unsafe { *out = Box::into_raw(handle) };
            DefoscStatusOk
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a radial handle. A null handle is ignored.
///
/// # Safety
/// `h` must come from `defosc_radial_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn defosc_radial_free(h: *mut DefoscRadial) {
    if !h.is_null() {
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Level energies at radial index `n` and angular momentum `l`:
/// the transformed spectrum goes to `te`, the radial spectrum to `e`
/// (either pointer may be null to skip it).
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn defosc_radial_energy(
    h: *const DefoscRadial,
    n: u32,
    l: u32,
    te: *mut c_double,
    e: *mut c_double,
) -> DefoscStatus {
    if h.is_null() {
        return null_arg("handle");
    }
    guarded(|| {
        let rad = unsafe { &*h };
        let (tev, ev) = radial::radial_energy(&rad.problem, n, l);
        unsafe {
            if !te.is_null() {
                *te = tev;
            }
            if !e.is_null() {
                *e = ev;
            }
        }
        DefoscStatusOk
    })
}

/// Samples the radial eigenfunctions at `len` momenta: `chi[i]` gets
/// chi_n(p[i]) and, when `r` is non-null, `r[i]` gets R_nl(p[i]).
/// States are cached per (n, l) on the handle, so repeated sampling
/// of one level is cheap. Not thread-safe per handle.
///
/// # Safety
/// `h` must be a live handle; `p` and `chi` must point to `len`
/// readable respectively writable doubles, and `r` likewise when
/// non-null.
#[no_mangle]
pub unsafe extern "C" fn defosc_radial_sample(
    h: *const DefoscRadial,
    n: u32,
    l: u32,
    p: *const c_double,
    chi: *mut c_double,
    r: *mut c_double,
    len: size_t,
) -> DefoscStatus {
    if h.is_null() {
        return null_arg("handle");
    }
    if len > 0 && (p.is_null() || chi.is_null()) {
        return null_arg("sample buffers");
    }
    guarded(|| {
        let rad = unsafe { &*h };
        let mut cache = rad.state_cache.borrow_mut();
        let fresh = match cache.as_ref() {
            Some((cn, cl, _)) => (*cn, *cl) != (n, l),
            None => true,
        };
        if fresh {
            match radial::radial_wavefunction(&rad.problem, n, l) {
                Ok(st) => *cache = Some((n, l, st)),
                Err(e) => return status_of(&e),
            }
        }
        let state = &cache.as_ref().expect("cache filled above").2;
        for i in 0..len {
            let pi = unsafe { *p.add(i) };
            unsafe {
                *chi.add(i) = state.chi(pi);
                if !r.is_null() {
                    *r.add(i) = state.r_nl(pi);
                }
            }
        }
        DefoscStatusOk
    })
}

/// Convenience entry: energy of the 1-D oscillator without a handle.
/// `mode` selects the branch: 0 auto, 1 general, 2 alpha0, 3 beta0,
/// 4 equal.
///
/// # Safety
/// `energy` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn defosc_energy_1d(
    mode: c_int,
    alpha: c_double,
    beta: c_double,
    efield: c_double,
    n: u32,
    energy: *mut c_double,
) -> DefoscStatus {
    if energy.is_null() {
        return null_arg("energy");
    }
    guarded(|| {
        let mode = match mode {
            0 => auto_mode(alpha, beta),
            1 => Mode::General,
            2 => Mode::Alpha0,
            3 => Mode::Beta0,
            4 => Mode::Equal,
            other => {
                store_error(&format!("unknown mode code {other}"));
                return DefoscStatusDomain;
            }
        };
        match energy_and_correction(mode, alpha, beta, efield, n) {
            Ok((e, _)) => {
                unsafe { *energy = e };
                DefoscStatusOk
            }
            Err(e) => status_of(&e),
        }
    })
}

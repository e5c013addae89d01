//! Exercises the C entry points from Rust: handle lifecycle, status
//! codes, out-parameter plumbing, and agreement with the core crate.

use std::ffi::CStr;
use std::ptr;

use defosc_ffi::*;

fn ok(s: DefoscStatus) -> bool {
    s == DefoscStatus::DefoscStatusOk
}

#[test]
fn version_and_error_strings_are_valid() {
    unsafe {
        let v = CStr::from_ptr(defosc_version());
        assert!(!v.to_str().unwrap().is_empty());
        let e = CStr::from_ptr(defosc_last_error());
        assert!(e.to_str().is_ok());
    }
}

#[test]
fn osc1d_general_branch_matches_core() {
    unsafe {
        let mut h: *mut DefoscOsc1D = ptr::null_mut();
        assert!(ok(defosc_osc1d_new(0.15, 0.25, 0.4, &mut h)));
        assert!(!h.is_null());

        let mut q = 0.0;
        let mut t = 0.0;
        let mut z = 0.0;
        assert!(ok(defosc_osc1d_base_params(
            h,
            &mut q,
            &mut t,
            &mut z,
            ptr::null_mut()
        )));
        let d = defosc::deform1d::derive_params(
            &defosc::deform1d::Deform1DParams::new(0.15, 0.25, 0.4).unwrap(),
        )
        .unwrap();
        assert_eq!(q, d.q);
        assert_eq!(t, d.t);
        assert_eq!(z, d.z);

        for n in 0..6u32 {
            let mut e = 0.0;
            let mut c = 0.0;
            assert!(ok(defosc_osc1d_energy(h, n, &mut e, &mut c)));
            let expect = defosc::deform1d::energy(&d, n).unwrap();
            assert_eq!(e, expect);
            assert_eq!(c, defosc::deform1d::field_correction(&d, n));
        }
        defosc_osc1d_free(h);
    }
}

#[test]
fn osc1d_boundary_branch_and_errors() {
    unsafe {
        // boundary problem: base parameters are undefined there
        let mut h: *mut DefoscOsc1D = ptr::null_mut();
        assert!(ok(defosc_osc1d_new(0.0, 0.2, 0.7, &mut h)));
        let mut e = 0.0;
        assert!(ok(defosc_osc1d_energy(h, 0, &mut e, ptr::null_mut())));
        assert!((e - defosc::deform1d::energy_alpha0(0.2, 0.7, 0)).abs() == 0.0);
        let st = defosc_osc1d_base_params(
            h,
            ptr::null_mut(),
            ptr::null_mut(),
            ptr::null_mut(),
            ptr::null_mut(),
        );
        assert!(st == DefoscStatus::DefoscStatusBranch);
        let msg = CStr::from_ptr(defosc_last_error()).to_str().unwrap();
        assert!(!msg.is_empty());
        defosc_osc1d_free(h);

        // domain error: negative deformation
        let mut bad: *mut DefoscOsc1D = ptr::null_mut();
        let st = defosc_osc1d_new(-1.0, 0.2, 0.0, &mut bad);
        assert!(st == DefoscStatus::DefoscStatusDomain);
        assert!(bad.is_null());

        // null out-pointer
        let st = defosc_osc1d_new(0.1, 0.1, 0.0, ptr::null_mut());
        assert!(st == DefoscStatus::DefoscStatusNullArg);
    }
}

#[test]
fn energy_1d_mode_codes() {
    unsafe {
        let mut via_auto = 0.0;
        let mut via_equal = 0.0;
        assert!(ok(defosc_energy_1d(0, 0.1, 0.1, 0.0, 2, &mut via_auto)));
        assert!(ok(defosc_energy_1d(4, 0.1, 0.1, 0.0, 2, &mut via_equal)));
        assert!((via_auto - via_equal).abs() <= 1.0e-12);
        let mut out = 0.0;
        // general branch rejects a vanishing alpha
        assert!(!ok(defosc_energy_1d(1, 0.0, 0.1, 0.0, 0, &mut out)));
        // unknown mode code
        assert!(!ok(defosc_energy_1d(9, 0.1, 0.1, 0.0, 0, &mut out)));
    }
}

#[test]
fn radial_energy_and_sampling() {
    unsafe {
        let mut h: *mut DefoscRadial = ptr::null_mut();
        assert!(ok(defosc_radial_new(3, 1, 0.05, 0.05, 0.0, &mut h)));

        let mut te = 0.0;
        let mut e = 0.0;
        assert!(ok(defosc_radial_energy(h, 1, 1, &mut te, &mut e)));
        let rp = defosc::radial::RadialProblem::new(3, 1, 0.05, 0.05, 0.0).unwrap();
        let (te0, e0) = defosc::radial::radial_energy(&rp, 1, 1);
        assert_eq!(te, te0);
        assert_eq!(e, e0);

        let p: Vec<f64> = (0..8).map(|i| 0.5 + i as f64).collect();
        let mut chi = vec![0.0; p.len()];
        let mut r = vec![0.0; p.len()];
        assert!(ok(defosc_radial_sample(
            h,
            1,
            1,
            p.as_ptr(),
            chi.as_mut_ptr(),
            r.as_mut_ptr(),
            p.len()
        )));
        let st = defosc::radial::radial_wavefunction(&rp, 1, 1).unwrap();
        for (i, &pi) in p.iter().enumerate() {
            assert_eq!(chi[i], st.chi(pi));
            assert_eq!(r[i], st.r_nl(pi));
        }
        // cached resample with r skipped
        assert!(ok(defosc_radial_sample(
            h,
            1,
            1,
            p.as_ptr(),
            chi.as_mut_ptr(),
            ptr::null_mut(),
            p.len()
        )));
        defosc_radial_free(h);

        let mut bad: *mut DefoscRadial = ptr::null_mut();
        assert!(!ok(defosc_radial_new(1, 0, 0.05, 0.05, 0.0, &mut bad)));
        assert!(bad.is_null());
    }
}

#[test]
fn generated_header_covers_the_surface() {
    let header = include_str!("../include/defosc.h");
    for sym in [
        "defosc_version",
        "defosc_last_error",
        "defosc_osc1d_new",
        "defosc_osc1d_free",
        "defosc_osc1d_energy",
        "defosc_osc1d_base_params",
        "defosc_radial_new",
        "defosc_radial_free",
        "defosc_radial_energy",
        "defosc_radial_sample",
        "defosc_energy_1d",
        "DEFOSC_STATUS_OK",
        "DEFOSC_STATUS_CONVERGENCE",
    ] {
        assert!(header.contains(sym), "header misses {sym}");
    }
}

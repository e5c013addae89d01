//! Randomized invariants. Everything here is a closed-form identity or
//! a structural guarantee, so the tolerances are tight and the case
//! counts can stay modest.

use proptest::prelude::*;

use defosc::bargmann::excited_state;
use defosc::deform1d::{
    derive_params, energy, energy_telescoped, field_correction, partner_coeffs, Deform1DParams,
};
use defosc::qcalc::{qbinomial, qderiv, QPolynomial};
use defosc::radial::{radial_energy, radial_wavefunction, RadialProblem};

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cfg(64))]

    // q-Pascal rule: [n; m] = [n-1; m-1] + q^m [n-1; m]
    #[test]
    fn q_binomials_obey_the_pascal_rule(
        n in 2u32..18,
        mfrac in 0.0f64..1.0,
        q in 1.01f64..3.0,
    ) {
        let m = 1 + ((mfrac * (n - 1) as f64) as u32).min(n - 2);
        let whole = qbinomial(n, m, q).unwrap();
        let left = qbinomial(n - 1, m - 1, q).unwrap();
        let right = qbinomial(n - 1, m, q).unwrap();
        let rebuilt = left + q.powi(m as i32) * right;
        prop_assert!((whole - rebuilt).abs() <= 1.0e-11 * whole.abs());
    }

    // D_q agrees with its defining difference quotient on random polynomials
    #[test]
    fn q_derivative_is_the_difference_quotient(
        coeffs in proptest::collection::vec(-2.0f64..2.0, 1..8),
        q in 1.1f64..2.5,
        xi in 0.1f64..1.5,
    ) {
        let p = QPolynomial::from_real(q, &coeffs);
        let quotient = (p.eval((q * xi).into()) - p.eval(xi.into())) / ((q - 1.0) * xi);
        let termwise = qderiv(&p).eval(xi.into());
        let scale = coeffs.iter().map(|c| c.abs()).fold(1.0, f64::max);
        prop_assert!((quotient - termwise).norm() <= 1.0e-11 * scale);
    }

    // the telescoped hierarchy sum and the closed spectrum formula are
    // the same function
    #[test]
    fn telescoped_energy_equals_the_closed_form(
        alpha in 0.01f64..0.6,
        beta in 0.01f64..0.6,
        efield in -1.5f64..1.5,
        n in 0u32..12,
    ) {
        let d = derive_params(&Deform1DParams::new(alpha, beta, efield).unwrap()).unwrap();
        let closed = energy(&d, n).unwrap();
        let tele = energy_telescoped(&d, n).unwrap();
        prop_assert!((closed - tele).abs() <= 1.0e-12 * closed.abs().max(1.0));
    }

    // without the field the spectrum cannot tell alpha from beta
    #[test]
    fn field_free_spectrum_is_deformation_symmetric(
        alpha in 0.01f64..0.6,
        beta in 0.01f64..0.6,
        n in 0u32..10,
    ) {
        let ab = derive_params(&Deform1DParams::new(alpha, beta, 0.0).unwrap()).unwrap();
        let ba = derive_params(&Deform1DParams::new(beta, alpha, 0.0).unwrap()).unwrap();
        let ea = energy(&ab, n).unwrap();
        let eb = energy(&ba, n).unwrap();
        prop_assert!((ea - eb).abs() <= 1.0e-11 * ea.abs());
    }

    // the field correction dies away monotonically up the ladder
    #[test]
    fn field_corrections_decay_monotonically(
        alpha in 0.02f64..0.5,
        beta in 0.02f64..0.5,
        efield in 0.1f64..1.2,
    ) {
        let d = derive_params(&Deform1DParams::new(alpha, beta, efield).unwrap()).unwrap();
        let mut prev = field_correction(&d, 0).abs();
        for n in 1..=10u32 {
            let cur = field_correction(&d, n).abs();
            prop_assert!(cur <= prev * (1.0 + 1.0e-12), "n = {n}: {cur} > {prev}");
            prev = cur;
        }
    }

    // partner data stays on the physical branch and its ratios are
    // redundant encodings of (a_i, b_i)
    #[test]
    fn partner_coefficients_stay_consistent(
        alpha in 0.01f64..0.5,
        beta in 0.01f64..0.5,
        efield in -1.0f64..1.0,
        i in 0u32..7,
    ) {
        let d = derive_params(&Deform1DParams::new(alpha, beta, efield).unwrap()).unwrap();
        let pc = partner_coeffs(&d, i).unwrap();
        prop_assert!(pc.a_i > 0.0 && pc.b_i > 0.0);
        prop_assert!((pc.mass_ratio * pc.a_i - 1.0).abs() <= 1.0e-12);
        prop_assert!(
            (pc.freq_ratio * pc.freq_ratio - pc.a_i * pc.b_i).abs()
                <= 1.0e-12 * (pc.a_i * pc.b_i)
        );
    }

    // excited states come back unit-normalized wherever the expansion
    // converges
    #[test]
    fn bargmann_states_are_normalized(
        q in 1.1f64..2.0,
        t in -0.7f64..0.7,
        z in -0.8f64..0.8,
        n in 0u32..6,
    ) {
        let st = excited_state(q, t, z, n, 96).unwrap();
        prop_assert!((st.coeffs.norm() - 1.0).abs() <= 1.0e-10);
        prop_assert!(st.tail <= 1.0e-10);
    }

    // conventional radial levels depend on N = 2n + l alone
    #[test]
    fn conventional_radial_levels_are_degenerate(
        dim in 2u32..7,
        n in 1u32..5,
        l in 0u32..5,
    ) {
        let rp = RadialProblem::new(dim, l, 0.0, 0.0, 0.0).unwrap();
        let (te_a, e_a) = radial_energy(&rp, n, l);
        let (te_b, e_b) = radial_energy(&rp, n - 1, l + 2);
        prop_assert_eq!(te_a, te_b);
        prop_assert_eq!(e_a, e_b);
    }

    // any deformation splits that degeneracy
    #[test]
    fn deformation_splits_the_radial_degeneracy(
        dim in 2u32..5,
        beta in 0.01f64..0.3,
    ) {
        let rp = RadialProblem::new(dim, 0, beta, 0.0, 0.0).unwrap();
        let (te_a, _) = radial_energy(&rp, 1, 0);
        let (te_b, _) = radial_energy(&rp, 0, 2);
        prop_assert!((te_a - te_b).abs() > 1.0e-6);
    }

    // the measure weight never reaches chi
    #[test]
    fn chi_ignores_the_weight_parameter(
        gamma_w in -2.0f64..2.0,
        p in 0.05f64..4.0,
        n in 0u32..4,
    ) {
        let plain = RadialProblem::new(3, 1, 0.05, 0.03, 0.0).unwrap();
        let weighted = RadialProblem::new(3, 1, 0.05, 0.03, gamma_w).unwrap();
        let s0 = radial_wavefunction(&plain, n, 1).unwrap();
        let s1 = radial_wavefunction(&weighted, n, 1).unwrap();
        prop_assert_eq!(s0.chi(p), s1.chi(p));
    }
}

// the field-free symmetry does not survive a field: a fixed witness
#[test]
fn field_breaks_the_deformation_symmetry() {
    let ab = derive_params(&Deform1DParams::new(0.1, 0.3, 0.5).unwrap()).unwrap();
    let ba = derive_params(&Deform1DParams::new(0.3, 0.1, 0.5).unwrap()).unwrap();
    let ea = energy(&ab, 2).unwrap();
    let eb = energy(&ba, 2).unwrap();
    assert!((ea - eb).abs() > 1.0e-4, "symmetry unexpectedly held: {ea} vs {eb}");
}

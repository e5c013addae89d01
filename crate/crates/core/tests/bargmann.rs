//! Bargmann-representation machinery: the two independent ground-state
//! expansions, the raising recursion, closed-form prefactors, and the
//! non-factorization witness that separates the deformed polynomials
//! from a plain product form.

use num_complex::Complex64;

use defosc::bargmann::{
    anp, coeffs_from_closed_form, excited_state, ground_coeffs, ground_coeffs_anp, lambda_mu,
    pn_closed, pn_recursive, shifted_params,
};
use defosc::deform1d::{derive_params, Deform1DParams};
use defosc::qcalc::{qfactorial, QPolynomial};
use defosc::Error;

const SAMPLES: [(f64, f64, f64); 5] = [
    (1.48, -0.102, 0.2076), // field-deformed, t < 0
    (1.4, 0.25, 0.3),       // t > 0
    (1.9, 0.6, -0.4),       // strong deformation
    (1.3, 0.0, 0.5),        // t = 0, pure shift
    (1.6, -0.3, 0.0),       // z = 0, pure deformation
];

#[test]
fn lambda_mu_are_the_quadratic_roots() {
    for &(q, t, z) in &SAMPLES {
        let (l, m) = lambda_mu(q, t, z);
        let sum = l + m;
        let prod = l * m;
        assert!((sum - Complex64::new(z, 0.0)).norm() <= 1.0e-14);
        assert!((prod - Complex64::new(t / (q - 1.0), 0.0)).norm() <= 1.0e-14);
    }
    // complex pair when the discriminant turns negative
    let (l, m) = lambda_mu(1.5, 0.5, 0.1);
    assert!(l.im != 0.0);
    assert!((l - m.conj()).norm() <= 1.0e-14);
}

#[test]
fn ground_state_two_paths_agree() {
    for &(q, t, z) in &SAMPLES {
        let a = ground_coeffs(q, t, z, 48).unwrap();
        let b = ground_coeffs_anp(q, t, z, 48).unwrap();
        let mut worst = 0.0f64;
        for m in 0..a.len() {
            worst = worst.max((a.entry(m) - b.entry(m)).norm());
        }
        assert!(worst <= 1.0e-13, "(q, t, z) = ({q}, {t}, {z}): {worst}");
        assert!((a.norm() - 1.0).abs() <= 1.0e-13);
    }
}

#[test]
fn ground_state_at_t_zero_is_a_q_coherent_vector() {
    // c_m is proportional to z^m / sqrt([m]_q!) when t = 0
    let (q, z) = (1.3, 0.5);
    let c = ground_coeffs(q, 0.0, z, 48).unwrap();
    let scale = c.entry(0).re;
    for m in 0..=10u32 {
        let expect = scale * z.powi(m as i32) / qfactorial(m, q).unwrap().sqrt();
        assert!((c.entry(m as usize).re - expect).abs() <= 1.0e-13);
        assert!(c.entry(m as usize).im.abs() <= 1.0e-15);
    }
}

#[test]
fn nested_sum_coefficients_match_hand_values() {
    // a_{n,0} counts nothing: empty product convention
    assert!((anp(5, 0, 1.7).unwrap() - 1.0).abs() <= 1.0e-14);
    // a_{2,1} = [1]
    assert!((anp(2, 1, 1.7).unwrap() - 1.0).abs() <= 1.0e-13);
    // a_{4,1} = [1] + [2] + [3]
    let q = 1.7f64;
    let expect = 1.0 + (1.0 + q) + (1.0 + q + q * q);
    assert!((anp(4, 1, q).unwrap() - expect).abs() <= 1.0e-12);
    // a_{4,2} = [3] [1]
    let expect = (1.0 + q + q * q) * 1.0;
    assert!((anp(4, 2, q).unwrap() - expect).abs() <= 1.0e-12);
    // out of range
    assert!(matches!(anp(3, 2, q), Err(Error::Domain(_))));
}

#[test]
fn shifted_parameters_telescope() {
    let (q, t, z) = (1.48, -0.102, 0.2076);
    let mut tc = t;
    let mut zc = z;
    for n in 1..=12u32 {
        let (t1, z1) = shifted_params(q, tc, zc, 1);
        let (tn, zn) = shifted_params(q, t, z, n);
        assert!((t1 - tn).abs() <= 1.0e-15);
        assert!((z1 - zn).abs() <= 1.0e-13 * zn.abs().max(1.0));
        tc = t1;
        zc = z1;
    }
}

#[test]
fn closed_prefactors_match_the_recursion() {
    for &(q, t, z) in &SAMPLES {
        for n in 1..=3u32 {
            let rec = pn_recursive(q, t, z, n).unwrap();
            let closed = pn_closed(n, q, t, z).unwrap();
            let scale = closed
                .coeffs()
                .iter()
                .map(|c| c.norm())
                .fold(0.0f64, f64::max);
            assert!(
                rec.max_abs_diff(&closed) <= 1.0e-13 * scale.max(1.0),
                "n = {n} at (q, t, z) = ({q}, {t}, {z})"
            );
        }
    }
    assert!(matches!(pn_closed(4, 1.4, 0.2, 0.1), Err(Error::Domain(_))));
}

#[test]
fn prefactor_at_t_zero_collapses_to_a_product() {
    // P_3(q, 0, z; xi) = (xi - z)(xi - z/q)(xi - z/q^2)
    let (q, z) = (1.45, 0.37);
    let p3 = pn_recursive(q, 0.0, z, 3).unwrap();
    let mut product = QPolynomial::one(q);
    for k in 0..3i32 {
        let factor = QPolynomial::from_real(q, &[-z / q.powi(k), 1.0]);
        product = product.mul_trunc(&factor, 8);
    }
    assert!(p3.max_abs_diff(&product) <= 1.0e-14);
}

#[test]
fn deformed_prefactor_does_not_factor_through_the_geometric_ladder() {
    // with t != 0 the quadratic prefactor stops being (xi - r)(xi - r/q):
    // the root ratio leaves {q, 1/q}
    let (q, t, z) = (1.4, 0.25, 0.3);
    let p2 = pn_closed(2, q, t, z).unwrap();
    let c = p2.coeffs();
    let (c0, c1, c2) = (c[0].re, c[1].re, c[2].re);
    let disc = c1 * c1 - 4.0 * c0 * c2;
    assert!(disc > 0.0, "witness point has real roots");
    let r1 = (-c1 + disc.sqrt()) / (2.0 * c2);
    let r2 = (-c1 - disc.sqrt()) / (2.0 * c2);
    let ratio = (r1 / r2).abs().max((r2 / r1).abs());
    assert!(
        (ratio - q).abs() > 1.0e-2,
        "ratio {ratio} collapsed onto q = {q}"
    );

    // control: at t = 0 the ratio is exactly q
    let p2 = pn_closed(2, q, 0.0, z).unwrap();
    let c = p2.coeffs();
    let (c0, c1, c2) = (c[0].re, c[1].re, c[2].re);
    let disc = (c1 * c1 - 4.0 * c0 * c2).sqrt();
    let r1 = (-c1 + disc) / (2.0 * c2);
    let r2 = (-c1 - disc) / (2.0 * c2);
    let ratio = (r1 / r2).abs().max((r2 / r1).abs());
    assert!((ratio - q).abs() <= 1.0e-12);
}

#[test]
fn excited_states_come_out_normalized() {
    for &(q, t, z) in &SAMPLES {
        for n in 0..=8u32 {
            let st = excited_state(q, t, z, n, 64).unwrap();
            assert!(
                (st.coeffs.norm() - 1.0).abs() <= 1.0e-12,
                "n = {n} at (q, t, z) = ({q}, {t}, {z})"
            );
            assert!(st.tail <= 1.0e-12);
        }
    }
}

#[test]
fn excited_states_of_one_problem_are_mutually_orthogonal() {
    let (q, t, z) = (1.48, -0.102, 0.2076);
    let states: Vec<_> = (0..=4u32)
        .map(|n| excited_state(q, t, z, n, 64).unwrap())
        .collect();
    for i in 0..states.len() {
        for j in 0..i {
            let ov = states[i].coeffs.overlap(&states[j].coeffs).norm();
            assert!(ov <= 1.0e-11, "({i}, {j}) overlap {ov}");
        }
    }
}

#[test]
fn closed_form_reconstruction_matches_the_recursion() {
    let p = Deform1DParams::new(0.15, 0.25, 0.4).unwrap();
    let d = derive_params(&p).unwrap();
    for n in 0..=3u32 {
        let st = excited_state(d.q, d.t, d.z, n, 48).unwrap();
        let rebuilt = coeffs_from_closed_form(&st, 48).unwrap();
        let mut worst = 0.0f64;
        for m in 0..st.coeffs.len().min(rebuilt.len()) {
            worst = worst.max((st.coeffs.entry(m) - rebuilt.entry(m)).norm());
        }
        assert!(worst <= 1.0e-10, "n = {n}: {worst}");
    }
}

#[test]
fn sign_convention_puts_the_dominant_entry_on_the_positive_axis() {
    let c = ground_coeffs(1.48, -0.102, 0.2076, 48).unwrap();
    let mut flipped = c.clone();
    flipped.scale(-1.0);
    let fixed = flipped.sign_fixed();
    let dominant = (0..fixed.len())
        .max_by(|&a, &b| {
            fixed
                .entry(a)
                .norm()
                .partial_cmp(&fixed.entry(b).norm())
                .unwrap()
        })
        .unwrap();
    assert!(fixed.entry(dominant).re > 0.0);
}

#[test]
fn truncation_domain_guards() {
    // the excited builder refuses an m_cap that cannot hold the state
    assert!(matches!(
        excited_state(1.4, 0.2, 0.1, 10, 32),
        Err(Error::Domain(_))
    ));
    // base validation: q must exceed 1, |t| must stay below 1
    assert!(ground_coeffs(0.9, 0.1, 0.0, 48).is_err());
    assert!(ground_coeffs(1.4, 1.2, 0.0, 48).is_err());
}

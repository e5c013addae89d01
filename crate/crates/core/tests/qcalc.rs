//! q-number and q-polynomial machinery against hand values and
//! classical identities.

use num_complex::Complex64;

use defosc::qcalc::{
    qbinomial, qderiv, qexp_coeffs, qexp_product, qfactorial, qnumber, qpochhammer, QPolynomial,
};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[test]
fn qnumber_hand_values() {
    // [3]_2 = 1 + 2 + 4
    assert!((qnumber(3, 2.0) - 7.0).abs() <= 1.0e-14);
    assert_eq!(qnumber(0, 1.7), 0.0);
    assert!((qnumber(1, 1.7) - 1.0).abs() <= 1.0e-15);
    // classical limit is n, also through the q = 1 branch point
    for n in 0..20u32 {
        assert_eq!(qnumber(n, 1.0), n as f64);
        assert!((qnumber(n, 1.0 + 1.0e-13) - n as f64).abs() <= 1.0e-9 * (n as f64).max(1.0));
    }
}

#[test]
fn qnumber_recurrence() {
    // [n+1] = 1 + q [n]
    for &q in &[1.2, 1.48031, 2.0, 3.5] {
        for n in 0..30u32 {
            let lhs = qnumber(n + 1, q);
            let rhs = 1.0 + q * qnumber(n, q);
            assert!((lhs - rhs).abs() <= 1.0e-12 * rhs.abs());
        }
    }
}

#[test]
fn qfactorial_hand_values() {
    assert!((qfactorial(3, 2.0).unwrap() - 21.0).abs() <= 1.0e-12); // 1 * 3 * 7
    assert!((qfactorial(4, 1.0).unwrap() - 24.0).abs() <= 1.0e-12);
    // overflow is reported, not silently saturated
    assert!(qfactorial(800, 3.0).is_err());
}

#[test]
fn qbinomial_gaussian_values() {
    // Gaussian binomial [4 2]_2 = (15 * 7)/(3 * 1)
    assert!((qbinomial(4, 2, 2.0).unwrap() - 35.0).abs() <= 1.0e-10);
    // symmetry and endpoints
    for &q in &[1.3, 2.0] {
        for n in 0..10u32 {
            assert!((qbinomial(n, 0, q).unwrap() - 1.0).abs() <= 1.0e-13);
            assert!((qbinomial(n, n, q).unwrap() - 1.0).abs() <= 1.0e-13);
            for m in 0..=n {
                let a = qbinomial(n, m, q).unwrap();
                let b = qbinomial(n, n - m, q).unwrap();
                assert!((a - b).abs() <= 1.0e-12 * a.abs());
            }
        }
    }
}

#[test]
fn qpochhammer_hand_value() {
    // (2; 2)_3 = (1 - 2)(1 - 4)(1 - 8)
    let v = qpochhammer(c(2.0), 2.0, 3);
    assert!((v - c(-21.0)).norm() <= 1.0e-12);
    assert_eq!(qpochhammer(c(0.3), 1.5, 0), c(1.0));
}

#[test]
fn polynomial_arithmetic() {
    let q = 1.4;
    let one_plus = QPolynomial::from_real(q, &[1.0, 1.0]);
    let one_minus = QPolynomial::from_real(q, &[1.0, -1.0]);
    let prod = one_plus.mul_trunc(&one_minus, 8);
    let expect = QPolynomial::from_real(q, &[1.0, 0.0, -1.0]);
    assert!(prod.max_abs_diff(&expect) <= 1.0e-15);
    assert_eq!(prod.degree(), 2);

    // scale_arg rescales the argument: p(s xi)
    let p = QPolynomial::from_real(q, &[2.0, 3.0, 5.0]);
    let ps = p.scale_arg(c(2.0));
    let xi = c(0.7);
    assert!((ps.eval(xi) - p.eval(c(1.4))).norm() <= 1.0e-14);

    // trailing zeros are trimmed on construction
    let t = QPolynomial::from_real(q, &[1.0, 2.0, 0.0, 0.0]);
    assert_eq!(t.degree(), 1);
}

#[test]
fn qderiv_monomials_and_difference_quotient() {
    let q = 1.6;
    // D_q xi^n = [n] xi^(n-1)
    let p = QPolynomial::from_real(q, &[0.0, 0.0, 0.0, 1.0]);
    let dp = qderiv(&p);
    let expect = QPolynomial::from_real(q, &[0.0, 0.0, qnumber(3, q)]);
    assert!(dp.max_abs_diff(&expect) <= 1.0e-14);

    // difference-quotient definition at a generic point
    let p = QPolynomial::from_real(q, &[0.3, -1.1, 0.8, 2.0, -0.4]);
    let dp = qderiv(&p);
    for &x in &[0.35, -0.8, 1.7] {
        let xi = c(x);
        let quotient = (p.eval(xi * q) - p.eval(xi)) / (xi * (q - 1.0));
        assert!((dp.eval(xi) - quotient).norm() <= 1.0e-12);
    }
}

#[test]
fn qexp_coefficients_and_classical_limit() {
    let (e, tail) = qexp_coeffs(c(0.8), 1.5, 30);
    assert!(tail <= 1.0e-12);
    for m in 0..=8usize {
        let expect = 0.8f64.powi(m as i32) / qfactorial(m as u32, 1.5).unwrap();
        assert!((e.coeff(m) - c(expect)).norm() <= 1.0e-14 * expect.max(1.0));
    }
    // q -> 1 recovers exp: coefficient m -> 1/m!
    let (e1, _) = qexp_coeffs(c(1.0), 1.0 + 1.0e-12, 20);
    let mut fact = 1.0;
    for m in 0..=10usize {
        if m > 0 {
            fact *= m as f64;
        }
        assert!((e1.coeff(m).re - 1.0 / fact).abs() <= 1.0e-9 / fact);
    }
}

#[test]
fn qexp_product_matches_series_multiplication() {
    let q = 1.5;
    let (ea, _) = qexp_coeffs(c(0.4), q, 24);
    let (eb, _) = qexp_coeffs(c(-0.7), q, 24);
    let direct = ea.mul_trunc(&eb, 24);
    let packaged = qexp_product(c(0.4), c(-0.7), q, 24);
    assert!(direct.max_abs_diff(&packaged) <= 1.0e-14);
}

#[test]
fn qexp_conjugate_product_collapses_base_to_q_squared() {
    // E_q(i w xi) E_q(-i w xi) with w^2 = t/(q - 1) telescopes into
    // E_{q^2} of (t/(q + 1)) xi^2: odd coefficients cancel and the
    // even ones carry q^2-factorials.
    for &(q, t) in &[(1.5f64, 0.3f64), (1.3, 0.15), (2.0, 0.7)] {
        let w = (t / (q - 1.0)).sqrt();
        let prod = qexp_product(Complex64::new(0.0, w), Complex64::new(0.0, -w), q, 40);
        for m in 0..=40usize {
            let got = prod.coeff(m);
            if m % 2 == 1 {
                assert!(got.norm() <= 1.0e-15, "odd coefficient {m} at q={q}");
            } else {
                let k = (m / 2) as u32;
                let expect = (t / (q + 1.0)).powi(k as i32) / qfactorial(k, q * q).unwrap();
                assert!(
                    (got - c(expect)).norm() <= 1.0e-13 * expect.abs().max(1.0),
                    "even coefficient {m} at q={q}"
                );
            }
        }
    }
}

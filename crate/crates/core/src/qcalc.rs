//! q-deformed special-function kernel.
//!
//! Everything downstream is built on the q-number
//!
//! ```text
//! [n]_q = (q^n - 1)/(q - 1),    [n]_1 = n
//! ```
//!
//! together with q-factorials, q-binomial coefficients, q-Pochhammer
//! symbols, truncated q-exponential series
//!
//! ```text
//! E_q(xi) = sum_n xi^n/[n]_q!
//! ```
//!
//! and the q-difference operator
//!
//! ```text
//! D_q psi(xi) = [psi(q xi) - psi(xi)] / [(q - 1) xi]
//! ```
//!
//! which acts termwise as D_q xi^m = [m]_q xi^{m-1}.
//!
//! Series objects are truncated power series in xi with complex
//! coefficients (`QPolynomial`); q = 1 is supported as an analytic
//! limit for the scalar functions, while 0 < q < 1 conventions are out
//! of scope throughout.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// The q-number [n]_q = (q^n - 1)/(q - 1), with the q = 1 limit [n]_1 = n
/// handled analytically.
///
/// Evaluated as expm1(n ln1p(q-1))/(q-1), which stays fully accurate for
/// q arbitrarily close to 1.
pub fn qnumber(n: u32, q: f64) -> f64 {
    debug_assert!(q > 0.0, "qnumber requires q > 0");
    let d = q - 1.0;
    if d == 0.0 {
        return n as f64;
    }
    ((n as f64) * d.ln_1p()).exp_m1() / d
}

/// ln [n]_q for n >= 1. Diverges to -inf at n = 0.
pub fn ln_qnumber(n: u32, q: f64) -> f64 {
    qnumber(n, q).ln()
}

/// The q-factorial [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
///
/// Errors with `Overflow` when the product leaves f64 range; use
/// [`ln_qfactorial`] in that regime.
pub fn qfactorial(n: u32, q: f64) -> Result<f64> {
    let mut acc = 1.0f64;
    for k in 1..=n {
        acc *= qnumber(k, q);
        if !acc.is_finite() {
            return Err(Error::Overflow(format!("[{n}]_q! at q = {q}")));
        }
    }
    Ok(acc)
}

/// ln [n]_q!, safe at any n where the individual q-numbers are finite.
pub fn ln_qfactorial(n: u32, q: f64) -> f64 {
    (1..=n).map(|k| ln_qnumber(k, q)).sum()
}

/// q-binomial coefficient [n over m]_q = [n]_q!/([m]_q! [n-m]_q!),
/// evaluated by the cancellation-free product of ratios.
pub fn qbinomial(n: u32, m: u32, q: f64) -> Result<f64> {
    if m > n {
        return Err(Error::Domain(format!("qbinomial: m = {m} > n = {n}")));
    }
    let m = m.min(n - m);
    let mut acc = 1.0f64;
    for i in 1..=m {
        acc *= qnumber(n - m + i, q) / qnumber(i, q);
    }
    if !acc.is_finite() {
        return Err(Error::Overflow(format!("qbinomial({n}, {m}) at q = {q}")));
    }
    Ok(acc)
}

/// q-Pochhammer symbol (a; q)_n = prod_{j=0}^{n-1} (1 - a q^j).
pub fn qpochhammer(a: Complex64, q: f64, n: u32) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let mut acc = one;
    let mut qj = 1.0f64;
    for _ in 0..n {
        acc *= one - a * qj;
        qj *= q;
    }
    acc
}

/// Truncated power series sum_m c_m xi^m on a fixed base q.
///
/// Trailing zero coefficients are trimmed at construction so that equal
/// polynomials have equal coefficient vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct QPolynomial {
    q: f64,
    coeffs: Vec<Complex64>,
}

impl QPolynomial {
    pub fn new(q: f64, mut coeffs: Vec<Complex64>) -> Self {
        debug_assert!(q >= 1.0, "series objects require q >= 1");
        while coeffs.len() > 1 && coeffs.last() == Some(&Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        QPolynomial { q, coeffs }
    }

    pub fn from_real(q: f64, coeffs: &[f64]) -> Self {
        Self::new(q, coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero(q: f64) -> Self {
        Self::new(q, vec![])
    }

    pub fn one(q: f64) -> Self {
        Self::new(q, vec![Complex64::new(1.0, 0.0)])
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of xi^m; zero beyond the stored degree.
    pub fn coeff(&self, m: usize) -> Complex64 {
        self.coeffs.get(m).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn eval(&self, xi: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * xi + c;
        }
        acc
    }

    /// Largest |Im c_m| over the stored coefficients.
    pub fn imag_residue(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    /// Real parts of the coefficients; callers assert `imag_residue`
    /// first where reality is expected.
    pub fn real_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.q, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// The polynomial p(s xi), i.e. c_m -> c_m s^m.
    pub fn scale_arg(&self, s: Complex64) -> Self {
        let mut f = Complex64::new(1.0, 0.0);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            out.push(c * f);
            f *= s;
        }
        Self::new(self.q, out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (m, slot) in out.iter_mut().enumerate() {
            *slot = self.coeff(m) + other.coeff(m);
        }
        Self::new(self.q, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Cauchy product truncated at degree `cap`.
    pub fn mul_trunc(&self, other: &Self, cap: usize) -> Self {
        let mut out = vec![Complex64::new(0.0, 0.0); cap + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > cap {
                break;
            }
            let hi = (cap - i).min(other.coeffs.len() - 1);
            for (j, slot) in out[i..=i + hi].iter_mut().enumerate() {
                *slot += a * other.coeffs[j];
            }
        }
        Self::new(self.q, out)
    }

    /// Coefficientwise max |self - other|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|m| (self.coeff(m) - other.coeff(m)).norm())
            .fold(0.0, f64::max)
    }
}

/// Termwise q-derivative: D_q xi^m = [m]_q xi^{m-1}.
///
/// On polynomials this equals the difference-quotient definition
/// [p(q xi) - p(xi)]/[(q-1) xi] exactly.
pub fn qderiv(p: &QPolynomial) -> QPolynomial {
    let q = p.q();
    if p.degree() == 0 {
        return QPolynomial::zero(q);
    }
    let out = (1..=p.degree())
        .map(|m| p.coeff(m) * qnumber(m as u32, q))
        .collect();
    QPolynomial::new(q, out)
}

/// Truncated q-exponential E_q(a xi) up to degree `m_cap`, with the
/// first omitted coefficient magnitude |a|^{M+1}/[M+1]_q! reported as a
/// tail bound.
pub fn qexp_coeffs(a: Complex64, q: f64, m_cap: usize) -> (QPolynomial, f64) {
    let mut coeffs = Vec::with_capacity(m_cap + 1);
    let mut c = Complex64::new(1.0, 0.0);
    coeffs.push(c);
    for k in 1..=m_cap {
        c = c * a / qnumber(k as u32, q);
        coeffs.push(c);
    }
    let tail = (c * a).norm() / qnumber(m_cap as u32 + 1, q);
    (QPolynomial::new(q, coeffs), tail)
}

/// Truncated product E_q(a xi) E_q(b xi) up to degree `m_cap`.
///
/// The coefficients are real when b is the conjugate of a.
pub fn qexp_product(a: Complex64, b: Complex64, q: f64, m_cap: usize) -> QPolynomial {
    let (pa, _) = qexp_coeffs(a, q, m_cap);
    let (pb, _) = qexp_coeffs(b, q, m_cap);
    pa.mul_trunc(&pb, m_cap)
}

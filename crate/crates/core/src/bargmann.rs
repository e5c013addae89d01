//! Eigenfunctions of the deformed oscillator in the q-Bargmann
//! representation, where number states are monomials
//! phi_m(xi) = xi^m/sqrt([m]_q!) and the Hamiltonian acts through the
//! q-difference operator.
//!
//! Ground state:
//!
//! ```text
//! psi_0(xi) = N_0 E_q(lambda xi) E_q(mu xi)
//! lambda, mu = z/2 +- sqrt(z^2/4 - t/(q-1))
//! ```
//!
//! a complex-conjugate pair whenever the discriminant is negative; the
//! Fock coefficients are real either way. Excited states follow from
//! the raising recursion with shifted parameters
//!
//! ```text
//! t_1 = t/q,   z_1 = (z/q)(1 - t)/(1 - t/q)
//! psi_{n+1}(q,t,z) = C_{n+1}^{-1/2} (xi - t D_q - z) psi_n(q,t_1,z_1)
//! C_{n+1} = [n+1]_q (1 - t^2/q^{n+1}) [1 + (q-1) z^2 q^{-n-1} (1 - t/q^{n+1})^{-2}]
//! ```
//!
//! which lands exactly normalized: no renormalization is applied, and
//! the unit-norm outcome is a correctness invariant. The same descent
//! builds the polynomial prefactor of the closed form
//!
//! ```text
//! psi_n(q,t,z) = N_n P_n(xi) E_q(lambda_n xi) E_q(mu_n xi)
//! ```
//!
//! with (lambda_n, mu_n) evaluated at the n-fold shifted (t_n, z_n).
//! P_n does not factorize into shifted linear factors once t != 0.
//!
//! Everything here works in the coefficient space over phi_m, truncated
//! at degree M; coefficients decay superexponentially, so modest M
//! suffices and the discarded tail is tracked.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qcalc::{ln_qfactorial, qderiv, qexp_product, qnumber, QPolynomial};

/// Exponent pair of the ground state,
/// lambda mu = t/(q-1), lambda + mu = z.
pub fn lambda_mu(q: f64, t: f64, z: f64) -> (Complex64, Complex64) {
    let disc = 0.25 * z * z - t / (q - 1.0);
    if disc >= 0.0 {
        let d = disc.sqrt();
        (
            Complex64::new(0.5 * z + d, 0.0),
            Complex64::new(0.5 * z - d, 0.0),
        )
    } else {
        let d = (-disc).sqrt();
        (Complex64::new(0.5 * z, d), Complex64::new(0.5 * z, -d))
    }
}

/// Coefficient a_{n,p} of the ground-state expansion
/// c_n [n]_q!^{1/2} = sum_p a_{n,p} z^{n-2p} t^p, given by the p-fold
/// nested sum
///
/// ```text
/// a_{n,p} = sum_{r_1=2p-1}^{n-1} [r_1] sum_{r_2=2p-3}^{r_1-2} [r_2] ...
///           sum_{r_p=1}^{r_{p-1}-2} [r_p]
/// ```
///
/// evaluated by dynamic programming over the upper limits (the naive
/// recursion is exponential in p). a_{n,0} = 1.
pub fn anp(n: u32, p: u32, q: f64) -> Result<f64> {
    if 2 * p > n {
        return Err(Error::Domain(format!("anp: p = {p} exceeds n/2 with n = {n}")));
    }
    if p == 0 {
        return Ok(1.0);
    }
    let nn = n as usize;
    // f[hi + 1] holds the (j+1)-st nested sum with upper limit hi;
    // index 0 is the empty hi = -1 case. Innermost level starts at 1.
    let mut f = vec![1.0f64; nn + 1];
    for j in (1..=p).rev() {
        let lo = (2 * (p - j) + 1) as usize;
        let mut g = vec![0.0f64; nn + 1];
        for u in 1..=nn {
            let r = u - 1; // summation variable value at this slot
            let term = if r >= lo {
                qnumber(r as u32, q) * f[u - 2]
            } else {
                0.0
            };
            g[u] = g[u - 1] + term;
        }
        f = g;
    }
    let a = f[nn];
    if !a.is_finite() {
        return Err(Error::Overflow(format!("anp({n}, {p}) at q = {q}")));
    }
    Ok(a)
}

/// Fock-coefficient vector over the phi_m basis at a fixed base q.
///
/// Entries are complex for generality, but every builder in this module
/// produces real coefficients up to roundoff when (q, t, z) are real;
/// `imag_residue` is the tripwire.
#[derive(Debug, Clone)]
pub struct CoeffVector {
    q: f64,
    entries: Vec<Complex64>,
}

impl CoeffVector {
    pub fn new(q: f64, entries: Vec<Complex64>) -> Self {
        CoeffVector { q, entries }
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn entry(&self, m: usize) -> Complex64 {
        self.entries.get(m).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn imag_residue(&self) -> f64 {
        self.entries.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    /// Real parts; meaningful after an `imag_residue` check.
    pub fn real_entries(&self) -> Vec<f64> {
        self.entries.iter().map(|c| c.re).collect()
    }

    /// <self, other> = sum conj(c_m) d_m over the shared range.
    pub fn overlap(&self, other: &Self) -> Complex64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(c, d)| c.conj() * d)
            .sum()
    }

    /// Sign convention for comparisons: flips the vector so the entry
    /// of largest magnitude has positive real part.
    pub fn sign_fixed(mut self) -> Self {
        let mut best = 0usize;
        let mut mag = -1.0f64;
        for (m, c) in self.entries.iter().enumerate() {
            if c.norm() > mag {
                mag = c.norm();
                best = m;
            }
        }
        if self.entries.get(best).map(|c| c.re < 0.0).unwrap_or(false) {
            for c in &mut self.entries {
                *c = -*c;
            }
        }
        self
    }

    pub fn scale(&mut self, c: f64) {
        for v in &mut self.entries {
            *v *= c;
        }
    }
}

fn check_base(q: f64, t: f64) -> Result<()> {
    if !(q > 1.0) || !q.is_finite() {
        return Err(Error::Domain(format!("base q = {q} must satisfy q > 1")));
    }
    if !(t.abs() < 1.0) {
        return Err(Error::Domain(format!("shift parameter t = {t} must satisfy |t| < 1")));
    }
    Ok(())
}

/// Unnormalized coefficients c_0..c_{M+1} with c_0 = 1, by the
/// q-binomial expansion of E_q(lambda xi) E_q(mu xi):
///
/// ```text
/// c_n = [n]_q!^{-1/2} sum_m [n over m]_q lambda^m mu^{n-m}
/// ```
///
/// Every term is assembled as exp(log magnitude) times a unit phase,
/// with the 1/sqrt([n]!) absorbed into the log, so the giant
/// q-binomial and the tiny exponent powers never meet head-on. The
/// alternative (a multiplicative sweep of term ratios) overflows once
/// [n over n/2]_q outgrows f64 whenever |mu| = |lambda|, which is
/// every complex-root point and the whole z = 0 line.
fn ground_raw(q: f64, t: f64, z: f64, m_cap: usize) -> Vec<Complex64> {
    let (lambda, mu) = lambda_mu(q, t, z);
    let (rl, rm) = (lambda.norm(), mu.norm());
    if rl == 0.0 && rm == 0.0 {
        // undeformed-and-unshifted corner: the ground state is the vacuum
        let mut out = vec![Complex64::new(0.0, 0.0); m_cap + 2];
        out[0] = Complex64::new(1.0, 0.0);
        return out;
    }
    let lnfact: Vec<f64> = (0..=(m_cap as u32 + 1))
        .map(|n| ln_qfactorial(n, q))
        .collect();
    let unit_l = if rl > 0.0 { lambda / rl } else { Complex64::new(1.0, 0.0) };
    let unit_m = if rm > 0.0 { mu / rm } else { Complex64::new(1.0, 0.0) };
    let mut out = Vec::with_capacity(m_cap + 2);
    for n in 0..=(m_cap + 1) {
        let mut s = Complex64::new(0.0, 0.0);
        for m in 0..=n {
            // a vanished root contributes only through its zeroth power
            if (rl == 0.0 && m > 0) || (rm == 0.0 && m < n) {
                continue;
            }
            let ln_mag = m as f64 * if rl > 0.0 { rl.ln() } else { 0.0 }
                + (n - m) as f64 * if rm > 0.0 { rm.ln() } else { 0.0 }
                + 0.5 * lnfact[n]
                - lnfact[m]
                - lnfact[n - m];
            s += ln_mag.exp() * unit_l.powu(m as u32) * unit_m.powu((n - m) as u32);
        }
        out.push(s);
    }
    out
}

fn raw_to_coeffs(q: f64, raw: Vec<Complex64>) -> Result<CoeffVector> {
    let m_cap = raw.len() - 2;
    let head: f64 = raw[..=m_cap].iter().map(|c| c.norm_sqr()).sum();
    let extra = raw[m_cap + 1].norm_sqr();
    let tail = extra / (head + extra);
    if !(tail <= 1.0e-10) {
        return Err(Error::Truncation {
            tail,
            context: format!("ground-state coefficients at M = {m_cap}"),
        });
    }
    let inv = 1.0 / head.sqrt();
    Ok(CoeffVector::new(
        q,
        raw[..=m_cap].iter().map(|&c| c * inv).collect(),
    ))
}

/// Normalized ground-state coefficients c_0..c_M (q-binomial path).
/// Errors with `Truncation` if the discarded mass fraction exceeds
/// 1e-10.
pub fn ground_coeffs(q: f64, t: f64, z: f64, m_cap: usize) -> Result<CoeffVector> {
    check_base(q, t)?;
    assert!(m_cap >= 2);
    raw_to_coeffs(q, ground_raw(q, t, z, m_cap))
}

/// Normalized ground-state coefficients by the independent nested-sum
/// path c_n = [n]_q!^{-1/2} sum_p a_{n,p} z^{n-2p} t^p. Used to
/// cross-check the q-binomial path; the two agree to roundoff.
pub fn ground_coeffs_anp(q: f64, t: f64, z: f64, m_cap: usize) -> Result<CoeffVector> {
    check_base(q, t)?;
    assert!(m_cap >= 2);
    let mut raw = Vec::with_capacity(m_cap + 2);
    for n in 0..=(m_cap as u32 + 1) {
        let mut s = 0.0f64;
        for p in 0..=(n / 2) {
            s += anp(n, p, q)? * z.powi((n - 2 * p) as i32) * t.powi(p as i32);
        }
        raw.push(Complex64::new(s * (-0.5 * ln_qfactorial(n, q)).exp(), 0.0));
    }
    raw_to_coeffs(q, raw)
}

/// N_0(q, t, z): the normalization constant of
/// psi_0 = N_0 E_q(lambda xi) E_q(mu xi).
pub fn ground_norm(q: f64, t: f64, z: f64, m_cap: usize) -> Result<f64> {
    check_base(q, t)?;
    let raw = ground_raw(q, t, z, m_cap);
    let head: f64 = raw[..raw.len() - 1].iter().map(|c| c.norm_sqr()).sum();
    Ok(1.0 / head.sqrt())
}

/// One parameter shift: (t, z) -> (t/q, (z/q)(1-t)/(1-t/q)).
/// The n-fold composition telescopes to
/// t_n = t/q^n, z_n = z q^{-n} (1-t)/(1-t/q^n).
pub fn shifted_params(q: f64, t: f64, z: f64, n: u32) -> (f64, f64) {
    if n == 0 {
        return (t, z);
    }
    let qn = ((n as f64) * q.ln()).exp();
    (t / qn, z / qn * (1.0 - t) / (1.0 - t / qn))
}

/// Normalization factor C_k entering the raising step onto level k.
fn cfactor(q: f64, t: f64, z: f64, k: u32) -> f64 {
    let qk = ((k as f64) * q.ln()).exp();
    let w = 1.0 - t / qk;
    qnumber(k, q) * (1.0 - t * t / qk) * (1.0 + (q - 1.0) * z * z / (qk * w * w))
}

/// (xi - t D_q - z) on phi-basis coefficients:
/// out_m = sqrt([m]) c_{m-1} - t sqrt([m+1]) c_{m+1} - z c_m.
/// The raised component beyond the truncation degree is dropped; its
/// mass is controlled by the coefficient decay.
fn apply_raising(c: &[Complex64], q: f64, t: f64, z: f64) -> Vec<Complex64> {
    let m_len = c.len();
    let mut out = vec![Complex64::new(0.0, 0.0); m_len];
    for (m, slot) in out.iter_mut().enumerate() {
        let mut v = -z * c[m];
        if m > 0 {
            v += qnumber(m as u32, q).sqrt() * c[m - 1];
        }
        if m + 1 < m_len {
            v -= t * qnumber(m as u32 + 1, q).sqrt() * c[m + 1];
        }
        *slot = v;
    }
    out
}

/// Multiply a series by xi.
fn shift_up(p: &QPolynomial) -> QPolynomial {
    let mut coeffs = vec![Complex64::new(0.0, 0.0)];
    coeffs.extend_from_slice(p.coeffs());
    QPolynomial::new(p.q(), coeffs)
}

/// One step of the polynomial recursion, building the level-k
/// prefactor from the level-(k-1) prefactor at the shifted parameters:
///
/// ```text
/// P_k(q,t,z; xi) = (xi - z) P_{k-1}(q,t_1,z_1; xi)
///                - t (t_k xi + z_k) P_{k-1}(q,t_1,z_1; q xi)
///                - t D_q P_{k-1}(q,t_1,z_1; xi)
/// ```
///
/// (t_k, z_k) are the k-fold shifts of the current (t, z); along a
/// fixed descent they are the same pair for every level, namely the
/// target state's own shifted parameters.
fn p_step(
    prev: &QPolynomial,
    q: f64,
    t: f64,
    z: f64,
    t_deep: f64,
    z_deep: f64,
) -> QPolynomial {
    let prev_q = prev.scale_arg(Complex64::new(q, 0.0));
    let mut out = shift_up(prev);
    out = out.sub(&prev.scale(Complex64::new(z, 0.0)));
    out = out.sub(&shift_up(&prev_q).scale(Complex64::new(t * t_deep, 0.0)));
    out = out.sub(&prev_q.scale(Complex64::new(t * z_deep, 0.0)));
    out = out.sub(&qderiv(prev).scale(Complex64::new(t, 0.0)));
    out
}

/// Level-n polynomial prefactor P_n(q, t, z; xi), degree n, by the
/// parameter-shifted recursion from P_0 = 1.
pub fn pn_recursive(q: f64, t: f64, z: f64, n: u32) -> Result<QPolynomial> {
    check_base(q, t)?;
    let mut p = QPolynomial::one(q);
    let (t_deep, z_deep) = shifted_params(q, t, z, n);
    for k in 1..=n {
        // the state at recursion depth n-k carries the (n-k)-fold shift
        let (tc, zc) = shifted_params(q, t, z, n - k);
        p = p_step(&p, q, tc, zc, t_deep, z_deep);
    }
    Ok(p)
}

/// Closed-form prefactors for n = 1, 2, 3 (independent transcriptions,
/// for cross-checking the recursion).
pub fn pn_closed(n: u32, q: f64, t: f64, z: f64) -> Result<QPolynomial> {
    check_base(q, t)?;
    let f1 = 1.0 - t * t / q;
    match n {
        1 => {
            let c0 = -z * f1 / (1.0 - t / q);
            Ok(QPolynomial::from_real(q, &[c0, f1]))
        }
        2 => {
            let q2 = q * q;
            let f3 = 1.0 - t * t / (q * q2);
            let c2 = f1;
            let c1 = -qnumber(2, q) * (z / q) * f1 / (1.0 - t / q2);
            let w = 1.0 - t / q2;
            let c0 = -t + (z * z / q) * (1.0 - t) * (1.0 + t / q) / (w * w);
            Ok(QPolynomial::from_real(q, &[c0 * f3, c1 * f3, c2 * f3]))
        }
        3 => {
            let q2 = q * q;
            let q3 = q * q2;
            let f3 = 1.0 - t * t / q3;
            let f5 = 1.0 - t * t / (q2 * q3);
            let w3 = 1.0 - t / q3;
            let c3 = f1;
            let c2 = -qnumber(3, q) * (z / q2) * f1 / w3;
            let c1 = qnumber(3, q) * (-t / q + (z * z / q3) * (1.0 - t) * (1.0 + t / q) / (w3 * w3));
            let two = qnumber(2, q);
            let c0 = z * (t / q2) * ((two + q) - (two + 1.0) * t) / ((1.0 - t / q) * w3)
                - (z * z * z / q3) * (1.0 - t) * (1.0 - t) * (1.0 + t / q2)
                    / ((1.0 - t / q) * w3 * w3 * w3);
            Ok(QPolynomial::from_real(
                q,
                &[c0 * f5 * f3, c1 * f5 * f3, c2 * f5 * f3, c3 * f5 * f3],
            ))
        }
        _ => Err(Error::Domain(format!(
            "closed-form prefactor tabulated for n = 1..3 only, got {n}"
        ))),
    }
}

/// An eigenstate in the q-Bargmann representation.
#[derive(Debug, Clone)]
pub struct BargmannState {
    /// Level index.
    pub n: u32,
    /// Base parameters of the family the state belongs to.
    pub q: f64,
    pub t: f64,
    pub z: f64,
    /// n-fold shifted parameters carried by the closed form.
    pub t_n: f64,
    pub z_n: f64,
    /// Exponent pair at the shifted parameters.
    pub lambda_n: Complex64,
    pub mu_n: Complex64,
    /// Polynomial prefactor, degree n.
    pub p_n: QPolynomial,
    /// Normalization constant of the closed form, positive.
    pub norm_n: f64,
    /// Fock coefficients from the raising recursion (not renormalized;
    /// unit norm up to roundoff is an invariant, not an adjustment).
    pub coeffs: CoeffVector,
    /// Mass fraction sitting in the top two coefficient slots, as a
    /// truncation proxy.
    pub tail: f64,
}

/// Builds the level-n eigenstate by the raising recursion, together
/// with the closed-form data (P_n, N_n, lambda_n, mu_n).
///
/// M is the truncation degree of the coefficient space; M >= 2n + 30
/// is required so the raising ladder never starves. coeffs come out
/// normalized to roundoff because the C_k are exact.
pub fn excited_state(q: f64, t: f64, z: f64, n: u32, m_cap: usize) -> Result<BargmannState> {
    check_base(q, t)?;
    if m_cap < 2 * (n as usize) + 30 {
        return Err(Error::Domain(format!(
            "truncation degree M = {m_cap} too small for level n = {n}; need M >= {}",
            2 * n + 30
        )));
    }
    let (t_n, z_n) = shifted_params(q, t, z, n);
    let (lambda_n, mu_n) = lambda_mu(q, t_n, z_n);

    // descend to the ground state at the deepest shift, then raise
    let ground = ground_coeffs(q, t_n, z_n, m_cap)?;
    let mut norm_n = ground_norm(q, t_n, z_n, m_cap)?;
    let mut entries = ground.entries().to_vec();
    let mut p_n = QPolynomial::one(q);
    for k in 1..=n {
        let (tc, zc) = shifted_params(q, t, z, n - k);
        let c = cfactor(q, tc, zc, k);
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::Domain(format!(
                "raising normalization C_{k} = {c} not positive at (q, t, z) = ({q}, {tc}, {zc})"
            )));
        }
        let inv = 1.0 / c.sqrt();
        entries = apply_raising(&entries, q, tc, zc);
        for v in &mut entries {
            *v *= inv;
        }
        norm_n *= inv;
        p_n = p_step(&p_n, q, tc, zc, t_n, z_n);
    }
    let coeffs = CoeffVector::new(q, entries);
    let nsq = coeffs.norm().powi(2);
    let top: f64 = coeffs.entries()[coeffs.len().saturating_sub(2)..]
        .iter()
        .map(|c| c.norm_sqr())
        .sum();
    Ok(BargmannState {
        n,
        q,
        t,
        z,
        t_n,
        z_n,
        lambda_n,
        mu_n,
        p_n,
        norm_n,
        coeffs,
        tail: top / nsq,
    })
}

/// Reassembles the Fock coefficients from the closed form
/// N_n P_n(xi) E_q(lambda_n xi) E_q(mu_n xi); agrees with the
/// recursion coefficients to roundoff.
pub fn coeffs_from_closed_form(state: &BargmannState, m_cap: usize) -> Result<CoeffVector> {
    let q = state.q;
    let envelope = qexp_product(state.lambda_n, state.mu_n, q, m_cap);
    let series = state.p_n.mul_trunc(&envelope, m_cap);
    let mut entries = Vec::with_capacity(m_cap + 1);
    for m in 0..=m_cap {
        let d = series.coeff(m);
        let a = d.norm();
        if a == 0.0 {
            entries.push(Complex64::new(0.0, 0.0));
            continue;
        }
        // c_m = d_m sqrt([m]!): combine magnitudes in log space, since
        // the factorial alone overflows long after the product stopped
        // mattering
        let scale = (a.ln() + 0.5 * ln_qfactorial(m as u32, q)).exp();
        entries.push(d / a * scale);
    }
    let mut cv = CoeffVector::new(q, entries);
    cv.scale(state.norm_n);
    let im = cv.imag_residue();
    if im > 1.0e-12 {
        return Err(Error::Domain(format!(
            "closed-form coefficients show imaginary residue {im:.3e}; expected a conjugate exponent pair"
        )));
    }
    Ok(cv)
}

//! 1-D harmonic oscillator in a uniform electric field under the
//! deformed commutator
//!
//! ```text
//! [X, P] = i (1 + alpha X^2 + beta P^2),    alpha >= 0, beta >= 0, alpha beta < 1
//! ```
//!
//! for the dimensionless Hamiltonian h = (P^2 + X^2)/2 - E X.
//!
//! h factorizes as B+ B- + eps_0 with first-order B+- fixed by four
//! algebraic conditions; imposing shape invariance on the chain of
//! partner factorizations makes the spectrum a telescoping sum of the
//! factorization energies eps_i. With
//!
//! ```text
//! k = (beta - alpha)/2 + sqrt(1 + (beta - alpha)^2/4)
//! s = 1/sqrt(1 - alpha k)        (requires alpha k < 1)
//! g = s k,   r = -E sqrt(1 - alpha k)         (so r s = -E)
//! gamma = sqrt(beta/alpha)
//! u = g + gamma s,   v = g - gamma s,   d = u v,   t = v/u
//! q = (1 + sqrt(alpha beta)) / (1 - sqrt(alpha beta))
//! K = u sqrt((q+1)/(4 gamma))
//! z = 4 gamma sqrt(gamma/(q+1)) E / (u^2 (1-t))
//! ```
//!
//! the hierarchy walks u_i = q^{i/2} u, v_i = q^{-i/2} v and the
//! spectrum closes to
//!
//! ```text
//! e_n = K^2/(q+1) { (1 - t^2/q^{n-1}) [n]_q + (q^n - t^2/q^n)/2 }
//!       - K^2 z^2 (1-t)^2 q^{-n} (1 - t/q^n)^{-2} / 2
//! ```
//!
//! The exact boundary cases alpha = 0, beta = 0, and alpha = beta have
//! dedicated branches (`energy_alpha0`, `energy_beta0`, `energy_equal`);
//! the general branch refuses exact zeros, where gamma is singular.
//! alpha = beta is legal in the general branch (t = 0 exactly).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcalc::qnumber;

/// Physical inputs of the 1-D problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Deform1DParams {
    pub alpha: f64,
    pub beta: f64,
    pub efield: f64,
}

impl Deform1DParams {
    /// Validates alpha >= 0, beta >= 0, alpha beta < 1, all finite.
    pub fn new(alpha: f64, beta: f64, efield: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && efield.is_finite()) {
            return Err(Error::Domain("parameters must be finite".into()));
        }
        if alpha < 0.0 || beta < 0.0 {
            return Err(Error::Domain(format!(
                "deformation parameters must be nonnegative (alpha = {alpha}, beta = {beta})"
            )));
        }
        if alpha * beta >= 1.0 {
            return Err(Error::Domain(format!(
                "alpha beta = {} is outside the validity region alpha beta < 1",
                alpha * beta
            )));
        }
        Ok(Deform1DParams { alpha, beta, efield })
    }
}

/// The algebraic parameter bundle every 1-D formula consumes.
#[derive(Debug, Clone, Copy)]
pub struct Derived1D {
    pub alpha: f64,
    pub beta: f64,
    pub efield: f64,
    pub k: f64,
    pub g: f64,
    pub s: f64,
    pub r: f64,
    pub gamma: f64,
    pub u: f64,
    pub v: f64,
    pub d: f64,
    pub q: f64,
    pub t: f64,
    pub bigk: f64,
    pub z: f64,
    half_ln_q: f64,
}

impl Derived1D {
    /// q^x through the single cached ln q (keeps deep hierarchies at
    /// machine-level relative drift).
    pub fn qpow(&self, x: f64) -> f64 {
        (2.0 * x * self.half_ln_q).exp()
    }
}

/// Solve the factorization conditions for the general branch
/// (alpha > 0, beta > 0).
pub fn derive_params(p: &Deform1DParams) -> Result<Derived1D> {
    let Deform1DParams { alpha, beta, efield } = *p;
    if alpha * beta >= 1.0 {
        return Err(Error::Domain(format!(
            "alpha beta = {} >= 1",
            alpha * beta
        )));
    }
    if alpha == 0.0 || beta == 0.0 {
        return Err(Error::Branch(
            "alpha = 0 or beta = 0: use energy_alpha0/energy_beta0 (general branch is singular)"
                .into(),
        ));
    }
    let half_diff = 0.5 * (beta - alpha);
    let k = half_diff + (1.0 + half_diff * half_diff).sqrt();
    let ak = alpha * k;
    if ak >= 1.0 {
        return Err(Error::Domain(format!("alpha k = {ak} >= 1")));
    }
    let s = 1.0 / (1.0 - ak).sqrt();
    let g = s * k;
    let r = -efield * (1.0 - ak).sqrt();
    let gamma = (beta / alpha).sqrt();
    let u = g + gamma * s;
    let v = g - gamma * s;
    let d = u * v;
    let sab = (alpha * beta).sqrt();
    let q = (1.0 + sab) / (1.0 - sab);
    let t = v / u;
    let bigk = u * ((q + 1.0) / (4.0 * gamma)).sqrt();
    let z = 4.0 * gamma * (gamma / (q + 1.0)).sqrt() * efield / (u * u * (1.0 - t));
    Ok(Derived1D {
        alpha,
        beta,
        efield,
        k,
        g,
        s,
        r,
        gamma,
        u,
        v,
        d,
        q,
        t,
        bigk,
        z,
        half_ln_q: 0.5 * q.ln(),
    })
}

/// One rung of the shape-invariant hierarchy.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct HierarchyLevel1D {
    pub i: u32,
    pub g_i: f64,
    pub s_i: f64,
    pub r_i: f64,
    pub z_i: f64,
    pub t_i: f64,
    pub eps_i: f64,
}

fn level_raw(d: &Derived1D, i: u32) -> (f64, f64, f64) {
    // (g_i, s_i, r_i) from u_i = q^{i/2} u, v_i = q^{-i/2} v
    let qh = d.qpow(0.5 * i as f64);
    let u_i = qh * d.u;
    let v_i = d.v / qh;
    let g_i = 0.5 * (u_i + v_i);
    let s_i = 0.5 * (u_i - v_i) / d.gamma;
    let r_i = -(2.0 * d.gamma * d.efield / d.u) / qh / (1.0 - d.t / (qh * qh));
    (g_i, s_i, r_i)
}

/// Hierarchy data at level i, including the factorization energy
/// eps_i (eps_0 = (g s - r^2)/2, then
/// eps_{i+1} = (g_i s_i + g_{i+1} s_{i+1} + r_i^2 - r_{i+1}^2)/2).
pub fn hierarchy_level(d: &Derived1D, i: u32) -> HierarchyLevel1D {
    let (g_i, s_i, r_i) = level_raw(d, i);
    let qi = d.qpow(i as f64);
    let t_i = d.t / qi;
    let z_i = d.z / qi * (1.0 - d.t) / (1.0 - d.t / qi);
    let eps_i = if i == 0 {
        0.5 * (d.g * d.s - d.r * d.r)
    } else {
        let (g_p, s_p, r_p) = level_raw(d, i - 1);
        0.5 * (g_p * s_p + g_i * s_i + r_p * r_p - r_i * r_i)
    };
    HierarchyLevel1D {
        i,
        g_i,
        s_i,
        r_i,
        z_i,
        t_i,
        eps_i,
    }
}

fn finite_or_overflow(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Overflow(format!("{what} left f64 range")))
    }
}

/// n-th eigenvalue of h, closed form: field-free part plus the
/// electric-field correction.
pub fn energy(d: &Derived1D, n: u32) -> Result<f64> {
    let qn = d.qpow(n as f64);
    let t2 = d.t * d.t;
    let free = d.bigk * d.bigk / (d.q + 1.0)
        * ((1.0 - t2 * d.q / qn) * qnumber(n, d.q) + 0.5 * (qn - t2 / qn));
    finite_or_overflow(free + field_correction(d, n), "energy")
}

/// Same eigenvalue as the running telescoping sum
/// sum_{i<=n} eps_i; bit-for-bit consistent with partial sums of
/// `hierarchy_level` energies. Agrees with `energy` to roundoff.
pub fn energy_telescoped(d: &Derived1D, n: u32) -> Result<f64> {
    let mut acc = 0.0f64;
    for i in 0..=n {
        acc += hierarchy_level(d, i).eps_i;
    }
    finite_or_overflow(acc, "energy_telescoped")
}

/// Electric-field correction
/// Delta e_n = -K^2 z^2 (1-t)^2 q^{-n} (1 - t/q^n)^{-2} / 2; equals
/// -(K z)^2/2 at n = 0 and vanishes with the field.
pub fn field_correction(d: &Derived1D, n: u32) -> f64 {
    let qn = d.qpow(n as f64);
    let kz = d.bigk * d.z;
    let om = 1.0 - d.t / qn;
    -0.5 * kz * kz * (1.0 - d.t) * (1.0 - d.t) / qn / (om * om)
}

/// Field correction to the n-th excitation energy,
/// Delta e_n - Delta e_0 = (q-1) K^2 z^2 q^{-n} (1 - t^2/q^n)
/// (1 - t/q^n)^{-2} [n]_q / 2; an algebraic identity test against two
/// `field_correction` calls.
pub fn excitation_correction(d: &Derived1D, n: u32) -> f64 {
    let qn = d.qpow(n as f64);
    let kz = d.bigk * d.z;
    let om = 1.0 - d.t / qn;
    0.5 * (d.q - 1.0) * kz * kz / qn * (1.0 - d.t * d.t / qn) / (om * om) * qnumber(n, d.q)
}

/// beta = 0 branch (nonzero minimal momentum uncertainty only). The
/// hierarchy collapses to g_i = 1, s_i = s + i alpha with
/// s = alpha/2 + sqrt(1 + alpha^2/4), giving
///
/// ```text
/// e_n = (n + 1/2) sqrt(1 + alpha^2/4) + alpha (n^2 + n + 1/2)/2
///       - E^2 / (2 s_n^2)
/// ```
pub fn energy_beta0(alpha: f64, efield: f64, n: u32) -> f64 {
    let root = (1.0 + 0.25 * alpha * alpha).sqrt();
    let nf = n as f64;
    (nf + 0.5) * root + 0.5 * alpha * (nf * nf + nf + 0.5)
        + field_correction_beta0(alpha, efield, n)
}

/// Field correction of the beta = 0 branch: -E^2/(2 s_n^2) with
/// s_n = s + n alpha.
pub fn field_correction_beta0(alpha: f64, efield: f64, n: u32) -> f64 {
    let s = 0.5 * alpha + (1.0 + 0.25 * alpha * alpha).sqrt();
    let s_n = s + n as f64 * alpha;
    -0.5 * efield * efield / (s_n * s_n)
}

/// alpha = 0 branch (nonzero minimal length only): the field-free
/// spectrum is the beta = 0 one with alpha -> beta (exchange symmetry),
/// and the field shifts every level by the constant -E^2/2.
pub fn energy_alpha0(beta: f64, efield: f64, n: u32) -> f64 {
    energy_beta0(beta, 0.0, n) + field_correction_alpha0(efield)
}

/// Field correction of the alpha = 0 branch: -E^2/2, independent of n
/// and of beta (the field can be removed by a coordinate shift).
pub fn field_correction_alpha0(efield: f64) -> f64 {
    -0.5 * efield * efield
}

/// alpha = beta branch: a q-deformed oscillator with
/// q = (1+alpha)/(1-alpha),
/// e_n = (q+1)/2 ([n]_q + q^n/2) - E^2 q^{-n}/(q+1).
pub fn energy_equal(alpha: f64, efield: f64, n: u32) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain(format!(
            "energy_equal requires 0 <= alpha < 1, got {alpha}"
        )));
    }
    let q = (1.0 + alpha) / (1.0 - alpha);
    let qn = ((n as f64) * q.ln()).exp();
    let free = 0.5 * (q + 1.0) * (qnumber(n, q) + 0.5 * qn);
    finite_or_overflow(
        free + field_correction_equal(alpha, efield, n),
        "energy_equal",
    )
}

/// Field correction of the alpha = beta branch:
/// Delta e_n = -E^2 q^{-n}/(q+1).
pub fn field_correction_equal(alpha: f64, efield: f64, n: u32) -> f64 {
    let q = (1.0 + alpha) / (1.0 - alpha);
    -efield * efield / (q + 1.0) / ((n as f64) * q.ln()).exp()
}

/// Partner-Hamiltonian coefficients: h_i = (a_i P^2 + b_i X^2)/2
/// - E X + c_i, with the field term identical at every level.
///
/// Expanding B+_i B-_i with the deformed commutator gives
///
/// ```text
/// a_i = g_i^2 - beta g_i s_i
/// b_i = s_i^2 - alpha g_i s_i
/// c_i = (r_i^2 - g_i s_i)/2 + sum_{j<=i} eps_j
/// ```
///
/// so a_0 = b_0 = 1, c_0 = 0, and in the conventional limit a_i = b_i
/// = 1, c_i = i. Dimensionally m_i/m = 1/a_i and omega_i/omega =
/// sqrt(a_i b_i).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PartnerCoeffs {
    pub i: u32,
    pub a_i: f64,
    pub b_i: f64,
    pub c_i: f64,
    pub mass_ratio: f64,
    pub freq_ratio: f64,
}

pub fn partner_coeffs(d: &Derived1D, i: u32) -> Result<PartnerCoeffs> {
    let (g_i, s_i, r_i) = level_raw(d, i);
    let gs = g_i * s_i;
    let a_i = g_i * g_i - d.beta * gs;
    let b_i = s_i * s_i - d.alpha * gs;
    let c_i = 0.5 * (r_i * r_i - gs) + energy_telescoped(d, i)?;
    Ok(PartnerCoeffs {
        i,
        a_i,
        b_i,
        c_i,
        mass_ratio: 1.0 / a_i,
        freq_ratio: (a_i * b_i).sqrt(),
    })
}

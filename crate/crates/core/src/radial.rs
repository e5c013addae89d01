//! D-dimensional oscillator with isotropic minimal length: radial
//! factorization, spectrum, Jacobi-polynomial wave functions, the
//! alternative factorization, and a finite-difference oracle.
//!
//! After separating angles and removing the first-derivative term, the
//! radial problem in momentum space reads
//!
//! ```text
//! h^(l) chi = (1/2){ -[f(P) d/dP]^2 + a_l/P^2 + b_l P^2 } chi = e~ chi
//! f(P) = 1 + beta0 P^2,   beta0 = beta + beta'
//! a_l = (l + (D-3)/2)(l + (D-1)/2),  L^2 = l(l + D - 2)
//! b_l = 1 + beta^2 [L^2 + (D^2-1)/4] + (D-1) beta beta'/2
//! ```
//!
//! with the factorization data
//!
//! ```text
//! s = l + (D-1)/2
//! Delta_l = sqrt(1 + beta^2 L^2 + (D beta + beta')^2/4)
//! g = beta0/2 + Delta_l
//! e~_0 = beta0 (2l + D - 1/2)/2 + (l + D/2) Delta_l
//! lambda = g/beta0 - 1/2,   mu = s - 1/2
//! ```
//!
//! a shape-invariant hierarchy s_i = s+i, g_i = g + beta0 i, and the
//! spectra
//!
//! ```text
//! e~_nl = (2n+l+D/2)(Delta_l + beta0/2) + beta0 (l+(D-1)/2)(2n+1/2) + 2 beta0 n^2
//! e_Nl  = (N+D/2) Delta_l + [ (beta+beta')(N+D/2)^2
//!         + (beta-beta')(L^2+D^2/4) + beta' D/2 ]/2,     N = 2n+l
//! e~_nl = e_nl - beta [L^2 + (D-1)^2/4] + (D-1) beta'/4
//! ```
//!
//! Wave functions are Jacobi polynomials in z = (beta0 P^2 - 1)/(1 +
//! beta0 P^2):
//!
//! ```text
//! chi_n = N_n P_n^(lambda,mu)(z) P^(mu+1/2) f^(-(lambda+mu+1)/2)
//! N_n = sqrt( 2(2n+lambda+mu+1) n! Gamma(n+lambda+mu+1)
//!             / (Gamma(n+lambda+1) Gamma(n+mu+1)) * beta0^(mu+1) )
//! R_nl = P^(-(D-1)/2) f^(-alpha_w/2) chi_n
//! ```
//!
//! where alpha_w = (gamma_w - (D-1) beta'/2)/beta0 carries the
//! arbitrary measure weight; energies and chi never see it.
//!
//! The oracle substitutes rho = arctan(sqrt(beta0) P)/sqrt(beta0),
//! which turns f(P) d/dP into d/drho on the finite interval
//! (0, pi/(2 sqrt(beta0))) where both Dirichlet conditions are exact,
//! then runs second-order central differences on two grids with
//! Richardson extrapolation.

use crate::error::{Error, Result};
use crate::gammafn::ln_gamma;
use crate::linalg::tridiag_lowest;

/// Problem statement for the radial equation.
#[derive(Debug, Clone, Copy)]
pub struct RadialProblem {
    /// Space dimension D >= 2.
    pub dim: u32,
    pub l: u32,
    pub beta: f64,
    pub beta_prime: f64,
    /// Arbitrary weight parameter; enters only the measure exponent of
    /// R_nl, never energies or chi_n.
    pub gamma_weight: f64,
}

impl RadialProblem {
    pub fn new(dim: u32, l: u32, beta: f64, beta_prime: f64, gamma_weight: f64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain(format!("dimension D = {dim} must be >= 2")));
        }
        if !(beta >= 0.0) || !(beta_prime >= 0.0) || !beta.is_finite() || !beta_prime.is_finite() {
            return Err(Error::Domain(format!(
                "deformation parameters must be finite and >= 0, got beta = {beta}, beta' = {beta_prime}"
            )));
        }
        if !gamma_weight.is_finite() {
            return Err(Error::Domain("gamma_weight must be finite".into()));
        }
        Ok(RadialProblem {
            dim,
            l,
            beta,
            beta_prime,
            gamma_weight,
        })
    }

    pub fn with_l(&self, l: u32) -> Self {
        RadialProblem { l, ..*self }
    }

    /// L^2 = l(l + D - 2).
    pub fn l_squared(&self) -> f64 {
        let l = self.l as f64;
        l * (l + self.dim as f64 - 2.0)
    }
}

/// Factorization data derived from a `RadialProblem`.
#[derive(Debug, Clone, Copy)]
pub struct RadialDerived {
    pub a_l: f64,
    pub b_l: f64,
    pub delta_l: f64,
    pub s: f64,
    pub g: f64,
    pub eps0: f64,
    pub lambda: f64,
    pub mu: f64,
    pub beta0: f64,
}

/// Solves the factorization conditions s(s-1) = a_l, g(g-beta0) = b_l
/// on the physical branch (s, g > 0).
pub fn radial_derive(rp: &RadialProblem) -> Result<RadialDerived> {
    let beta0 = rp.beta + rp.beta_prime;
    if beta0 <= 0.0 {
        return Err(Error::Domain(
            "beta + beta' = 0 is the conventional oscillator; the deformed branch needs beta0 > 0"
                .into(),
        ));
    }
    let d = rp.dim as f64;
    let l = rp.l as f64;
    let l2 = rp.l_squared();
    let a_l = (l + 0.5 * (d - 3.0)) * (l + 0.5 * (d - 1.0));
    let b_l = 1.0 + rp.beta * rp.beta * (l2 + 0.25 * (d * d - 1.0))
        + 0.5 * (d - 1.0) * rp.beta * rp.beta_prime;
    let delta_l = (1.0 + rp.beta * rp.beta * l2 + 0.25 * (d * rp.beta + rp.beta_prime).powi(2)).sqrt();
    let s = l + 0.5 * (d - 1.0);
    let g = 0.5 * beta0 + delta_l;
    let eps0 = 0.5 * beta0 * (2.0 * l + d - 0.5) + (l + 0.5 * d) * delta_l;
    let lambda = g / beta0 - 0.5;
    let mu = s - 0.5;
    debug_assert!(lambda > -1.0 && mu >= 0.0, "Jacobi admissibility");
    Ok(RadialDerived {
        a_l,
        b_l,
        delta_l,
        s,
        g,
        eps0,
        lambda,
        mu,
        beta0,
    })
}

/// One member of the shape-invariant hierarchy.
#[derive(Debug, Clone, Copy)]
pub struct RadialHierarchyLevel {
    pub i: u32,
    pub s_i: f64,
    pub g_i: f64,
    /// Factorization-energy increment; eps_0 is the ground energy.
    pub eps_i: f64,
    pub a_i: f64,
    pub b_i: f64,
    pub c_i: f64,
}

/// Hierarchy member i >= 0: s_i = s + i, g_i = g + beta0 i, the
/// increment
///
/// ```text
/// eps_i = g_i (s_i + 1/2) - g_{i-1}(s_{i-1} - 1/2) + beta0 (s_i + s_{i-1})/2
/// ```
///
/// and the partner-Hamiltonian coefficients
///
/// ```text
/// a_i = (s_i - 1) s_i
/// b_i = b_l + 2 beta0 i Delta_l + beta0^2 i^2
/// c_i = i [beta0 (s_i - 1/2) + Delta_l]
/// ```
///
/// which collapse to a_i = a^{(l+i)}, b_i = 1, c_i = i in the
/// conventional limit.
pub fn radial_hierarchy(rd: &RadialDerived, i: u32) -> RadialHierarchyLevel {
    let fi = i as f64;
    let s_i = rd.s + fi;
    let g_i = rd.g + rd.beta0 * fi;
    let eps_i = if i == 0 {
        rd.eps0
    } else {
        let s_im = s_i - 1.0;
        let g_im = g_i - rd.beta0;
        g_i * (s_i + 0.5) - g_im * (s_im - 0.5) + 0.5 * rd.beta0 * (s_i + s_im)
    };
    let a_i = (s_i - 1.0) * s_i;
    let b_i = rd.b_l + 2.0 * rd.beta0 * fi * rd.delta_l + rd.beta0 * rd.beta0 * fi * fi;
    let c_i = fi * (rd.beta0 * (s_i - 0.5) + rd.delta_l);
    RadialHierarchyLevel {
        i,
        s_i,
        g_i,
        eps_i,
        a_i,
        b_i,
        c_i,
    }
}

/// Closed-form spectra (e~_nl, e_Nl) with N = 2n + l. Valid for any
/// beta, beta' >= 0 including the conventional point beta0 = 0, where
/// both reduce to N + D/2.
pub fn radial_energy(rp: &RadialProblem, n: u32, l: u32) -> (f64, f64) {
    let rp = rp.with_l(l);
    let d = rp.dim as f64;
    let lf = l as f64;
    let l2 = rp.l_squared();
    let beta0 = rp.beta + rp.beta_prime;
    let delta_l =
        (1.0 + rp.beta * rp.beta * l2 + 0.25 * (d * rp.beta + rp.beta_prime).powi(2)).sqrt();
    let nf = n as f64;
    let half_n = 2.0 * nf + lf + 0.5 * d;
    let te = half_n * delta_l
        + 0.5 * beta0 * half_n
        + beta0 * (lf + 0.5 * (d - 1.0)) * (2.0 * nf + 0.5)
        + 2.0 * beta0 * nf * nf;
    let nn = 2.0 * nf + lf + 0.5 * d;
    let e = nn * delta_l
        + 0.5
            * ((rp.beta + rp.beta_prime) * nn * nn
                + (rp.beta - rp.beta_prime) * (l2 + 0.25 * d * d)
                + 0.5 * rp.beta_prime * d);
    (te, e)
}

/// Additive shift between the two spectra: e_nl = e~_nl + shift.
pub fn radial_energy_shift(rp: &RadialProblem, l: u32) -> f64 {
    let rp = rp.with_l(l);
    let d = rp.dim as f64;
    rp.beta * (rp.l_squared() + 0.25 * (d - 1.0) * (d - 1.0)) - 0.25 * (d - 1.0) * rp.beta_prime
}

fn check_jacobi_args(lambda: f64, mu: f64, z: f64) -> Result<()> {
    if !(lambda > -1.0) || !(mu > -1.0) {
        return Err(Error::Domain(format!(
            "Jacobi parameters must exceed -1, got ({lambda}, {mu})"
        )));
    }
    if !(-1.0..=1.0).contains(&z) {
        return Err(Error::Domain(format!("Jacobi argument z = {z} outside [-1, 1]")));
    }
    Ok(())
}

/// Jacobi polynomial P_n^(lambda,mu)(z) by the standard three-term
/// recurrence.
pub fn jacobi_eval(n: u32, lambda: f64, mu: f64, z: f64) -> Result<f64> {
    check_jacobi_args(lambda, mu, z)?;
    if n == 0 {
        return Ok(1.0);
    }
    let mut pm = 1.0f64;
    let mut p = 0.5 * (lambda + mu + 2.0) * z + 0.5 * (lambda - mu);
    for k in 2..=n {
        let k = k as f64;
        let ab = lambda + mu;
        let c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
        let c2 = (2.0 * k + ab - 1.0)
            * ((2.0 * k + ab) * (2.0 * k + ab - 2.0) * z + lambda * lambda - mu * mu);
        let c3 = 2.0 * (k + lambda - 1.0) * (k + mu - 1.0) * (2.0 * k + ab);
        let next = (c2 * p - c3 * pm) / c1;
        pm = p;
        p = next;
    }
    Ok(p)
}

/// d/dz P_n^(lambda,mu)(z) = (n+lambda+mu+1)/2 P_{n-1}^(lambda+1,mu+1)(z).
pub fn jacobi_deriv(n: u32, lambda: f64, mu: f64, z: f64) -> Result<f64> {
    check_jacobi_args(lambda, mu, z)?;
    if n == 0 {
        return Ok(0.0);
    }
    Ok(0.5 * (n as f64 + lambda + mu + 1.0) * jacobi_eval(n - 1, lambda + 1.0, mu + 1.0, z)?)
}

/// A radial eigenstate with its chi and R evaluators.
#[derive(Debug, Clone, Copy)]
pub struct RadialState {
    pub n: u32,
    pub lambda: f64,
    pub mu: f64,
    /// Normalization of chi_n under the measure dP/f(P); positive.
    pub norm_n: f64,
    pub beta0: f64,
    dim: u32,
    alpha_w: f64,
}

impl RadialState {
    /// z(P) = (beta0 P^2 - 1)/(1 + beta0 P^2), in (-1, 1).
    pub fn z_of(&self, p: f64) -> f64 {
        let w = self.beta0 * p * p;
        (w - 1.0) / (1.0 + w)
    }

    /// chi_n(P) = N_n P_n^(lambda,mu)(z(P)) P^(mu+1/2) f^(-(lambda+mu+1)/2).
    pub fn chi(&self, p: f64) -> f64 {
        if p == 0.0 {
            return 0.0;
        }
        let f = 1.0 + self.beta0 * p * p;
        let jac = jacobi_eval(self.n, self.lambda, self.mu, self.z_of(p))
            .expect("z(P) stays inside [-1, 1]");
        self.norm_n
            * jac
            * p.powf(self.mu + 0.5)
            * f.powf(-0.5 * (self.lambda + self.mu + 1.0))
    }

    /// Full radial function R_nl(P) = P^(-(D-1)/2) f^(-alpha_w/2) chi_n(P).
    /// The measure exponent alpha_w is the only place gamma_weight enters.
    pub fn r_nl(&self, p: f64) -> f64 {
        let f = 1.0 + self.beta0 * p * p;
        self.chi(p) * p.powf(-0.5 * (self.dim as f64 - 1.0)) * f.powf(-0.5 * self.alpha_w)
    }
}

/// Builds the level-n eigenstate of h^(l).
pub fn radial_wavefunction(rp: &RadialProblem, n: u32, l: u32) -> Result<RadialState> {
    let rp = rp.with_l(l);
    let rd = radial_derive(&rp)?;
    let (lambda, mu, beta0) = (rd.lambda, rd.mu, rd.beta0);
    let nf = n as f64;
    let ln_norm_sq = (2.0 * (2.0 * nf + lambda + mu + 1.0)).ln() + ln_gamma(nf + 1.0)
        + ln_gamma(nf + lambda + mu + 1.0)
        - ln_gamma(nf + lambda + 1.0)
        - ln_gamma(nf + mu + 1.0)
        + (mu + 1.0) * beta0.ln();
    let norm_n = (0.5 * ln_norm_sq).exp();
    if !norm_n.is_finite() || norm_n <= 0.0 {
        return Err(Error::Overflow(format!(
            "radial normalization N_{n} not representable (lambda = {lambda}, mu = {mu})"
        )));
    }
    let alpha_w = (rp.gamma_weight - 0.5 * (rp.dim as f64 - 1.0) * rp.beta_prime) / beta0;
    Ok(RadialState {
        n,
        lambda,
        mu,
        norm_n,
        beta0,
        dim: rp.dim,
        alpha_w,
    })
}

/// The alternative factorization of h^(l) (g > 0, s < 0 branch) and
/// its extended hierarchy, indexable at negative i.
#[derive(Debug, Clone, Copy)]
pub struct AltFactorization {
    pub s_p: f64,
    pub g_p: f64,
    pub eps0_p: f64,
    beta0: f64,
    delta_l: f64,
    s: f64,
    b_l: f64,
}

impl AltFactorization {
    /// (s'_i, g'_i, eps~'_i) for i >= 0.
    pub fn hierarchy(&self, i: u32) -> (f64, f64, f64) {
        let fi = i as f64;
        let s_i = self.s_p + fi;
        let g_i = self.g_p + self.beta0 * fi;
        let eps_i = if i == 0 {
            self.eps0_p
        } else {
            let s_im = s_i - 1.0;
            let g_im = g_i - self.beta0;
            g_i * (s_i + 0.5) - g_im * (s_im - 0.5) + 0.5 * self.beta0 * (s_i + s_im)
        };
        (s_i, g_i, eps_i)
    }

    /// Primed partner coefficients (a'_i, b'_i, c'_i), defined for any
    /// integer i of the extended hierarchy:
    ///
    /// ```text
    /// a'_i = (l - i + (D-3)/2)(l - i + (D-1)/2)
    /// b'_i = b_l + 2 beta0 i Delta_l + beta0^2 i^2
    /// c'_i = i [beta0 (i + 1/2 - s) + Delta_l]
    /// ```
    pub fn coeffs(&self, i: i64) -> (f64, f64, f64) {
        let fi = i as f64;
        let a_i = (self.s - 1.0 - fi) * (self.s - fi);
        let b_i = self.b_l + 2.0 * self.beta0 * fi * self.delta_l + self.beta0 * self.beta0 * fi * fi;
        let c_i = fi * (self.beta0 * (fi + 0.5 - self.s) + self.delta_l);
        (a_i, b_i, c_i)
    }
}

/// Alternative factorization data: s' = 1 - s = -l - (D-3)/2, g' = g,
/// eps~'_0 = -beta0 (2s - 5/2)/2 - (s - 3/2) Delta_l.
pub fn alt_factorization(rp: &RadialProblem) -> Result<AltFactorization> {
    let rd = radial_derive(rp)?;
    let s_p = 1.0 - rd.s;
    let g_p = rd.g;
    let eps0_p = -0.5 * rd.beta0 * (2.0 * rd.s - 2.5) - (rd.s - 1.5) * rd.delta_l;
    Ok(AltFactorization {
        s_p,
        g_p,
        eps0_p,
        beta0: rd.beta0,
        delta_l: rd.delta_l,
        s: rd.s,
        b_l: rd.b_l,
    })
}

/// Primed-branch spectrum formula evaluated at a real index m
/// (half-integral for odd D):
///
/// ```text
/// e~'_m = (2m - l - (D-4)/2)(Delta_l + beta0/2)
///         - beta0 (l + (D-3)/2)(2m + 1/2) + 2 beta0 m^2
/// ```
pub fn alt_spectrum_energy(rp: &RadialProblem, m: f64, l: u32) -> f64 {
    let rp = rp.with_l(l);
    let d = rp.dim as f64;
    let lf = l as f64;
    let beta0 = rp.beta + rp.beta_prime;
    let delta_l = (1.0 + rp.beta * rp.beta * rp.l_squared()
        + 0.25 * (d * rp.beta + rp.beta_prime).powi(2))
    .sqrt();
    let head = 2.0 * m - lf - 0.5 * (d - 4.0);
    head * delta_l + 0.5 * beta0 * head - beta0 * (lf + 0.5 * (d - 3.0)) * (2.0 * m + 0.5)
        + 2.0 * beta0 * m * m
}

/// Checks the quantum-number identity of the two factorizations: the
/// primed formula at m = n + l + (D-2)/2 reproduces e~_nl. A formal
/// closed-form identity (m need not be an integer), asserted to 1e-12
/// relative.
pub fn alt_spectrum_check(rp: &RadialProblem, n: u32, l: u32) -> bool {
    let m = n as f64 + l as f64 + 0.5 * (rp.dim as f64 - 2.0);
    let (te, _) = radial_energy(rp, n, l);
    let tm = alt_spectrum_energy(rp, m, l);
    (te - tm).abs() <= 1.0e-12 * te.abs().max(1.0)
}

// ---------------------------------------------------------------------
// Gauss-Kronrod 15-point adaptive quadrature (for orthonormality and
// norm checks). Nodes/weights of the (G7, K15) pair on [-1, 1].

const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let fsum = f(c - x) + f(c + x);
        kronrod += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    (kronrod * h, (kronrod - gauss).abs() * h.abs())
}

/// Adaptive bisection on top of the GK15 rule, absolute tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    fn rec<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Result<f64> {
        let (val, err) = gk15(f, a, b);
        if err <= tol || b - a < 1.0e-14 * (a.abs() + b.abs()) {
            return Ok(val);
        }
        if depth == 0 {
            return Err(Error::Convergence {
                estimate: err,
                context: format!("adaptive quadrature stalled on [{a}, {b}]"),
            });
        }
        let c = 0.5 * (a + b);
        Ok(rec(f, a, c, 0.5 * tol, depth - 1)? + rec(f, c, b, 0.5 * tol, depth - 1)?)
    }
    rec(f, a, b, tol, 40)
}

/// <chi_{n'} | chi_n> = int_0^inf dP/f(P) chi_{n'} chi_n, marched in
/// doubling segments until two consecutive contributions fall below
/// the tail cutoff.
pub fn chi_inner_product(s1: &RadialState, s2: &RadialState) -> Result<f64> {
    let beta0 = s1.beta0;
    let f = |p: f64| s1.chi(p) * s2.chi(p) / (1.0 + beta0 * p * p);
    let mut total = integrate(&f, 0.0, 1.0, 1.0e-13)?;
    let mut a = 1.0f64;
    let mut quiet = 0;
    while quiet < 2 {
        let b = 2.0 * a;
        let seg = integrate(&f, a, b, 1.0e-13)?;
        total += seg;
        quiet = if seg.abs() < 1.0e-13 { quiet + 1 } else { 0 };
        a = b;
        if a > 1.0e9 {
            return Err(Error::Convergence {
                estimate: seg.abs(),
                context: "chi inner product tail would not die out".into(),
            });
        }
    }
    Ok(total)
}

// ---------------------------------------------------------------------
// Finite-difference Sturm-Liouville oracle.

/// Raw finite-difference eigenvalues of h^(l) on a single grid with
/// `interior` points: second-order central differences in the
/// arctangent variable, Dirichlet at both ends (exact there), lowest
/// `count` values by bisection on the symmetric tridiagonal matrix.
pub fn sturm_liouville_levels(
    rp: &RadialProblem,
    l: u32,
    count: usize,
    interior: usize,
) -> Result<Vec<f64>> {
    let rp = rp.with_l(l);
    let rd = radial_derive(&rp)?;
    if count == 0 || count * 10 > interior {
        return Err(Error::Domain(format!(
            "count = {count} out of range for {interior} grid points"
        )));
    }
    let sq = rd.beta0.sqrt();
    let len = std::f64::consts::FRAC_PI_2 / sq;
    let h = len / (interior as f64 + 1.0);
    let mut diag = Vec::with_capacity(interior);
    let inv_h2 = 1.0 / (h * h);
    for j in 0..interior {
        let rho = (j as f64 + 1.0) * h;
        let p = (sq * rho).tan() / sq;
        let v = rd.a_l / (p * p) + rd.b_l * p * p;
        diag.push(inv_h2 + 0.5 * v);
    }
    let off = vec![-0.5 * inv_h2; interior];
    Ok(tridiag_lowest(&diag, &off, count))
}

/// Certified low spectrum of h^(l): two grids (the finer exactly
/// halving the step), Richardson-combined, with the per-level
/// difference |e_fine - e_coarse|/3 as the error estimate of the
/// combination. Errors with `Convergence` carrying the estimate if any
/// requested level fails the tolerance.
pub fn sturm_liouville_oracle_with(
    rp: &RadialProblem,
    l: u32,
    count: usize,
    coarse_interior: usize,
    tol: f64,
) -> Result<Vec<f64>> {
    let coarse = sturm_liouville_levels(rp, l, count, coarse_interior)?;
    let fine = sturm_liouville_levels(rp, l, count, 2 * coarse_interior + 1)?;
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let estimate = (fine[n] - coarse[n]).abs() / 3.0;
        if estimate > tol {
            return Err(Error::Convergence {
                estimate,
                context: format!(
                    "finite-difference level n = {n} at l = {l} not converged (coarse {}, fine {})",
                    coarse[n], fine[n]
                ),
            });
        }
        out.push((4.0 * fine[n] - coarse[n]) / 3.0);
    }
    Ok(out)
}

/// The oracle at its default grids (4000 and 8001 interior points) and
/// tolerance 1e-5.
pub fn sturm_liouville_oracle(rp: &RadialProblem, l: u32, count: usize) -> Result<Vec<f64>> {
    sturm_liouville_oracle_with(rp, l, count, 4000, 1.0e-5)
}

//! Brute-force oracle for the 1-D problem: truncated q-boson matrices,
//! the deformed X and P, Hamiltonian assembly, and dense symmetric
//! eigensolves with truncation-convergence certification.
//!
//! Basis: q-boson number states with b'|n> = sqrt([n+1]_q)|n+1>, which
//! realize b b' - q b' b = I exactly except in the last row. X and P
//! follow from
//!
//! ```text
//! X = (1/2) sqrt(gamma (q+1)) (b + b')
//! P = (i/2) sqrt((q+1)/gamma) (b' - b)
//! ```
//!
//! P is stored through its real antisymmetric part A (P = iA), so
//! P^2 = -A^2 stays real symmetric and h = (X^2 - A^2)/2 - E X is a
//! real symmetric pentadiagonal-plus-diagonal matrix.
//!
//! Exact boundary realizations over conventional bosons back the
//! alpha = 0 and beta = 0 branches, where the q-basis degenerates:
//! X = x + (beta/2)(p^2 x + x p^2), P = p satisfies
//! [X, P] = i(1 + beta P^2) identically, and symmetrically for beta = 0.
//!
//! Truncation policy: matrix entries grow like q^N, so for q
//! noticeably above 1 a large basis destroys the low spectrum through
//! roundoff (eps times the matrix norm). Builders are exact for any N;
//! `converged_levels` caps N so the largest entry stays near 1e8 and
//! certifies levels by Cauchy differences across increasing N.

use crate::deform1d::Deform1DParams;
use crate::error::{Error, Result};
use crate::linalg;
use crate::qcalc::qnumber;

/// Dense real matrix in the truncated number basis, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FockMatrix {
    dim: usize,
    a: Vec<f64>,
}

impl FockMatrix {
    pub fn zeros(dim: usize) -> Self {
        FockMatrix {
            dim,
            a: vec![0.0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[f64] {
        &self.a
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.dim + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut out = FockMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.a[j * n + i] = self.a[i * n + j];
            }
        }
        out
    }

    /// C = self * other, cache-friendly ikj order.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = FockMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.a[i * n + k];
                if aik == 0.0 {
                    continue;
                }
                let row_k = &other.a[k * n..(k + 1) * n];
                let row_i = &mut out.a[i * n..(i + 1) * n];
                for j in 0..n {
                    row_i[j] += aik * row_k[j];
                }
            }
        }
        out
    }

    pub fn scale(&mut self, c: f64) {
        for v in &mut self.a {
            *v *= c;
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: f64) {
        assert_eq!(self.dim, other.dim);
        for (v, w) in self.a.iter_mut().zip(&other.a) {
            *v += c * w;
        }
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim);
        let n = self.dim;
        (0..n)
            .map(|i| {
                self.a[i * n..(i + 1) * n]
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// max |A - A^T| entrywise, for the symmetry invariant.
    pub fn asym_residual(&self) -> f64 {
        let n = self.dim;
        let mut m = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                m = m.max((self.a[i * n + j] - self.a[j * n + i]).abs());
            }
        }
        m
    }

    /// max |entry| over the interior block rows/cols 0..dim-ceil(dim/5)
    /// (the truncation edge is excluded from operator-identity checks).
    pub fn interior_max_abs(&self) -> f64 {
        let n = self.dim;
        let cut = n - n.div_ceil(5);
        let mut m = 0.0f64;
        for i in 0..cut {
            for j in 0..cut {
                m = m.max(self.a[i * n + j].abs());
            }
        }
        m
    }
}

/// Annihilation and creation matrices of the q-boson algebra,
/// b|n> = sqrt([n]_q)|n-1>, b'|n> = sqrt([n+1]_q)|n+1>.
pub fn build_ladder(q: f64, n: usize) -> (FockMatrix, FockMatrix) {
    assert!(n >= 2, "ladder needs at least a 2-dimensional basis");
    assert!(q >= 1.0);
    let mut b = FockMatrix::zeros(n);
    for m in 1..n {
        b.set(m - 1, m, qnumber(m as u32, q).sqrt());
    }
    let bdag = b.transpose();
    (b, bdag)
}

/// X (symmetric) and A (antisymmetric, P = iA) for the general branch.
pub fn build_xp(gamma: f64, q: f64, n: usize) -> (FockMatrix, FockMatrix) {
    assert!(gamma > 0.0);
    let (b, bdag) = build_ladder(q, n);
    let cx = 0.5 * (gamma * (q + 1.0)).sqrt();
    let ca = 0.5 * ((q + 1.0) / gamma).sqrt();
    let mut x = FockMatrix::zeros(n);
    x.add_scaled(&b, cx);
    x.add_scaled(&bdag, cx);
    let mut a = FockMatrix::zeros(n);
    a.add_scaled(&bdag, ca);
    a.add_scaled(&b, -ca);
    (x, a)
}

/// h = (X^2 - A^2)/2 - E X in the q-boson basis (general branch,
/// alpha > 0 and beta > 0).
pub fn build_hamiltonian(p: &Deform1DParams, n: usize) -> Result<FockMatrix> {
    if p.alpha <= 0.0 || p.beta <= 0.0 {
        return Err(Error::Domain(
            "general-branch oracle needs alpha > 0 and beta > 0; \
             use build_hamiltonian_alpha0/build_hamiltonian_beta0 at the boundary"
                .into(),
        ));
    }
    let gamma = (p.beta / p.alpha).sqrt();
    let sab = (p.alpha * p.beta).sqrt();
    let q = (1.0 + sab) / (1.0 - sab);
    let (x, a) = build_xp(gamma, q, n);
    let x2 = x.matmul(&x);
    let a2 = a.matmul(&a);
    let mut h = FockMatrix::zeros(n);
    h.add_scaled(&x2, 0.5);
    h.add_scaled(&a2, -0.5);
    h.add_scaled(&x, -p.efield);
    Ok(h)
}

/// Interior residual of [X, P] - i(1 + alpha X^2 + beta P^2) for the
/// general-branch matrices, i.e. max |(XA - AX) - (I + alpha X^2 -
/// beta A^2)| over the interior block, relative to the magnitude of
/// the right-hand side there. Roundoff-sized for every dimension; the
/// ladder entries grow like [n]_q, so an absolute residual would not
/// be scale-free.
pub fn commutator_residual(p: &Deform1DParams, n: usize) -> Result<f64> {
    if p.alpha <= 0.0 || p.beta <= 0.0 {
        return Err(Error::Domain("commutator check is for the general branch".into()));
    }
    let gamma = (p.beta / p.alpha).sqrt();
    let sab = (p.alpha * p.beta).sqrt();
    let q = (1.0 + sab) / (1.0 - sab);
    let (x, a) = build_xp(gamma, q, n);
    let mut rhs = FockMatrix::zeros(n);
    rhs.add_scaled(&x.matmul(&x), p.alpha);
    rhs.add_scaled(&a.matmul(&a), -p.beta);
    for i in 0..n {
        let v = rhs.at(i, i) + 1.0;
        rhs.set(i, i, v);
    }
    let mut comm = x.matmul(&a);
    comm.add_scaled(&a.matmul(&x), -1.0);
    comm.add_scaled(&rhs, -1.0);
    Ok(comm.interior_max_abs() / rhs.interior_max_abs().max(1.0))
}

/// Conventional ladder at basis frequency omega:
/// x = (a + a')/sqrt(2 omega), p = i A_p with A_p = sqrt(omega/2)(a' - a).
/// Any omega > 0 realizes the same operators; it only reshapes the
/// basis, which matters for truncation convergence.
fn conventional_xp(omega: f64, n: usize) -> (FockMatrix, FockMatrix) {
    let (b, bdag) = build_ladder(1.0, n);
    let cx = 1.0 / (2.0 * omega).sqrt();
    let ca = (0.5 * omega).sqrt();
    let mut x = FockMatrix::zeros(n);
    x.add_scaled(&b, cx);
    x.add_scaled(&bdag, cx);
    let mut a = FockMatrix::zeros(n);
    a.add_scaled(&bdag, ca);
    a.add_scaled(&b, -ca);
    (x, a)
}

/// X = x + (beta/2)(p^2 x + x p^2) and A (with P = iA) over
/// conventional bosons; satisfies [X, P] = i(1 + beta P^2)
/// identically.
fn deformed_xa_alpha0(beta: f64, omega: f64, n: usize) -> (FockMatrix, FockMatrix) {
    let (x, ap) = conventional_xp(omega, n);
    let mut p2 = ap.matmul(&ap);
    p2.scale(-1.0);
    let mut xd = x.clone();
    let mut p2x = p2.matmul(&x);
    p2x.add_scaled(&x.matmul(&p2), 1.0);
    xd.add_scaled(&p2x, 0.5 * beta);
    (xd, ap)
}

/// X = x and the A of P = p + (alpha/2)(x^2 p + p x^2); satisfies
/// [X, P] = i(1 + alpha X^2) identically.
fn deformed_xa_beta0(alpha: f64, omega: f64, n: usize) -> (FockMatrix, FockMatrix) {
    let (x, ap) = conventional_xp(omega, n);
    let x2 = x.matmul(&x);
    let mut a = ap.clone();
    let mut x2a = x2.matmul(&ap);
    x2a.add_scaled(&ap.matmul(&x2), 1.0);
    a.add_scaled(&x2a, 0.5 * alpha);
    (x, a)
}

/// Exact alpha = 0 oracle: h = (P^2 + X^2)/2 - E X over the deformed
/// X. omega near 2 converges fastest for beta around 0.2.
pub fn build_hamiltonian_alpha0(beta: f64, efield: f64, omega: f64, n: usize) -> FockMatrix {
    let (xd, ap) = deformed_xa_alpha0(beta, omega, n);
    let mut h = FockMatrix::zeros(n);
    h.add_scaled(&ap.matmul(&ap), -0.5);
    h.add_scaled(&xd.matmul(&xd), 0.5);
    h.add_scaled(&xd, -efield);
    h
}

/// Exact beta = 0 oracle: h = (P^2 + X^2)/2 - E X over the deformed P.
pub fn build_hamiltonian_beta0(alpha: f64, efield: f64, omega: f64, n: usize) -> FockMatrix {
    let (x, a) = deformed_xa_beta0(alpha, omega, n);
    let mut h = FockMatrix::zeros(n);
    h.add_scaled(&a.matmul(&a), -0.5);
    h.add_scaled(&x.matmul(&x), 0.5);
    h.add_scaled(&x, -efield);
    h
}

/// Interior residual of the alpha = 0 realization's algebra:
/// max |(X A - A X) - (I - beta A^2)| over the interior block,
/// relative to the right-hand side there. Roundoff-sized because the
/// realization is exact, not perturbative.
pub fn commutator_residual_alpha0(beta: f64, omega: f64, n: usize) -> f64 {
    let (xd, ap) = deformed_xa_alpha0(beta, omega, n);
    let mut rhs = FockMatrix::zeros(n);
    rhs.add_scaled(&ap.matmul(&ap), -beta);
    for i in 0..n {
        let v = rhs.at(i, i) + 1.0;
        rhs.set(i, i, v);
    }
    let mut comm = xd.matmul(&ap);
    comm.add_scaled(&ap.matmul(&xd), -1.0);
    comm.add_scaled(&rhs, -1.0);
    comm.interior_max_abs() / rhs.interior_max_abs().max(1.0)
}

/// Interior residual of the beta = 0 realization's algebra:
/// max |(X A - A X) - (I + alpha X^2)| over the interior block,
/// relative to the right-hand side there.
pub fn commutator_residual_beta0(alpha: f64, omega: f64, n: usize) -> f64 {
    let (x, a) = deformed_xa_beta0(alpha, omega, n);
    let mut rhs = FockMatrix::zeros(n);
    rhs.add_scaled(&x.matmul(&x), alpha);
    for i in 0..n {
        let v = rhs.at(i, i) + 1.0;
        rhs.set(i, i, v);
    }
    let mut comm = x.matmul(&a);
    comm.add_scaled(&a.matmul(&x), -1.0);
    comm.add_scaled(&rhs, -1.0);
    comm.interior_max_abs() / rhs.interior_max_abs().max(1.0)
}

/// Eigenvalues (ascending) and eigenvectors of a symmetric matrix;
/// component i of vector k at `vectors.at(i, k)`.
pub fn eig_sym(m: &FockMatrix) -> Result<(Vec<f64>, FockMatrix)> {
    let n = m.dim;
    let mut z = m.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    linalg::tred2(n, &mut z.a, &mut d, &mut e);
    linalg::tql2(n, &mut d, &mut e, &mut z.a)?;
    Ok((d, z))
}

/// Eigenvalues only (faster path, no accumulation).
pub fn eig_sym_values(m: &FockMatrix) -> Result<Vec<f64>> {
    let n = m.dim;
    let mut a = m.a.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    linalg::tred1(n, &mut a, &mut d, &mut e);
    linalg::tql1(n, &mut d, &mut e)?;
    Ok(d)
}

/// One certified eigenvalue.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ConvergedLevel {
    pub n: u32,
    pub value: f64,
    pub estimate: f64,
    pub converged: bool,
}

/// Largest entry magnitude the truncated Hamiltonian may reach before
/// roundoff (eps times the norm) starts eating the low spectrum at the
/// target tolerances.
const ENTRY_CAP: f64 = 1.0e8;

fn cap_dimension(gamma: f64, q: f64, n_max: usize) -> usize {
    // dominant diagonal growth: h_nn ~ (q+1)/8 (gamma + 1/gamma)([n] + [n+1])
    let c = 0.125 * (q + 1.0) * (gamma + 1.0 / gamma);
    let mut n = 1usize;
    while n < n_max {
        let top = c * (qnumber(n as u32, q) + qnumber(n as u32 + 1, q));
        if top > ENTRY_CAP {
            break;
        }
        n += 1;
    }
    n
}

/// Low spectrum of the general-branch Hamiltonian with per-level
/// truncation-error estimates.
///
/// Walks the increasing dimensions `nseq` (each clamped so matrix
/// entries stay under the roundoff cap; the basis converges
/// superexponentially in this regime, so the cap costs no accuracy),
/// takes the values at the largest dimension, and reports the
/// last Cauchy difference per level as the error estimate. A level is
/// `converged` when the estimate is at or below `tol`.
pub fn converged_levels(
    p: &Deform1DParams,
    count: usize,
    nseq: &[usize],
    tol: f64,
) -> Result<Vec<ConvergedLevel>> {
    if nseq.len() < 2 {
        return Err(Error::Domain("need at least two dimensions for certification".into()));
    }
    for w in nseq.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::Domain("dimension sequence must increase".into()));
        }
    }
    if p.alpha <= 0.0 || p.beta <= 0.0 {
        return Err(Error::Domain("converged_levels runs the general-branch oracle".into()));
    }
    let gamma = (p.beta / p.alpha).sqrt();
    let sab = (p.alpha * p.beta).sqrt();
    let q = (1.0 + sab) / (1.0 - sab);
    let cap = cap_dimension(gamma, q, *nseq.last().unwrap());
    let mut seq: Vec<usize> = nseq.iter().map(|&n| n.min(cap)).collect();
    seq.dedup();
    if seq.len() == 1 {
        // clamped flat; re-open a certification pair below the cap
        let lo = (seq[0] * 3) / 4;
        seq.insert(0, lo.max(2));
    }
    let smallest = seq[0];
    if count > smallest {
        return Err(Error::Domain(format!(
            "count = {count} exceeds the certifiable window (smallest usable dimension {smallest}; \
             the deformation is too strong for this many levels)"
        )));
    }
    let mut prev: Option<Vec<f64>> = None;
    let mut last: Vec<f64> = Vec::new();
    let mut estimates = vec![f64::INFINITY; count];
    for &n in &seq {
        let h = build_hamiltonian(p, n)?;
        let vals = eig_sym_values(&h)?;
        if let Some(pv) = &prev {
            for i in 0..count {
                estimates[i] = (vals[i] - pv[i]).abs();
            }
        }
        last = vals;
        prev = Some(last.clone());
    }
    Ok((0..count)
        .map(|i| ConvergedLevel {
            n: i as u32,
            value: last[i],
            estimate: estimates[i],
            converged: estimates[i] <= tol,
        })
        .collect())
}

/// Certified low spectrum for an arbitrary builder (used by the
/// boundary-branch oracles, where the dimension cap does not apply).
pub fn converged_levels_with<F>(
    build: F,
    count: usize,
    nseq: &[usize],
    tol: f64,
) -> Result<Vec<ConvergedLevel>>
where
    F: Fn(usize) -> FockMatrix,
{
    if nseq.len() < 2 {
        return Err(Error::Domain("need at least two dimensions for certification".into()));
    }
    let mut prev: Option<Vec<f64>> = None;
    let mut last: Vec<f64> = Vec::new();
    let mut estimates = vec![f64::INFINITY; count];
    for &n in nseq {
        let vals = eig_sym_values(&build(n))?;
        if let Some(pv) = &prev {
            for i in 0..count {
                estimates[i] = (vals[i] - pv[i]).abs();
            }
        }
        last = vals;
        prev = Some(last.clone());
    }
    Ok((0..count)
        .map(|i| ConvergedLevel {
            n: i as u32,
            value: last[i],
            estimate: estimates[i],
            converged: estimates[i] <= tol,
        })
        .collect())
}
